#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use semigroup_norm::FiniteSemigroup;

/// Subsemigroup of the full transformation monoid on `0..degree` generated by `gens`.
pub fn closure(degree: usize, gens: &[Vec<usize>]) -> FiniteSemigroup {
    let mut elements: Vec<Vec<usize>> = Vec::new();
    let mut seen = BTreeSet::new();
    for g in gens {
        if seen.insert(g.clone()) {
            elements.push(g.clone());
        }
    }
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let next: Vec<usize> = (0..degree).map(|x| g[elements[i][x]]).collect();
            if seen.insert(next.clone()) {
                elements.push(next);
            }
        }
        i += 1;
    }
    let index = |m: &Vec<usize>| elements.iter().position(|e| e == m).unwrap();
    FiniteSemigroup::from_fn(elements.len(), |a, b| {
        index(&(0..degree).map(|x| elements[b][elements[a][x]]).collect())
    })
    .unwrap()
}

/// Random transformation semigroups of degree up to 4 with up to 3 generators.
pub fn arb_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    (1usize..=4).prop_flat_map(|degree| {
        prop::collection::vec(prop::collection::vec(0..degree, degree), 1..=3)
            .prop_map(move |gens| closure(degree, &gens))
    })
}
