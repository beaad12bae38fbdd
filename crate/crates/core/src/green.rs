//! Green's relations R, L, H and D on a finite semigroup.
//!
//! Principal one-sided ideals are materialised as element sets over S¹ and
//! compared directly. D is the composite R∘L: `a D b` iff some `c` has
//! `a R c` and `c L b`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::semigroup::{ElementSet, FiniteSemigroup, SemigroupError};

/// A partition of `0..order` into disjoint classes, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub classes: Vec<ElementSet>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl Partition {
    /// Groups elements with equal keys.
    pub fn by_key<K: Ord>(order: usize, key: impl Fn(usize) -> K) -> Self {
        let mut groups: BTreeMap<K, ElementSet> = BTreeMap::new();
        for x in 0..order {
            groups.entry(key(x)).or_default().insert(x);
        }
        let mut classes: Vec<ElementSet> = groups.into_values().collect();
        classes.sort_by_key(|c| c.first());
        let mut class_of = vec![0; order];
        for (i, class) in classes.iter().enumerate() {
            for x in class.iter() {
                class_of[x] = i;
            }
        }
        Partition { classes, class_of }
    }

    pub fn class_index(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_of(&self, x: usize) -> &ElementSet {
        &self.classes[self.class_of[x]]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ElementSet::len).collect()
    }

    /// Every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        self.classes.iter().all(|c| {
            let first = c.first().expect("classes are nonempty");
            c.is_subset(coarser.class_of(first))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreenStructure {
    pub r_classes: Partition,
    pub l_classes: Partition,
    pub d_classes: Partition,
    pub h_classes: Partition,
}

/// `aS¹` for every `a`.
pub fn right_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    s.elements()
        .map(|a| {
            let mut ideal: ElementSet = s.elements().map(|x| s.mul(a, x)).collect();
            ideal.insert(a);
            ideal
        })
        .collect()
}

/// `S¹a` for every `a`.
pub fn left_ideals(s: &FiniteSemigroup) -> Vec<ElementSet> {
    s.elements()
        .map(|a| {
            let mut ideal: ElementSet = s.elements().map(|x| s.mul(x, a)).collect();
            ideal.insert(a);
            ideal
        })
        .collect()
}

/// Union of `second`-classes over the `first`-class of each element,
/// i.e. the relation `first ∘ second` as one set per element.
fn compose(first: &Partition, second: &Partition, order: usize) -> Vec<ElementSet> {
    (0..order)
        .map(|a| {
            let mut out = ElementSet::new();
            for c in first.class_of(a).iter() {
                out.union_with(second.class_of(c));
            }
            out
        })
        .collect()
}

pub fn green_structure(s: &FiniteSemigroup) -> GreenStructure {
    let order = s.order();
    let right = right_ideals(s);
    let left = left_ideals(s);
    let r_classes = Partition::by_key(order, |a| right[a].clone());
    let l_classes = Partition::by_key(order, |a| left[a].clone());
    let h_classes = Partition::by_key(order, |a| (right[a].clone(), left[a].clone()));
    let d_sets = compose(&r_classes, &l_classes, order);
    let d_classes = Partition::by_key(order, |a| d_sets[a].clone());
    GreenStructure {
        r_classes,
        l_classes,
        d_classes,
        h_classes,
    }
}

/// D built the other way round, as L∘R. Agrees with `d_classes` on finite semigroups.
pub fn d_relation_l_then_r(s: &FiniteSemigroup, g: &GreenStructure) -> Vec<ElementSet> {
    compose(&g.l_classes, &g.r_classes, s.order())
}

/// D as R∘L, one related set per element.
pub fn d_relation_r_then_l(s: &FiniteSemigroup, g: &GreenStructure) -> Vec<ElementSet> {
    compose(&g.r_classes, &g.l_classes, s.order())
}

pub fn d_class_of<'g>(
    s: &FiniteSemigroup,
    g: &'g GreenStructure,
    a: usize,
) -> Result<&'g ElementSet, SemigroupError> {
    s.check_element(a)?;
    Ok(g.d_classes.class_of(a))
}
