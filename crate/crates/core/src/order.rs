//! The natural partial order on an arbitrary semigroup:
//! `a ≤ b` iff there are `x, y ∈ S¹` with `a = xb = by` and `xa = a`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::semigroup::{FiniteSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderRelation {
    #[serde(skip)]
    order: usize,
    /// `(a, b)` means `a ≤ b`.
    pub pairs: BTreeSet<(usize, usize)>,
}

impl OrderRelation {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.pairs.contains(&(a, b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.order).all(|a| self.leq(a, a))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs
            .iter()
            .all(|&(a, b)| a == b || !self.leq(b, a))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| {
            self.pairs
                .range((b, 0)..=(b, usize::MAX))
                .all(|&(_, c)| self.leq(a, c))
        })
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    pub fn is_equality(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| a == b) && self.is_reflexive()
    }
}

/// Decides `a ≤ b` inside `monoid`, which must be S¹ for the semigroup that
/// owns `a` and `b`. The witnesses `x` and `y` are independent, so the pair
/// search splits into two scans over S¹.
fn leq_in(monoid: &FiniteSemigroup, a: usize, b: usize) -> bool {
    let has_x = monoid
        .elements()
        .any(|x| monoid.mul(x, b) == a && monoid.mul(x, a) == a);
    has_x && monoid.elements().any(|y| monoid.mul(b, y) == a)
}

pub fn natural_leq(s: &FiniteSemigroup, a: usize, b: usize) -> Result<bool, SemigroupError> {
    s.check_element(a)?;
    s.check_element(b)?;
    Ok(leq_in(&s.adjoin_identity(), a, b))
}

pub fn natural_order(s: &FiniteSemigroup) -> OrderRelation {
    let monoid = s.adjoin_identity();
    let pairs = s
        .elements()
        .flat_map(|a| s.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| leq_in(&monoid, a, b))
        .collect();
    OrderRelation {
        order: s.order(),
        pairs,
    }
}
