//! Finite semigroups given by a Cayley table, and their element-level algebra.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rat;

/// A set of element indices, kept sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(BTreeSet<usize>);

impl ElementSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, x: usize) -> bool {
        self.0.insert(x)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.0.intersection(&other.0).copied().collect())
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.0.extend(other.0.iter().copied());
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for ElementSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("table is empty; a semigroup needs at least one element")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table is not a valid semigroup ({} out-of-range entries, {} associativity violations)", .0.out_of_range.len(), .0.associativity_violations.len())]
    Invalid(ValidationReport),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("element {index} out of range for a semigroup of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutOfRange {
    pub row: usize,
    pub col: usize,
    pub value: i64,
}

/// Result of scanning a square table against the semigroup axioms.
/// Empty lists mean the table is a valid semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub order: usize,
    pub out_of_range: Vec<OutOfRange>,
    /// Triples `(i, j, k)` with `(ij)k != i(jk)`. Only scanned when every entry is in range.
    pub associativity_violations: Vec<[usize; 3]>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.out_of_range.is_empty() && self.associativity_violations.is_empty()
    }
}

/// Checks a raw integer table. Structural problems (empty, ragged or
/// non-square) are errors; axiom failures are listed in the report.
pub fn validate(table: &[Vec<i64>]) -> Result<ValidationReport, SemigroupError> {
    let order = table.len();
    if order == 0 {
        return Err(SemigroupError::Empty);
    }
    for (row, entries) in table.iter().enumerate() {
        if entries.len() != order {
            return Err(SemigroupError::NotSquare {
                row,
                len: entries.len(),
                expected: order,
            });
        }
    }

    let mut out_of_range = Vec::new();
    for (row, entries) in table.iter().enumerate() {
        for (col, &value) in entries.iter().enumerate() {
            if value < 0 || value as u64 >= order as u64 {
                out_of_range.push(OutOfRange { row, col, value });
            }
        }
    }

    let mut associativity_violations = Vec::new();
    if out_of_range.is_empty() {
        let at = |i: usize, j: usize| table[i][j] as usize;
        for i in 0..order {
            for j in 0..order {
                let ij = at(i, j);
                for k in 0..order {
                    if at(ij, k) != at(i, at(j, k)) {
                        associativity_violations.push([i, j, k]);
                    }
                }
            }
        }
    }

    Ok(ValidationReport {
        order,
        out_of_range,
        associativity_violations,
    })
}

/// A finite semigroup on elements `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<Rat>>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a product table, rejecting anything `validate` flags.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, SemigroupError> {
        let raw: Vec<Vec<i64>> = table
            .iter()
            .map(|row| row.iter().map(|&x| i64::try_from(x).unwrap_or(-1)).collect())
            .collect();
        Self::from_raw(&raw)
    }

    pub fn from_raw(table: &[Vec<i64>]) -> Result<Self, SemigroupError> {
        let report = validate(table)?;
        if !report.is_valid() {
            return Err(SemigroupError::Invalid(report));
        }
        Ok(Self {
            order: table.len(),
            table: table.iter().flatten().map(|&x| x as usize).collect(),
            labels: None,
        })
    }

    /// Builds a semigroup from a product function; the result is still validated.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, SemigroupError> {
        let table = (0..order)
            .map(|i| (0..order).map(|j| mul(i, j)).collect())
            .collect();
        Self::new(table)
    }

    pub fn with_labels(mut self, labels: Vec<Rat>) -> Result<Self, SemigroupError> {
        if labels.len() != self.order {
            return Err(SemigroupError::LabelCount {
                expected: self.order,
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[Rat]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn check_element(&self, a: usize) -> Result<(), SemigroupError> {
        if a < self.order {
            Ok(())
        } else {
            Err(SemigroupError::ElementOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    /// `a` multiplied with itself `n` times (`n >= 1`).
    pub fn power(&self, a: usize, n: usize) -> usize {
        assert!(n >= 1, "power needs a positive exponent");
        (1..n).fold(a, |acc, _| self.mul(acc, a))
    }

    /// The two-sided identity, if one exists.
    pub fn identity(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// S¹: `self` when it already has an identity, otherwise `self` with one
    /// new element (index `order`) adjoined as identity. Labels are dropped.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        if self.identity().is_some() {
            return self.clone();
        }
        let one = self.order;
        let order = self.order + 1;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(match (a == one, b == one) {
                    (true, _) => b,
                    (false, true) => a,
                    (false, false) => self.mul(a, b),
                });
            }
        }
        FiniteSemigroup {
            order,
            table,
            labels: None,
        }
    }

    /// E(S).
    pub fn idempotents(&self) -> ElementSet {
        self.elements().filter(|&e| self.mul(e, e) == e).collect()
    }

    /// V(a) = { b : aba = a and bab = b }.
    pub fn inverse_set(&self, a: usize) -> ElementSet {
        self.elements()
            .filter(|&b| {
                self.mul(self.mul(a, b), a) == a && self.mul(self.mul(b, a), b) == b
            })
            .collect()
    }

    pub fn is_regular_element(&self, a: usize) -> bool {
        self.elements().any(|x| self.mul(self.mul(a, x), a) == a)
    }

    pub fn is_regular(&self) -> bool {
        self.elements().all(|a| self.is_regular_element(a))
    }

    /// Finite semigroups are groups exactly when regular with a single idempotent.
    pub fn is_group(&self) -> bool {
        self.idempotents().len() == 1 && self.is_regular()
    }

    pub fn zero_elements(&self) -> ZeroElements {
        let left: ElementSet = self
            .elements()
            .filter(|&z| self.elements().all(|x| self.mul(z, x) == z))
            .collect();
        let right: ElementSet = self
            .elements()
            .filter(|&z| self.elements().all(|x| self.mul(x, z) == z))
            .collect();
        let two_sided = left.intersection(&right);
        ZeroElements {
            left,
            right,
            two_sided,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroElements {
    pub left: ElementSet,
    pub right: ElementSet,
    pub two_sided: ElementSet,
}
