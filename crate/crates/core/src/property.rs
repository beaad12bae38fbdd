//! Checkers for the structural consequences of a semigroup norm.
//!
//! Each checker first confirms that `ν` is submultiplicative (otherwise the
//! verdict is [`Status::Inapplicable`]) and then scans the statement
//! exhaustively. The `scan_*` functions skip that guard so the witness logic
//! can be exercised on tables that are not norms.

use num::{One, Zero};
use serde::Serialize;

use crate::green::green_structure;
use crate::norms::{check_submultiplicative, zero_set, NormError, NormTable, Verdict};
use crate::order::natural_order;
use crate::rational::Rat;
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Proposition {
    /// Idempotents have norm 0 or at least 1.
    P2,
    /// The zero set is a subsemigroup.
    P3,
    /// Zero norm spreads over a D-class.
    P4,
    /// `ν(b) ≥ 1/ν(a)` for an inverse `b` of `a`.
    P5,
    /// Nowhere-zero norms on finite groups are at least 1.
    P6,
    /// A zero element of nonzero norm forces `ν ≥ 1`.
    P7,
    /// Zero norm passes down the natural partial order.
    P8,
}

impl Proposition {
    pub const ALL: [Proposition; 7] = [
        Proposition::P2,
        Proposition::P3,
        Proposition::P4,
        Proposition::P5,
        Proposition::P6,
        Proposition::P7,
        Proposition::P8,
    ];

    pub fn summary(self) -> &'static str {
        match self {
            Proposition::P2 => "idempotent e has nu(e) = 0 or nu(e) >= 1",
            Proposition::P3 => "zero set is closed under the product",
            Proposition::P4 => "nu(a) = 0 implies nu(b) = 0 on the D-class of a",
            Proposition::P5 => "b inverse of a, nu(a) != 0 implies nu(b) >= 1/nu(a)",
            Proposition::P6 => "finite group with nu nowhere zero has nu >= 1",
            Proposition::P7 => "zero element z with nu(z) != 0 forces nu >= 1",
            Proposition::P8 => "a <= b and nu(b) = 0 implies nu(a) = 0",
        }
    }
}

impl std::fmt::Display for Proposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

/// Elements involved in a violation and their norm values, index-aligned.
///
/// Layout per proposition:
/// P2 `[e]`, P3 `[a, b, ab]`, P4 `[a, b]` (same D-class, `ν(a) = 0 ≠ ν(b)`),
/// P5 `[a, b]` (`b ∈ V(a)`), P6 `[a]` (`ν(a) < 1`), P7 `[z, x]`, P8 `[a, b]` (`a ≤ b`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<usize>,
    #[serde(with = "crate::rational::serde_rat_vec")]
    pub values: Vec<Rat>,
}

impl Witness {
    fn of(nu: &NormTable, elements: Vec<usize>) -> Self {
        let values = elements.iter().map(|&x| nu[x].clone()).collect();
        Witness { elements, values }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionVerdict {
    pub proposition: Proposition,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl PropositionVerdict {
    fn pass(proposition: Proposition) -> Self {
        Self {
            proposition,
            status: Status::Pass,
            witness: None,
            detail: None,
        }
    }

    fn fail(proposition: Proposition, witness: Witness) -> Self {
        Self {
            proposition,
            status: Status::Fail,
            witness: Some(witness),
            detail: None,
        }
    }

    fn inapplicable(proposition: Proposition, why: impl Into<String>) -> Self {
        Self {
            proposition,
            status: Status::Inapplicable,
            witness: None,
            detail: Some(why.into()),
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

fn guarded(
    p: Proposition,
    s: &FiniteSemigroup,
    nu: &NormTable,
    scan: impl FnOnce(&FiniteSemigroup, &NormTable) -> PropositionVerdict,
) -> Result<PropositionVerdict, NormError> {
    Ok(match check_submultiplicative(s, nu)? {
        Verdict::Pass => scan(s, nu),
        Verdict::Fail { a, b, .. } => PropositionVerdict::inapplicable(
            p,
            format!("table is not submultiplicative at ({a}, {b})"),
        ),
    })
}

pub fn scan_p2(s: &FiniteSemigroup, nu: &NormTable) -> PropositionVerdict {
    let p = Proposition::P2;
    match s
        .idempotents()
        .iter()
        .find(|&e| !nu[e].is_zero() && nu[e] < Rat::one())
    {
        Some(e) => PropositionVerdict::fail(p, Witness::of(nu, vec![e])),
        None => PropositionVerdict::pass(p),
    }
}

pub fn scan_p3(s: &FiniteSemigroup, nu: &NormTable) -> PropositionVerdict {
    let p = Proposition::P3;
    let zeros = zero_set(nu);
    if zeros.is_empty() {
        return PropositionVerdict::pass(p).with_detail("zero set is empty (vacuously closed)");
    }
    for a in zeros.iter() {
        for b in zeros.iter() {
            let ab = s.mul(a, b);
            if !zeros.contains(ab) {
                return PropositionVerdict::fail(p, Witness::of(nu, vec![a, b, ab]));
            }
        }
    }
    PropositionVerdict::pass(p).with_detail(format!("zero set has {} elements", zeros.len()))
}

/// Also covers the contrapositive: a nonzero norm is nonzero across the D-class.
pub fn scan_p4(s: &FiniteSemigroup, nu: &NormTable) -> PropositionVerdict {
    let p = Proposition::P4;
    let green = green_structure(s);
    for class in &green.d_classes.classes {
        let zero = class.iter().find(|&a| nu.is_zero_at(a));
        let nonzero = class.iter().find(|&b| !nu.is_zero_at(b));
        if let (Some(a), Some(b)) = (zero, nonzero) {
            return PropositionVerdict::fail(p, Witness::of(nu, vec![a, b]));
        }
    }
    PropositionVerdict::pass(p)
}

pub fn scan_p5(s: &FiniteSemigroup, nu: &NormTable) -> PropositionVerdict {
    let p = Proposition::P5;
    for a in s.elements().filter(|&a| !nu.is_zero_at(a)) {
        for b in s.inverse_set(a).iter() {
            if &nu[a] * &nu[b] < Rat::one() {
                return PropositionVerdict::fail(p, Witness::of(nu, vec![a, b]));
            }
        }
    }
    PropositionVerdict::pass(p)
}

pub fn scan_p6(s: &FiniteSemigroup, nu: &NormTable) -> PropositionVerdict {
    let p = Proposition::P6;
    if !s.is_group() {
        return PropositionVerdict::inapplicable(p, "semigroup is not a group");
    }
    if let Some(a) = s.elements().find(|&a| nu.is_zero_at(a)) {
        return PropositionVerdict::inapplicable(p, format!("norm vanishes at {a}"));
    }
    match s.elements().find(|&a| nu[a] < Rat::one()) {
        Some(a) => PropositionVerdict::fail(p, Witness::of(nu, vec![a])),
        None => PropositionVerdict::pass(p),
    }
}

pub fn scan_p7(s: &FiniteSemigroup, nu: &NormTable) -> PropositionVerdict {
    let p = Proposition::P7;
    let zeros = s.zero_elements();
    let mut candidates = zeros.left.clone();
    candidates.union_with(&zeros.right);
    let Some(z) = candidates.iter().find(|&z| !nu.is_zero_at(z)) else {
        return PropositionVerdict::inapplicable(p, "no left or right zero with nonzero norm");
    };
    match s.elements().find(|&x| nu[x] < Rat::one()) {
        Some(x) => PropositionVerdict::fail(p, Witness::of(nu, vec![z, x])),
        None => PropositionVerdict::pass(p),
    }
}

pub fn scan_p8(s: &FiniteSemigroup, nu: &NormTable) -> PropositionVerdict {
    let p = Proposition::P8;
    let order = natural_order(s);
    match order
        .pairs
        .iter()
        .find(|&&(a, b)| nu.is_zero_at(b) && !nu.is_zero_at(a))
    {
        Some(&(a, b)) => PropositionVerdict::fail(p, Witness::of(nu, vec![a, b])),
        None => PropositionVerdict::pass(p),
    }
}

pub fn scan(p: Proposition, s: &FiniteSemigroup, nu: &NormTable) -> PropositionVerdict {
    match p {
        Proposition::P2 => scan_p2(s, nu),
        Proposition::P3 => scan_p3(s, nu),
        Proposition::P4 => scan_p4(s, nu),
        Proposition::P5 => scan_p5(s, nu),
        Proposition::P6 => scan_p6(s, nu),
        Proposition::P7 => scan_p7(s, nu),
        Proposition::P8 => scan_p8(s, nu),
    }
}

pub fn check(p: Proposition, s: &FiniteSemigroup, nu: &NormTable) -> Result<PropositionVerdict, NormError> {
    guarded(p, s, nu, |s, nu| scan(p, s, nu))
}

pub fn check_p2_idempotent_dichotomy(s: &FiniteSemigroup, nu: &NormTable) -> Result<PropositionVerdict, NormError> {
    check(Proposition::P2, s, nu)
}

pub fn check_p3_zero_set_subsemigroup(s: &FiniteSemigroup, nu: &NormTable) -> Result<PropositionVerdict, NormError> {
    check(Proposition::P3, s, nu)
}

pub fn check_p4_dclass_zero_propagation(s: &FiniteSemigroup, nu: &NormTable) -> Result<PropositionVerdict, NormError> {
    check(Proposition::P4, s, nu)
}

pub fn check_p5_inverse_bound(s: &FiniteSemigroup, nu: &NormTable) -> Result<PropositionVerdict, NormError> {
    check(Proposition::P5, s, nu)
}

pub fn check_p6_finite_group_bound(s: &FiniteSemigroup, nu: &NormTable) -> Result<PropositionVerdict, NormError> {
    check(Proposition::P6, s, nu)
}

pub fn check_p7_zero_element_bound(s: &FiniteSemigroup, nu: &NormTable) -> Result<PropositionVerdict, NormError> {
    check(Proposition::P7, s, nu)
}

pub fn check_p8_order_zero_downward(s: &FiniteSemigroup, nu: &NormTable) -> Result<PropositionVerdict, NormError> {
    check(Proposition::P8, s, nu)
}

/// All seven checkers in proposition order.
pub fn run_suite(s: &FiniteSemigroup, nu: &NormTable) -> Result<Vec<PropositionVerdict>, NormError> {
    let guard = check_submultiplicative(s, nu)?;
    Ok(Proposition::ALL
        .into_iter()
        .map(|p| match &guard {
            Verdict::Pass => scan(p, s, nu),
            Verdict::Fail { a, b, .. } => PropositionVerdict::inapplicable(
                p,
                format!("table is not submultiplicative at ({a}, {b})"),
            ),
        })
        .collect())
}

/// Re-derives a FAIL verdict straight from the product table, without the
/// scanning code paths. Returns `false` for verdicts that are not FAIL or
/// whose witness does not describe a genuine violation.
pub fn witness_confirms(s: &FiniteSemigroup, nu: &NormTable, verdict: &PropositionVerdict) -> bool {
    let Some(w) = verdict.witness.as_ref().filter(|_| verdict.is_fail()) else {
        return false;
    };
    let e = &w.elements;
    let n = |i: usize| &nu[e[i]];
    let values_match = e.iter().zip(&w.values).all(|(&x, v)| nu[x] == *v);
    if !values_match || e.iter().any(|&x| x >= s.order()) {
        return false;
    }
    let one = Rat::one();
    let mul = |a, b| s.mul(a, b);
    let s1_left = |a: usize| -> Vec<usize> {
        let mut v: Vec<usize> = s.elements().map(|x| mul(x, a)).collect();
        v.push(a);
        v.sort_unstable();
        v.dedup();
        v
    };
    let s1_right = |a: usize| -> Vec<usize> {
        let mut v: Vec<usize> = s.elements().map(|x| mul(a, x)).collect();
        v.push(a);
        v.sort_unstable();
        v.dedup();
        v
    };
    match verdict.proposition {
        Proposition::P2 => e.len() == 1 && mul(e[0], e[0]) == e[0] && !n(0).is_zero() && *n(0) < one,
        Proposition::P3 => {
            e.len() == 3 && mul(e[0], e[1]) == e[2] && n(0).is_zero() && n(1).is_zero() && !n(2).is_zero()
        }
        Proposition::P4 => {
            // D-related: some c with a R c and c L b
            e.len() == 2
                && n(0).is_zero()
                && !n(1).is_zero()
                && s
                    .elements()
                    .any(|c| s1_right(e[0]) == s1_right(c) && s1_left(c) == s1_left(e[1]))
        }
        Proposition::P5 => {
            let (a, b) = (e[0], e[1]);
            e.len() == 2
                && mul(mul(a, b), a) == a
                && mul(mul(b, a), b) == b
                && !n(0).is_zero()
                && n(0) * n(1) < one
        }
        Proposition::P6 => {
            e.len() == 1
                && s.is_group()
                && s.elements().all(|x| !nu[x].is_zero())
                && *n(0) < one
        }
        Proposition::P7 => {
            let z = e[0];
            let is_left = s.elements().all(|x| mul(z, x) == z);
            let is_right = s.elements().all(|x| mul(x, z) == z);
            e.len() == 2 && (is_left || is_right) && !n(0).is_zero() && *n(1) < one
        }
        Proposition::P8 => {
            let (a, b) = (e[0], e[1]);
            let m = s.adjoin_identity();
            let below = m.elements().any(|x| {
                m.elements()
                    .any(|y| m.mul(x, b) == a && m.mul(b, y) == a && m.mul(x, a) == a)
            });
            e.len() == 2 && below && n(1).is_zero() && !n(0).is_zero()
        }
    }
}
