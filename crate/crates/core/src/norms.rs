//! Semigroup norms on finite semigroups: `ν: S → ℚ≥0` with `ν(ab) ≤ ν(a)ν(b)`.

use num::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::rational::{format_rat, int, parse_rat, rat, Rat};
use crate::semigroup::{ElementSet, FiniteSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NormError {
    #[error("norm value at element {index} is negative ({})", format_rat(.value))]
    Negative { index: usize, value: Rat },
    #[error("norm table has {found} values but the semigroup has order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("norm family `{0}` needs element labels")]
    MissingLabels(NormFamily),
    #[error("labels of {a}, {b} and their product rule out family `{family}`")]
    LabelsIncompatible { family: NormFamily, a: usize, b: usize },
    #[error("label {} is outside the supported range for exponential norms", format_rat(.0))]
    LabelOutOfRange(Rat),
    #[error("constructed `{family}` table is not submultiplicative at ({a}, {b})")]
    ConstructedNormInvalid { family: NormFamily, a: usize, b: usize },
    #[error("value pool must be a nonempty set of nonnegative rationals")]
    BadPool,
    #[error("norm generator produced no table after {attempts} attempts; widen the value pool")]
    GeneratorExhausted { attempts: usize },
}

/// Element-indexed nonnegative exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct NormTable(#[serde(with = "crate::rational::serde_rat_vec")] Vec<Rat>);

impl NormTable {
    pub fn new(values: Vec<Rat>) -> Result<Self, NormError> {
        if let Some((index, value)) = values.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(NormError::Negative {
                index,
                value: value.clone(),
            });
        }
        Ok(NormTable(values))
    }

    pub fn constant(order: usize, value: Rat) -> Result<Self, NormError> {
        Self::new(vec![value; order])
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero_at(&self, a: usize) -> bool {
        self.0[a].is_zero()
    }

    pub fn matches(&self, s: &FiniteSemigroup) -> Result<(), NormError> {
        if self.len() == s.order() {
            Ok(())
        } else {
            Err(NormError::LengthMismatch {
                expected: s.order(),
                found: self.len(),
            })
        }
    }
}

impl std::ops::Index<usize> for NormTable {
    type Output = Rat;
    fn index(&self, a: usize) -> &Rat {
        &self.0[a]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
#[allow(clippy::large_enum_variant)]
pub enum Verdict {
    Pass,
    Fail {
        a: usize,
        b: usize,
        product: usize,
        #[serde(with = "crate::rational::serde_rat")]
        nu_product: Rat,
        #[serde(with = "crate::rational::serde_rat")]
        nu_a: Rat,
        #[serde(with = "crate::rational::serde_rat")]
        nu_b: Rat,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Exhaustive `ν(ab) ≤ ν(a)ν(b)` scan; reports the first violating pair in row-major order.
pub fn check_submultiplicative(s: &FiniteSemigroup, nu: &NormTable) -> Result<Verdict, NormError> {
    nu.matches(s)?;
    for a in s.elements() {
        for b in s.elements() {
            let product = s.mul(a, b);
            if nu[product] > &nu[a] * &nu[b] {
                return Ok(Verdict::Fail {
                    a,
                    b,
                    product,
                    nu_product: nu[product].clone(),
                    nu_a: nu[a].clone(),
                    nu_b: nu[b].clone(),
                });
            }
        }
    }
    Ok(Verdict::Pass)
}

pub fn is_submultiplicative(s: &FiniteSemigroup, nu: &NormTable) -> bool {
    matches!(check_submultiplicative(s, nu), Ok(Verdict::Pass))
}

/// Z = { x : ν(x) = 0 }.
pub fn zero_set(nu: &NormTable) -> ElementSet {
    (0..nu.len()).filter(|&x| nu.is_zero_at(x)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormFamily {
    Zero,
    One,
    Abs,
    Exp,
    ExpAbs,
}

impl NormFamily {
    pub const ALL: [NormFamily; 5] = [
        NormFamily::Zero,
        NormFamily::One,
        NormFamily::Abs,
        NormFamily::Exp,
        NormFamily::ExpAbs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NormFamily::Zero => "zero",
            NormFamily::One => "one",
            NormFamily::Abs => "abs",
            NormFamily::Exp => "exp",
            NormFamily::ExpAbs => "exp_abs",
        }
    }
}

impl std::fmt::Display for NormFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for NormFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        NormFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown norm family `{s}`"))
    }
}

/// Largest label magnitude accepted by the exponential families.
pub const EXP_LABEL_LIMIT: i64 = 1_000_000;

const EXP_DIGITS: usize = 50;

fn round_to_digits(value: &Rat, digits: usize) -> Rat {
    let scale = Rat::from_integer(num::pow(num::BigInt::from(10), digits));
    (value * &scale).round() / scale
}

/// Rational approximation of `e^x` with relative error below `1e-40` for
/// `|x| ≤ EXP_LABEL_LIMIT`: Taylor series on `|x| / 2^s ≤ 1/2`, then `s`
/// squarings, each rounded to 50 decimal places; negative `x` is inverted.
pub fn exp_approx(x: &Rat) -> Result<Rat, NormError> {
    if x.abs() > int(EXP_LABEL_LIMIT) {
        return Err(NormError::LabelOutOfRange(x.clone()));
    }
    if x.is_zero() {
        return Ok(Rat::one());
    }
    let mut t = x.abs();
    let mut squarings = 0;
    while t > rat(1, 2) {
        t /= int(2);
        squarings += 1;
    }
    let eps = Rat::new(num::BigInt::one(), num::pow(num::BigInt::from(10), EXP_DIGITS + 5));
    let mut sum = Rat::one();
    let mut term = Rat::one();
    let mut n = 1;
    loop {
        term = term * &t / int(n);
        sum += &term;
        if term < eps {
            break;
        }
        n += 1;
    }
    let mut value = round_to_digits(&sum, EXP_DIGITS);
    for _ in 0..squarings {
        value = round_to_digits(&(&value * &value), EXP_DIGITS);
    }
    Ok(if x.is_negative() { value.recip() } else { value })
}

/// Uniform factor applied to inexact exponential tables. It dominates the
/// `(1 + η) / (1 − η)²` slack that rounding can introduce between `ν(ab)`
/// and `ν(a)ν(b)`; scaling a norm by a constant `c ≥ 1` keeps it a norm.
pub fn exp_inflation() -> Rat {
    Rat::one() + Rat::new(num::BigInt::one(), num::pow(num::BigInt::from(10), 30))
}

/// The norms of the introductory examples: constant 0, constant 1, `|label|`,
/// `e^label` and `e^|label|`. Every constructed table is re-checked.
pub fn builtin_norm(s: &FiniteSemigroup, family: NormFamily) -> Result<NormTable, NormError> {
    let labels = || s.labels().ok_or(NormError::MissingLabels(family));
    let values: Vec<Rat> = match family {
        NormFamily::Zero => vec![Rat::zero(); s.order()],
        NormFamily::One => vec![Rat::one(); s.order()],
        NormFamily::Abs => labels()?.iter().map(|l| l.abs()).collect(),
        NormFamily::Exp | NormFamily::ExpAbs => {
            let labels = labels()?;
            let exponent = |l: &Rat| if family == NormFamily::Exp { l.clone() } else { l.abs() };
            for a in s.elements() {
                for b in s.elements() {
                    let ab = s.mul(a, b);
                    if exponent(&labels[ab]) > exponent(&labels[a]) + exponent(&labels[b]) {
                        return Err(NormError::LabelsIncompatible { family, a, b });
                    }
                }
            }
            let exact = labels.iter().all(Zero::is_zero);
            let mut values = labels
                .iter()
                .map(|l| exp_approx(&exponent(l)))
                .collect::<Result<Vec<_>, _>>()?;
            if !exact {
                let c = exp_inflation();
                values.iter_mut().for_each(|v| *v *= &c);
            }
            values
        }
    };
    let table = NormTable::new(values)?;
    match check_submultiplicative(s, &table)? {
        Verdict::Pass => Ok(table),
        Verdict::Fail { a, b, .. } => Err(NormError::ConstructedNormInvalid { family, a, b }),
    }
}

pub fn default_pool() -> Vec<Rat> {
    vec![int(0), rat(1, 2), int(1), int(2)]
}

/// Parses a comma-separated pool such as `0,1/2,1,2`.
pub fn parse_pool(text: &str) -> Result<Vec<Rat>, NormError> {
    let mut pool = text
        .split(',')
        .map(|t| parse_rat(t).map_err(|_| NormError::BadPool))
        .collect::<Result<Vec<_>, _>>()?;
    pool.sort();
    pool.dedup();
    if pool.is_empty() || pool.iter().any(Signed::is_negative) {
        return Err(NormError::BadPool);
    }
    Ok(pool)
}

#[derive(Debug, Clone)]
pub struct GeneratorConfig {
    pub count: usize,
    pub seed: u64,
    pub pool: Vec<Rat>,
    /// Attempts allowed per requested table before that sample is abandoned.
    pub attempts_per_sample: usize,
}

impl GeneratorConfig {
    pub fn new(count: usize, seed: u64) -> Self {
        Self {
            count,
            seed,
            pool: default_pool(),
            attempts_per_sample: 2_000,
        }
    }

    pub fn with_pool(mut self, pool: Vec<Rat>) -> Self {
        self.pool = pool;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GeneratedNorms {
    pub norms: Vec<NormTable>,
    pub requested: usize,
    pub attempts: usize,
    pub rejections: usize,
}

impl GeneratedNorms {
    pub fn accepted(&self) -> usize {
        self.norms.len()
    }
}

/// Draws submultiplicative tables with values from the pool.
///
/// Each attempt assigns values element by element in a random order, picking
/// uniformly among pool values that do not already violate `ν(ab) ≤ ν(a)ν(b)`
/// against assigned elements. A dead end rejects the attempt. Completed
/// tables are re-checked with [`check_submultiplicative`] before acceptance.
pub fn random_submultiplicative_norms(
    s: &FiniteSemigroup,
    config: &GeneratorConfig,
) -> Result<GeneratedNorms, NormError> {
    if config.pool.is_empty() || config.pool.iter().any(Signed::is_negative) {
        return Err(NormError::BadPool);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let preimages = preimages(s);
    let mut out = GeneratedNorms {
        norms: Vec::with_capacity(config.count),
        requested: config.count,
        attempts: 0,
        rejections: 0,
    };
    for _ in 0..config.count {
        for _ in 0..config.attempts_per_sample {
            out.attempts += 1;
            match guided_draw(s, &config.pool, &preimages, &mut rng) {
                Some(table) if is_submultiplicative(s, &table) => {
                    out.norms.push(table);
                    break;
                }
                _ => out.rejections += 1,
            }
        }
    }
    if config.count > 0 && out.norms.is_empty() {
        return Err(NormError::GeneratorExhausted {
            attempts: out.attempts,
        });
    }
    Ok(out)
}

/// `preimages[c]` lists every `(a, b)` with `ab = c`.
fn preimages(s: &FiniteSemigroup) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![Vec::new(); s.order()];
    for a in s.elements() {
        for b in s.elements() {
            out[s.mul(a, b)].push((a, b));
        }
    }
    out
}

fn guided_draw(
    s: &FiniteSemigroup,
    pool: &[Rat],
    preimages: &[Vec<(usize, usize)>],
    rng: &mut impl Rng,
) -> Option<NormTable> {
    let mut order: Vec<usize> = s.elements().collect();
    order.shuffle(rng);
    let mut assigned: Vec<Option<Rat>> = vec![None; s.order()];
    for &v in &order {
        let options: Vec<&Rat> = pool
            .iter()
            .filter(|&val| consistent(s, &assigned, preimages, v, val))
            .collect();
        let pick = options.get(rng.gen_range(0..options.len().max(1)))?;
        assigned[v] = Some((*pick).clone());
    }
    NormTable::new(assigned.into_iter().map(Option::unwrap).collect()).ok()
}

/// Whether `ν(v) = val` is compatible with every fully assigned triple it touches.
fn consistent(
    s: &FiniteSemigroup,
    assigned: &[Option<Rat>],
    preimages: &[Vec<(usize, usize)>],
    v: usize,
    val: &Rat,
) -> bool {
    let value = |x: usize| if x == v { Some(val) } else { assigned[x].as_ref() };
    // v as a factor
    for u in s.elements() {
        let Some(nu_u) = value(u) else { continue };
        for p in [s.mul(v, u), s.mul(u, v)] {
            if let Some(nu_p) = value(p) {
                if nu_p > &(val * nu_u) {
                    return false;
                }
            }
        }
    }
    // v as a product
    preimages[v].iter().all(|&(a, b)| match (value(a), value(b)) {
        (Some(x), Some(y)) => val <= &(x * y),
        _ => true,
    })
}
