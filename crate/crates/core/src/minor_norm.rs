//! The order-k minor norm on square matrices,
//! `ν_k(a) = C(n, k) · max |m|` over all order-k minors `m` of `a`,
//! together with the Cauchy–Binet expansion it rests on and the sequence
//! `x_m = diag(I_k / m, 0)` showing that `{a : ν_k(a) ≠ 0}` is not closed.

use itertools::Itertools;
use num::{One, Signed, Zero};
use serde::Serialize;

use crate::matrix::{block_scalar, det, generalized_inverse, mat_mul, minor, rank, MatrixError, RatMatrix};
use crate::rational::{binomial, int, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinorNormParams {
    n: usize,
    k: usize,
}

impl MinorNormParams {
    pub fn new(n: usize, k: usize) -> Result<Self, MatrixError> {
        if k == 0 || k > n {
            return Err(MatrixError::BadParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coefficient(&self) -> Rat {
        binomial(self.n, self.k)
    }
}

/// Strictly increasing `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).combinations(k)
}

fn require_order(a: &RatMatrix, params: MinorNormParams) -> Result<(), MatrixError> {
    if a.shape() == (params.n, params.n) {
        Ok(())
    } else {
        Err(MatrixError::DimensionMismatch {
            op: "nu_k",
            left: a.shape(),
            right: (params.n, params.n),
        })
    }
}

/// Largest `|minor|` of order `k`.
pub fn max_abs_minor(a: &RatMatrix, k: usize) -> Result<Rat, MatrixError> {
    let mut best = Rat::zero();
    for rows in k_subsets(a.rows(), k) {
        for cols in k_subsets(a.cols(), k) {
            let m = minor(a, &rows, &cols)?.abs();
            if m > best {
                best = m;
            }
        }
    }
    Ok(best)
}

pub fn nu_k(a: &RatMatrix, params: MinorNormParams) -> Result<Rat, MatrixError> {
    require_order(a, params)?;
    Ok(params.coefficient() * max_abs_minor(a, params.k)?)
}

/// `a ∈ N_k`, i.e. `ν_k(a) ≠ 0`.
pub fn in_n_k(a: &RatMatrix, params: MinorNormParams) -> Result<bool, MatrixError> {
    Ok(!nu_k(a, params)?.is_zero())
}

/// Both sides of the Cauchy–Binet identity for `alpha` (k×n) and `beta` (n×k):
/// `det(αβ)` and `Σ_p det(α[:, p]) det(β[p, :])` over increasing `k`-subsets `p`.
pub fn cauchy_binet(alpha: &RatMatrix, beta: &RatMatrix) -> Result<(Rat, Rat), MatrixError> {
    let (k, n) = alpha.shape();
    if beta.shape() != (n, k) {
        return Err(MatrixError::DimensionMismatch {
            op: "cauchy_binet",
            left: alpha.shape(),
            right: beta.shape(),
        });
    }
    if k == 0 || k > n {
        return Err(MatrixError::BadParams { n, k });
    }
    let lhs = det(&mat_mul(alpha, beta)?)?;
    let all: Vec<usize> = (0..k).collect();
    let mut rhs = Rat::zero();
    for p in k_subsets(n, k) {
        rhs += minor(alpha, &all, &p)? * minor(beta, &p, &all)?;
    }
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MatrixVerdict {
    Pass { pairs: usize },
    Fail {
        index: usize,
        #[serde(with = "crate::rational::serde_rat")]
        nu_product: Rat,
        #[serde(with = "crate::rational::serde_rat")]
        nu_a: Rat,
        #[serde(with = "crate::rational::serde_rat")]
        nu_b: Rat,
    },
}

/// `ν_k(ab) ≤ ν_k(a)ν_k(b)` for every pair; the first violation is reported by index.
pub fn check_nu_k_submultiplicative(
    n: usize,
    k: usize,
    pairs: &[(RatMatrix, RatMatrix)],
) -> Result<MatrixVerdict, MatrixError> {
    let params = MinorNormParams::new(n, k)?;
    for (index, (a, b)) in pairs.iter().enumerate() {
        let nu_a = nu_k(a, params)?;
        let nu_b = nu_k(b, params)?;
        let nu_product = nu_k(&mat_mul(a, b)?, params)?;
        if nu_product > &nu_a * &nu_b {
            return Ok(MatrixVerdict::Fail {
                index,
                nu_product,
                nu_a,
                nu_b,
            });
        }
    }
    Ok(MatrixVerdict::Pass { pairs: pairs.len() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessRow {
    pub m: usize,
    #[serde(with = "crate::rational::serde_rat")]
    pub nu_k: Rat,
    pub rank: usize,
    pub in_n_k: bool,
    /// `ν_k` of the generalized inverse of `x_m`.
    #[serde(with = "crate::rational::serde_rat")]
    pub nu_k_inverse: Rat,
    #[serde(with = "crate::rational::serde_rat")]
    pub product: Rat,
    /// `ν_k(g_m) ≥ 1 / ν_k(x_m)`.
    pub inverse_bound_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub n: usize,
    pub k: usize,
    #[serde(with = "crate::rational::serde_rat")]
    pub coefficient: Rat,
    pub sequence: Vec<WitnessRow>,
    #[serde(serialize_with = "serialize_matrix")]
    pub limit: RatMatrix,
    #[serde(with = "crate::rational::serde_rat")]
    pub nu_k_limit: Rat,
    pub limit_in_n_k: bool,
    pub strictly_decreasing: bool,
    pub n_k_not_closed: bool,
}

impl WitnessReport {
    /// Re-derives the conclusion from the recorded rows alone.
    pub fn conclusion_from_facts(&self) -> bool {
        let all_in = self.sequence.iter().all(|r| r.in_n_k && !r.nu_k.is_zero());
        let decreasing = self.sequence.windows(2).all(|w| w[1].nu_k < w[0].nu_k);
        all_in && decreasing && self.nu_k_limit.is_zero() && !self.limit_in_n_k
    }
}

fn serialize_matrix<S: serde::Serializer>(m: &RatMatrix, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.rows()))?;
    for row in m.row_vecs() {
        let cells: Vec<String> = row.iter().map(crate::rational::format_rat).collect();
        seq.serialize_element(&cells)?;
    }
    seq.end()
}

/// `x_m = diag(I_k / m, 0)` for `m = 1..=m_max`, each paired with its
/// generalized inverse, and the limit `0`.
pub fn witness_sequence(n: usize, k: usize, m_max: usize) -> Result<WitnessReport, MatrixError> {
    if k == 0 || k >= n || m_max == 0 {
        return Err(MatrixError::WitnessParams { n, k });
    }
    let params = MinorNormParams::new(n, k)?;
    let mut sequence = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let x = block_scalar(n, k, &(Rat::one() / int(m as i64)));
        let g = generalized_inverse(&x)?;
        let nu_x = nu_k(&x, params)?;
        let nu_g = nu_k(&g, params)?;
        let product = &nu_x * &nu_g;
        let inverse_bound_holds = !nu_x.is_zero() && product >= Rat::one();
        sequence.push(WitnessRow {
            m,
            in_n_k: !nu_x.is_zero(),
            rank: rank(&x),
            nu_k: nu_x,
            nu_k_inverse: nu_g,
            product,
            inverse_bound_holds,
        });
    }
    let limit = RatMatrix::zeros(n, n);
    let nu_k_limit = nu_k(&limit, params)?;
    let mut report = WitnessReport {
        n,
        k,
        coefficient: params.coefficient(),
        strictly_decreasing: sequence.windows(2).all(|w| w[1].nu_k < w[0].nu_k),
        sequence,
        limit_in_n_k: !nu_k_limit.is_zero(),
        limit,
        nu_k_limit,
        n_k_not_closed: false,
    };
    report.n_k_not_closed = report.conclusion_from_facts();
    Ok(report)
}

/// Floating-point counterpart for larger matrices: minors by partially
/// pivoted LU, entries with `|x| ≤ rel_tol · max|a_ij|` treated as zero.
pub mod float {
    use super::k_subsets;

    pub const DEFAULT_REL_TOL: f64 = 1e-9;

    pub fn det(m: &mut [f64], n: usize) -> f64 {
        let mut d = 1.0;
        for c in 0..n {
            let p = (c..n)
                .max_by(|&x, &y| m[x * n + c].abs().total_cmp(&m[y * n + c].abs()))
                .expect("nonempty");
            if m[p * n + c] == 0.0 {
                return 0.0;
            }
            if p != c {
                for j in 0..n {
                    m.swap(p * n + j, c * n + j);
                }
                d = -d;
            }
            d *= m[c * n + c];
            for r in c + 1..n {
                let f = m[r * n + c] / m[c * n + c];
                for j in c..n {
                    m[r * n + j] -= f * m[c * n + j];
                }
            }
        }
        d
    }

    fn binomial(n: usize, k: usize) -> f64 {
        (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
    }

    /// `ν_k` of a row-major `n×n` matrix.
    pub fn nu_k(a: &[f64], n: usize, k: usize) -> f64 {
        let mut best: f64 = 0.0;
        let mut buf = vec![0.0; k * k];
        for rows in k_subsets(n, k) {
            for cols in k_subsets(n, k) {
                for (i, &r) in rows.iter().enumerate() {
                    for (j, &c) in cols.iter().enumerate() {
                        buf[i * k + j] = a[r * n + c];
                    }
                }
                best = best.max(det(&mut buf, k).abs());
            }
        }
        binomial(n, k) * best
    }

    pub fn rank(a: &[f64], rows: usize, cols: usize, rel_tol: f64) -> usize {
        let mut m = a.to_vec();
        let scale = m.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
        let tol = rel_tol * scale;
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let p = (r..rows)
                .max_by(|&x, &y| m[x * cols + c].abs().total_cmp(&m[y * cols + c].abs()))
                .expect("nonempty");
            if m[p * cols + c].abs() <= tol {
                continue;
            }
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
            for i in r + 1..rows {
                let f = m[i * cols + c] / m[r * cols + c];
                for j in c..cols {
                    m[i * cols + j] -= f * m[r * cols + j];
                }
            }
            r += 1;
        }
        r
    }

    /// Whether `x` counts as nonzero relative to `scale`.
    pub fn nonzero(x: f64, scale: f64, rel_tol: f64) -> bool {
        x.abs() > rel_tol * scale.max(f64::MIN_POSITIVE)
    }
}
