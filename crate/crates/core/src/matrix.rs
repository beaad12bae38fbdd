//! Dense matrices over exact rationals.

use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::rational::{format_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{op} needs a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },
    #[error("matrix needs {expected} entries, got {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("index subsets must be strictly increasing, in range and of equal size")]
    BadSubset,
    #[error("order-k norm needs 0 < k <= n, got n = {n}, k = {k}")]
    BadParams { n: usize, k: usize },
    #[error("witness sequence needs 0 < k < n, got n = {n}, k = {k}")]
    WitnessParams { n: usize, k: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("generalized inverse failed its defining identities")]
    InverseCheck,
}

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::EntryCount {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rat) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Convenience for tests and examples: integer rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| Rat::from_integer(BigInt::from(rows[i][j])))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Rat::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        self.entries.chunks(self.cols.max(1)).map(<[Rat]>::to_vec).take(self.rows).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn max_abs(&self) -> Rat {
        self.entries.iter().map(Signed::abs).max().unwrap_or_else(Rat::zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, MatrixError> {
        mat_mul(self, other)
    }

    fn require_square(&self, op: &'static str) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(crate::rational::to_f64).collect()
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.row_vecs() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Matrix file format: `rows cols` on the first line, then row-major entries.
impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for row in self.row_vecs() {
            let cells: Vec<String> = row.iter().map(format_rat).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix, MatrixError> {
    if a.cols != b.rows {
        return Err(MatrixError::DimensionMismatch {
            op: "mat_mul",
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(RatMatrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).fold(Rat::zero(), |acc, t| acc + a.get(i, t) * b.get(t, j))
    }))
}

/// Exact determinant. Rows are first cleared of denominators, then the
/// integer matrix goes through Bareiss elimination, whose divisions are exact.
pub fn det(a: &RatMatrix) -> Result<Rat, MatrixError> {
    a.require_square("det")?;
    let n = a.rows;
    if n == 0 {
        return Ok(Rat::one());
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in a.row_vecs() {
        let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        scale *= &lcm;
        m.push(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect());
    }

    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Rat::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = &m[n - 1][n - 1] * sign;
    Ok(Rat::new(d, scale))
}

/// Determinant of the submatrix on the given rows and columns.
pub fn minor(a: &RatMatrix, rows: &[usize], cols: &[usize]) -> Result<Rat, MatrixError> {
    let valid = |idx: &[usize], bound: usize| {
        idx.windows(2).all(|w| w[0] < w[1]) && idx.iter().all(|&i| i < bound)
    };
    if rows.len() != cols.len() || rows.is_empty() || !valid(rows, a.rows) || !valid(cols, a.cols) {
        return Err(MatrixError::BadSubset);
    }
    det(&a.submatrix(rows, cols))
}

/// Reduced row echelon form and its pivot columns.
pub fn rref(a: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..m.cols {
                m.entries.swap(p * m.cols + j, row * m.cols + j);
            }
        }
        let inv = m.get(row, col).recip();
        for j in 0..m.cols {
            *m.get_mut(row, j) *= &inv;
        }
        for r in 0..m.rows {
            if r != row && !m.get(r, col).is_zero() {
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let delta = &factor * m.get(row, j);
                    *m.get_mut(r, j) -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

pub fn rank(a: &RatMatrix) -> usize {
    rref(a).1.len()
}

/// Gauss–Jordan inverse of a square matrix.
pub fn inverse(a: &RatMatrix) -> Result<RatMatrix, MatrixError> {
    a.require_square("inverse")?;
    let n = a.rows;
    let augmented = RatMatrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else if j - n == i {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    let (reduced, pivots) = rref(&augmented);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(MatrixError::Singular);
    }
    Ok(RatMatrix::from_fn(n, n, |i, j| reduced.get(i, n + j).clone()))
}

/// Full-rank factorisation `a = C·R`: `R` is the nonzero part of the reduced
/// row echelon form, `C` holds the pivot columns of `a`.
pub fn rank_factorization(a: &RatMatrix) -> (RatMatrix, RatMatrix) {
    let (reduced, pivots) = rref(a);
    let r = pivots.len();
    let c = RatMatrix::from_fn(a.rows, r, |i, j| a.get(i, pivots[j]).clone());
    let rr = RatMatrix::from_fn(r, a.cols, |i, j| reduced.get(i, j).clone());
    (c, rr)
}

/// Moore–Penrose inverse `g = Rᵀ(RRᵀ)⁻¹(CᵀC)⁻¹Cᵀ` from a full-rank
/// factorisation. The result is checked against `aga = a` and `gag = g`.
pub fn generalized_inverse(a: &RatMatrix) -> Result<RatMatrix, MatrixError> {
    let (c, r) = rank_factorization(a);
    let g = if r.rows() == 0 {
        RatMatrix::zeros(a.cols, a.rows)
    } else {
        let rt = r.transpose();
        let ct = c.transpose();
        let rrt_inv = inverse(&mat_mul(&r, &rt)?)?;
        let ctc_inv = inverse(&mat_mul(&ct, &c)?)?;
        mat_mul(&mat_mul(&mat_mul(&rt, &rrt_inv)?, &ctc_inv)?, &ct)?
    };
    let aga = mat_mul(&mat_mul(a, &g)?, a)?;
    let gag = mat_mul(&mat_mul(&g, a)?, &g)?;
    if aga != *a || gag != g {
        return Err(MatrixError::InverseCheck);
    }
    Ok(g)
}

/// Random entries `p/q` with `|p| ≤ 9` and `1 ≤ q ≤ 4`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> RatMatrix {
    let entries = (0..rows * cols)
        .map(|_| {
            let p: i64 = rng.gen_range(-9..=9);
            let q: i64 = rng.gen_range(1..=4);
            Rat::new(BigInt::from(p), BigInt::from(q))
        })
        .collect();
    RatMatrix {
        rows,
        cols,
        entries,
    }
}

/// Like [`random_matrix`] but each row is zeroed or copied from an earlier
/// row with some probability, so low-rank matrices show up regularly.
pub fn random_matrix_mixed_rank(rng: &mut impl Rng, n: usize) -> RatMatrix {
    let mut m = random_matrix(rng, n, n);
    for i in 0..n {
        match rng.gen_range(0..6) {
            0 => (0..n).for_each(|j| *m.get_mut(i, j) = Rat::zero()),
            1 if i > 0 => {
                let src = rng.gen_range(0..i);
                let c = Rat::new(BigInt::from(rng.gen_range(-3..=3)), BigInt::from(rng.gen_range(1..=2)));
                for j in 0..n {
                    let v = m.get(src, j) * &c;
                    *m.get_mut(i, j) = v;
                }
            }
            _ => {}
        }
    }
    m
}

/// `diag(c·I_k, 0)` of order `n`.
pub fn block_scalar(n: usize, k: usize, c: &Rat) -> RatMatrix {
    RatMatrix::from_fn(n, n, |i, j| if i == j && i < k { c.clone() } else { Rat::zero() })
}
