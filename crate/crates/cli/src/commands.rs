use std::path::Path;

use num::Zero;
use thiserror::Error;

use semigroup_norm::io::ParseError;
use semigroup_norm::literature::{classify_literature_axioms, Notation};
use semigroup_norm::matrix::{block_scalar, generalized_inverse, rank};
use semigroup_norm::minor_norm::{self, float, witness_sequence, MinorNormParams};
use semigroup_norm::norms::{
    check_submultiplicative, default_pool, parse_pool, random_submultiplicative_norms, GeneratorConfig,
};
use semigroup_norm::property::{run_suite, Proposition, Status};
use semigroup_norm::rational::{format_rat, int, to_f64};
use semigroup_norm::{
    green_structure, natural_order, FiniteSemigroup, MatrixError, NormError, Rat, RatMatrix, SemigroupError,
    ValidationReport,
};

use crate::input;
use crate::report::{
    conclusion, AnalyzeReport, ExactWitness, FloatWitness, FloatWitnessRow, FuzzFailure, FuzzReport, MinorNormReport,
    NormCheckReport, Number, Output, Tally, ValidateReport,
};
use crate::Mode;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Norm(#[from] NormError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

fn refuse(operand: &str, report: ValidationReport) -> Output {
    Output::of(&ValidateReport {
        semigroup: operand.to_string(),
        valid: false,
        report,
    })
}

pub fn validate(operand: &str) -> Result<Output, CliError> {
    let file = input::cayley(operand)?;
    let report = semigroup_norm::semigroup::validate(&file.table)?;
    Ok(Output::of(&ValidateReport {
        semigroup: operand.to_string(),
        valid: report.is_valid(),
        report,
    }))
}

pub fn analyze(operand: &str) -> Result<Output, CliError> {
    let s = match input::semigroup(operand)? {
        Ok(s) => s,
        Err(report) => return Ok(refuse(operand, report)),
    };
    Ok(Output::of(&AnalyzeReport {
        semigroup: operand.to_string(),
        order: s.order(),
        commutative: s.is_commutative(),
        identity: s.identity(),
        group: s.is_group(),
        regular: s.is_regular(),
        idempotents: s.idempotents(),
        inverses: s.elements().map(|a| s.inverse_set(a)).collect(),
        zeros: s.zero_elements(),
        green: green_structure(&s),
        natural_order: natural_order(&s).pairs.into_iter().collect(),
    }))
}

pub fn norm_check(operand: &str, norm: &str, notation: Notation) -> Result<Output, CliError> {
    let s = match input::semigroup(operand)? {
        Ok(s) => s,
        Err(report) => return Ok(refuse(operand, report)),
    };
    let nu = input::norm(norm, &s)?;
    let submultiplicative = check_submultiplicative(&s, &nu)?;
    let propositions = run_suite(&s, &nu)?;
    let axioms = classify_literature_axioms(&s, &nu, notation)?;
    let pass = submultiplicative.passed() && !propositions.iter().any(|v| v.is_fail());
    Ok(Output::of(&NormCheckReport {
        semigroup: operand.to_string(),
        norm_source: norm.to_string(),
        norm: nu,
        submultiplicative,
        propositions,
        axioms,
        pass,
    }))
}

pub fn fuzz(operand: &str, count: usize, seed: u64, pool: Option<&str>) -> Result<Output, CliError> {
    if count == 0 {
        return Err(CliError::Usage("`--count` must be positive".into()));
    }
    let s = match input::semigroup(operand)? {
        Ok(s) => s,
        Err(report) => return Ok(refuse(operand, report)),
    };
    let pool = match pool {
        Some(text) => parse_pool(text)?,
        None => default_pool(),
    };
    let config = GeneratorConfig::new(count, seed).with_pool(pool.clone());
    let generated = random_submultiplicative_norms(&s, &config)?;
    Ok(Output::of(&fuzz_report(operand, &s, seed, &pool, generated)?))
}

fn fuzz_report(
    operand: &str,
    s: &FiniteSemigroup,
    seed: u64,
    pool: &[Rat],
    generated: semigroup_norm::norms::GeneratedNorms,
) -> Result<FuzzReport, CliError> {
    let mut tallies: Vec<Tally> = Proposition::ALL
        .into_iter()
        .map(|proposition| Tally {
            proposition,
            pass: 0,
            fail: 0,
            inapplicable: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (norm_index, nu) in generated.norms.iter().enumerate() {
        for (tally, verdict) in tallies.iter_mut().zip(run_suite(s, nu)?) {
            match verdict.status {
                Status::Pass => tally.pass += 1,
                Status::Inapplicable => tally.inapplicable += 1,
                Status::Fail => {
                    tally.fail += 1;
                    failures.push(FuzzFailure {
                        norm_index,
                        norm: nu.clone(),
                        verdict,
                    });
                }
            }
        }
    }
    let checker_runs = tallies.iter().map(|t| t.pass + t.fail + t.inapplicable).sum();
    let applicable_runs = tallies.iter().map(|t| t.pass + t.fail).sum();
    Ok(FuzzReport {
        semigroup: operand.to_string(),
        order: s.order(),
        seed,
        pool: pool.iter().map(format_rat).collect(),
        requested: generated.requested,
        accepted: generated.accepted(),
        attempts: generated.attempts,
        rejections: generated.rejections,
        checker_runs,
        applicable_runs,
        fail_count: failures.len(),
        tallies,
        pass: failures.is_empty(),
        failures,
    })
}

/// Magnitude against which a float `ν_k` is judged zero: `C(n,k) · max|a_ij|^k`.
fn nu_k_scale(coefficient: f64, a: &[f64], k: usize) -> f64 {
    let m = a.iter().fold(0.0_f64, |acc, x| acc.max(x.abs()));
    coefficient * m.powi(k as i32)
}

pub fn minor_norm(path: &Path, k: usize, mode: Mode) -> Result<Output, CliError> {
    let a = input::matrix(path)?;
    if !a.is_square() {
        return Err(MatrixError::NotSquare {
            op: "minor-norm",
            rows: a.rows(),
            cols: a.cols(),
        }
        .into());
    }
    let n = a.rows();
    let params = MinorNormParams::new(n, k)?;
    let matrix = path.display().to_string();
    let report = match mode {
        Mode::Exact => {
            let nu = minor_norm::nu_k(&a, params)?;
            MinorNormReport {
                matrix,
                mode: "exact",
                n,
                k,
                coefficient: Number::Exact(format_rat(&params.coefficient())),
                in_n_k: !nu.is_zero(),
                nu_k: Number::Exact(format_rat(&nu)),
                rank: rank(&a),
            }
        }
        Mode::Float => {
            let entries = a.to_f64();
            let coefficient = to_f64(&params.coefficient());
            let nu = float::nu_k(&entries, n, k);
            let scale = nu_k_scale(coefficient, &entries, k);
            MinorNormReport {
                matrix,
                mode: "float",
                n,
                k,
                coefficient: Number::Float(coefficient),
                in_n_k: float::nonzero(nu, scale, float::DEFAULT_REL_TOL),
                nu_k: Number::Float(nu),
                rank: float::rank(&entries, n, n, float::DEFAULT_REL_TOL),
            }
        }
    };
    Ok(Output::of(&report))
}

pub fn witness(n: usize, k: usize, m_max: usize, mode: Mode) -> Result<Output, CliError> {
    if k == 0 || k >= n {
        return Err(CliError::Usage(format!(
            "witness needs 0 < k < n, got n = {n}, k = {k}"
        )));
    }
    if m_max == 0 {
        return Err(CliError::Usage("`--m-max` must be positive".into()));
    }
    match mode {
        Mode::Exact => {
            let report = witness_sequence(n, k, m_max)?;
            let conclusion = conclusion(n, k, report.n_k_not_closed);
            Ok(Output::of(&ExactWitness {
                mode: "exact",
                report,
                conclusion,
            }))
        }
        Mode::Float => Ok(Output::of(&float_witness(n, k, m_max)?)),
    }
}

/// The sequence is built exactly; `ν_k` and rank are evaluated in floating point.
fn float_witness(n: usize, k: usize, m_max: usize) -> Result<FloatWitness, CliError> {
    let tol = float::DEFAULT_REL_TOL;
    let coefficient = to_f64(&MinorNormParams::new(n, k)?.coefficient());
    let eval = |x: &RatMatrix| {
        let entries = x.to_f64();
        let nu = float::nu_k(&entries, n, k);
        let member = float::nonzero(nu, nu_k_scale(coefficient, &entries, k), tol);
        (nu, float::rank(&entries, n, n, tol), member)
    };
    let mut sequence = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let x = block_scalar(n, k, &(Rat::from_integer(1.into()) / int(m as i64)));
        let g = generalized_inverse(&x)?;
        let (nu_k, rank, in_n_k) = eval(&x);
        let (nu_k_inverse, _, _) = eval(&g);
        sequence.push(FloatWitnessRow {
            m,
            nu_k,
            rank,
            in_n_k,
            nu_k_inverse,
            product: nu_k * nu_k_inverse,
        });
    }
    let (nu_k_limit, _, limit_in_n_k) = eval(&RatMatrix::zeros(n, n));
    let decreasing = sequence.windows(2).all(|w| w[1].nu_k < w[0].nu_k);
    let n_k_not_closed = sequence.iter().all(|r| r.in_n_k) && decreasing && !limit_in_n_k && nu_k_limit == 0.0;
    Ok(FloatWitness {
        mode: "float",
        n,
        k,
        rel_tol: tol,
        sequence,
        nu_k_limit,
        limit_in_n_k,
        n_k_not_closed,
        conclusion: conclusion(n, k, n_k_not_closed),
    })
}
