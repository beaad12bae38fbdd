//! Resolving command-line operands: builtin names first, then file paths.

use std::path::Path;

use semigroup_norm::io::{parse_cayley, parse_matrix, parse_norm_values, CayleyFile};
use semigroup_norm::norms::{builtin_norm, NormFamily};
use semigroup_norm::semigroup::validate;
use semigroup_norm::{catalog, FiniteSemigroup, NormTable, RatMatrix, ValidationReport};

use crate::commands::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// The raw table behind an operand, before any semigroup checks.
pub fn cayley(operand: &str) -> Result<CayleyFile, CliError> {
    if let Some(s) = catalog::by_name(operand) {
        let table = s
            .rows()
            .into_iter()
            .map(|row| row.into_iter().map(|x| x as i64).collect())
            .collect();
        return Ok(CayleyFile {
            table,
            labels: s.labels().map(<[_]>::to_vec),
        });
    }
    let text = read(Path::new(operand))?;
    parse_cayley(&text).map_err(|source| CliError::Parse {
        path: operand.to_string(),
        source,
    })
}

/// A validated semigroup, or the report explaining why the table is not one.
pub fn semigroup(operand: &str) -> Result<Result<FiniteSemigroup, ValidationReport>, CliError> {
    let file = cayley(operand)?;
    let report = validate(&file.table)?;
    if !report.is_valid() {
        return Ok(Err(report));
    }
    Ok(Ok(file.into_semigroup()?))
}

pub fn norm(operand: &str, s: &FiniteSemigroup) -> Result<NormTable, CliError> {
    if let Ok(family) = operand.parse::<NormFamily>() {
        return Ok(builtin_norm(s, family)?);
    }
    let text = read(Path::new(operand))?;
    let values = parse_norm_values(&text).map_err(|source| CliError::Parse {
        path: operand.to_string(),
        source,
    })?;
    let nu = NormTable::new(values)?;
    nu.matches(s)?;
    Ok(nu)
}

pub fn matrix(path: &Path) -> Result<RatMatrix, CliError> {
    let text = read(path)?;
    parse_matrix(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}
