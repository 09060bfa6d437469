//! Library side of the `bizeta` command: argument parsing helpers, function
//! dispatch, the identity registry behind `check`, and table output.

pub mod checks;
pub mod function;
pub mod parse;
pub mod report;
pub mod table;

use bizeta_core::EvalParams;

/// Errors that end a command with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("domain: {0}")]
    Domain(#[from] bizeta_core::Error),
    #[error("domain: point {index} (z = {z}) is outside the domain: {source}")]
    Point {
        index: usize,
        z: String,
        source: bizeta_core::Error,
    },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub const PRECISION_ENV: &str = "BIZETA_PRECISION";

/// Default parameters with `target_abs_tol` taken from `BIZETA_PRECISION`
/// when it is set.
pub fn params_from_env() -> Result<EvalParams, CliError> {
    let base = EvalParams::default();
    match std::env::var(PRECISION_ENV) {
        Ok(v) => {
            let tol: f64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{PRECISION_ENV} must be a number, got {v:?}")))?;
            let p = base.with_tol(tol);
            p.validate()?;
            Ok(p)
        }
        Err(_) => Ok(base),
    }
}
