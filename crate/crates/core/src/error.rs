use crate::complex::ComplexValue;

/// Evaluation failures. Nothing in this crate panics on bad numeric input.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function}: pole at {at}")]
    Pole {
        function: &'static str,
        at: ComplexValue,
    },
    #[error("{function}: argument outside domain ({requirement})")]
    Domain {
        function: &'static str,
        requirement: &'static str,
    },
    #[error("{function}: series diverges ({reason})")]
    Divergent {
        function: &'static str,
        reason: &'static str,
    },
    #[error("{function}: no convergence within {limit} steps")]
    NoConvergence { function: &'static str, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParams(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
