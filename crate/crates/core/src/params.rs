use crate::error::{Error, Result};

/// Numerical knobs shared by every evaluator. Cheap to copy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalParams {
    /// Absolute floor for series truncation and quadrature.
    pub target_abs_tol: f64,
    /// Number of explicit terms before the Euler-Maclaurin tail.
    pub euler_maclaurin_shift: usize,
    /// Number of Bernoulli correction terms.
    pub euler_maclaurin_order: usize,
    pub series_max_terms: usize,
    /// Gauss-Legendre nodes per panel in adaptive quadrature.
    pub quadrature_points: usize,
}

impl Default for EvalParams {
    fn default() -> Self {
        EvalParams {
            target_abs_tol: 1e-12,
            euler_maclaurin_shift: 15,
            euler_maclaurin_order: 12,
            series_max_terms: 1_000_000,
            quadrature_points: 64,
        }
    }
}

impl EvalParams {
    pub fn with_tol(self, target_abs_tol: f64) -> Self {
        EvalParams {
            target_abs_tol,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_tol > 0.0 && self.target_abs_tol.is_finite()) {
            return Err(Error::InvalidParams("target_abs_tol must be positive"));
        }
        if self.euler_maclaurin_shift == 0 {
            return Err(Error::InvalidParams("euler_maclaurin_shift must be >= 1"));
        }
        if self.euler_maclaurin_order == 0 || self.euler_maclaurin_order > 60 {
            return Err(Error::InvalidParams("euler_maclaurin_order must be in 1..=60"));
        }
        if self.series_max_terms == 0 {
            return Err(Error::InvalidParams("series_max_terms must be >= 1"));
        }
        if self.quadrature_points < 4 || self.quadrature_points % 2 != 0 {
            return Err(Error::InvalidParams("quadrature_points must be even and >= 4"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        assert!(EvalParams::default().validate().is_ok());
        assert!(EvalParams::default().with_tol(0.0).validate().is_err());
    }
}
