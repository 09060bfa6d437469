use core::f64::consts::PI;

use crate::complex::{c, ln, near_integer, sin_pi, ComplexValue, ONE, ZERO};
use crate::error::{Error, Result};
use crate::params::EvalParams;
use crate::special::{hurwitz_zeta, ln_gamma, POLE_TOL};

/// Riemann zeta. Dirichlet series far right, the functional equation left of
/// `Re s = -2`, Euler-Maclaurin in between.
pub fn riemann_zeta(p: EvalParams, s: ComplexValue) -> Result<ComplexValue> {
    if near_integer(s - 1.0, POLE_TOL) == Some(0) {
        return Err(Error::Pole {
            function: "riemann_zeta",
            at: s,
        });
    }
    if s.re >= 20.0 {
        let mut acc = ZERO;
        for m in (2..=80).rev() {
            acc += (-s * ln(c(m as f64, 0.0))).exp();
        }
        return Ok(ONE + acc);
    }
    if s.re >= -2.0 {
        return hurwitz_zeta(p, s, ONE);
    }
    // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    let factor = (s * ln(c(2.0 * PI, 0.0)) - ln(c(PI, 0.0)) + ln_gamma(1.0 - s)?).exp();
    Ok(factor * sin_pi(0.5 * s) * riemann_zeta(p, 1.0 - s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::real;

    #[test]
    fn known_values() {
        let p = EvalParams::default();
        let z2 = riemann_zeta(p, real(2.0)).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-15);
        let zm1 = riemann_zeta(p, real(-1.0)).unwrap();
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-15);
        let zm7 = riemann_zeta(p, real(-7.0)).unwrap();
        assert!((zm7.re - 1.0 / 240.0).abs() < 1e-15);
        assert_eq!(riemann_zeta(p, real(-6.0)).unwrap(), ZERO);
        let z0 = riemann_zeta(p, real(0.0)).unwrap();
        assert!((z0.re + 0.5).abs() < 1e-15);
        assert!(riemann_zeta(p, real(1.0)).is_err());
    }

    #[test]
    fn complex_reference() {
        // ζ(0.5 + 14i) and ζ(-4.5 + 3i) to 17 digits
        let p = EvalParams::default();
        let v = riemann_zeta(p, c(0.5, 14.0)).unwrap();
        assert!((v - c(0.022_241_142_609_993_589, -0.103_258_123_266_450_06)).norm() < 1e-14);
        let v = riemann_zeta(p, c(-4.5, 3.0)).unwrap();
        assert!((v - c(-0.097_018_739_480_072_611, 0.024_608_755_647_534_172)).norm() < 1e-14);
        let w = riemann_zeta(p, c(25.0, 1.0)).unwrap();
        assert!((w - ONE).norm() < 1e-7);
    }
}
