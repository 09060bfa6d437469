//! Bilateral zeta functions
//!
//! `H_r(s, z) = Σ_{m∈ℤ} m^{r-1} (m+z)^{-s}`,
//! `K_r(s, z) = Σ_{m∈ℤ} (m+1)_{r-1}/(r-1)! (m+z)^{-s}`,
//! and `ξ = H_1 = K_1`, all with the principal branch of `(m+z)^{-s}` and
//! `Im z >= 0`. The sums converge for `Re s > r`; everything here is the
//! analytic continuation in `s`, evaluated through finite combinations of `ξ`.

mod closed;
mod sderiv;
mod zeta_forms;

#[cfg(not(feature = "std"))]
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::PI;

pub use closed::{
    h_at_integer, h_at_one, h_at_one_plus, h_at_r_plus, h_sderiv_at_half, h_sderiv_at_zero,
    k_at_integer, k_at_one, k_at_one_via_shift, k_at_r_plus, k_sderiv_at_half, k_sderiv_at_zero, xi_at_integer,
    xi_closed_eulerian, xi_closed_powers,
};
pub use sderiv::{h_sderiv, k_sderiv, xi_sderiv_npos};
pub use zeta_forms::{
    h_via_zeta, k_via_zeta, k_via_zeta_split, k_via_zeta_terms,
    multiple_hurwitz, multiple_hurwitz_with_sderiv,
};

use crate::combinatorics::{binomial_f64, factorial_f64, stirling_first_unsigned_f64, stirling_second_f64};
use crate::complex::{c, exact_integer, exp_pi_i, near_integer, powi, ComplexValue, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::params::EvalParams;
use crate::special::{hurwitz_zeta, pi_cot_pi, polylog_exp, recip_gamma, POLE_TOL};

pub(crate) fn check_order(r: u32, function: &'static str) -> Result<()> {
    if r == 0 {
        return Err(Error::Domain {
            function,
            requirement: "r >= 1",
        });
    }
    Ok(())
}

pub(crate) fn check_upper(z: ComplexValue, function: &'static str) -> Result<()> {
    if z.im < 0.0 || !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain {
            function,
            requirement: "Im z >= 0",
        });
    }
    Ok(())
}

fn check_not_integer(z: ComplexValue, function: &'static str) -> Result<()> {
    if near_integer(z, POLE_TOL).is_some() {
        return Err(Error::Domain {
            function,
            requirement: "z not an integer",
        });
    }
    Ok(())
}

/// `e^{-πis}`, exact at integer `s`.
pub fn mirror_phase(s: ComplexValue) -> ComplexValue {
    exp_pi_i(-s)
}

/// `ξ(s, z) = Σ_{m∈ℤ} (m+z)^{-s}`.
///
/// Off the real axis the polylogarithm representation is used. On the real
/// axis `z` is reduced into `(0, 1)` and the Hurwitz pair is used.
pub fn xi(p: EvalParams, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    p.validate()?;
    check_upper(z, "xi")?;
    if z.im == 0.0 {
        check_not_integer(z, "xi")?;
    }
    if let Some(n) = exact_integer(s) {
        if n <= 0 {
            return Ok(ZERO);
        }
        if n == 1 && z.im == 0.0 {
            return Ok(PI * I + pi_cot_pi(z)?);
        }
    }
    if z.im > 0.0 {
        xi_polylog(p, s, z)
    } else {
        xi_hurwitz_pair(p, s, z)
    }
}

/// `ξ(s, z) = (2π)^s / Γ(s) e^{-πis/2} Li_{1-s}(e^{2πiz})`, `Im z > 0`.
pub fn xi_polylog(p: EvalParams, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    if !(z.im > 0.0) {
        return Err(Error::Domain {
            function: "xi_polylog",
            requirement: "Im z > 0",
        });
    }
    let rg = recip_gamma(s);
    if rg == ZERO {
        return Ok(ZERO);
    }
    let frac = z.re - z.re.round();
    let mu = c(-2.0 * PI * z.im, 2.0 * PI * frac);
    let li = polylog_exp(p, ONE - s, mu)?;
    let scale = (s * (2.0 * PI).ln()).exp();
    Ok(scale * rg * exp_pi_i(-0.5 * s) * li)
}

/// `ξ(s, z) = ζ(s, z) + e^{-πis} ζ(s, 1-z)` after reducing `Re z` into
/// `[0, 1)`. When `Re z` is an integer the `m = 0` term is split off.
pub fn xi_hurwitz_pair(p: EvalParams, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    check_upper(z, "xi_hurwitz_pair")?;
    if z.im == 0.0 {
        check_not_integer(z, "xi_hurwitz_pair")?;
    }
    let x = z.re - z.re.floor();
    let w = c(x, z.im);
    let phase = mirror_phase(s);
    if x == 0.0 {
        let head = (-s * crate::complex::ln(w)).exp();
        return Ok(head + hurwitz_zeta(p, s, ONE + w)? + phase * hurwitz_zeta(p, s, ONE - w)?);
    }
    Ok(hurwitz_zeta(p, s, w)? + phase * hurwitz_zeta(p, s, ONE - w)?)
}

/// Coefficients `a_k` with `H_r(s, z) = Σ_k a_k ξ(s-k, z)`.
pub fn h_coeffs(r: u32, z: ComplexValue) -> Vec<ComplexValue> {
    (0..r)
        .map(|k| binomial_f64(r - 1, k as i64) * powi(-z, r - 1 - k))
        .collect()
}

/// Coefficients `b_l` with `K_r(s, z) = Σ_l b_l ξ(s-l, z)`, from the
/// unsigned Stirling expansion of `(m+1)_{r-1}`.
pub fn k_coeffs(r: u32, z: ComplexValue) -> Vec<ComplexValue> {
    let inv = 1.0 / factorial_f64(r - 1);
    (0..r)
        .map(|l| {
            let mut acc = ZERO;
            for k in (l + 1)..=r {
                acc += stirling_first_unsigned_f64(r, k)
                    * binomial_f64(k - 1, l as i64)
                    * powi(-z, k - l - 1);
            }
            acc * inv
        })
        .collect()
}

fn combine(p: EvalParams, coeffs: &[ComplexValue], s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let mut acc = ZERO;
    for (k, a) in coeffs.iter().enumerate() {
        if *a == ZERO {
            continue;
        }
        acc += *a * xi(p, s - k as f64, z)?;
    }
    Ok(acc)
}

/// `H_r(s, z)`.
pub fn h_r(p: EvalParams, r: u32, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "H")?;
    combine(p, &h_coeffs(r, z), s, z)
}

/// `K_r(s, z)`.
pub fn k_r(p: EvalParams, r: u32, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "K")?;
    combine(p, &k_coeffs(r, z), s, z)
}

/// `H_r = Σ_k (-1)^{r-k} (k-1)! {r k} K_k`.
pub fn h_from_k(p: EvalParams, r: u32, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "H")?;
    let mut acc = ZERO;
    for k in 1..=r {
        let sign = if (r - k) % 2 == 0 { 1.0 } else { -1.0 };
        let w = sign * factorial_f64(k - 1) * stirling_second_f64(r, k);
        acc += w * k_r(p, k, s, z)?;
    }
    Ok(acc)
}

/// `K_r = 1/(r-1)! Σ_k [r k] H_k`.
pub fn k_from_h(p: EvalParams, r: u32, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "K")?;
    let mut acc = ZERO;
    for k in 1..=r {
        acc += stirling_first_unsigned_f64(r, k) * h_r(p, k, s, z)?;
    }
    Ok(acc / factorial_f64(r - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::real;

    #[test]
    fn xi_at_half_and_one() {
        let p = EvalParams::default();
        let v = xi(p, ONE, real(0.5)).unwrap();
        assert!((v - PI * I).norm() < 1e-15);
        let v = xi(p, ONE, c(0.5, 1e-3)).unwrap();
        let e = PI * I + pi_cot_pi(c(0.5, 1e-3)).unwrap();
        assert!((v - e).norm() < 1e-12);
    }

    #[test]
    fn xi_vanishes_at_nonpositive_integers() {
        let p = EvalParams::default();
        for n in 0..5 {
            assert_eq!(xi(p, real(-(n as f64)), c(0.3, 0.4)).unwrap(), ZERO);
        }
    }

    #[test]
    fn xi_real_axis_reference() {
        // ξ(2, z) = π² / sin²(πz)
        let p = EvalParams::default();
        for x in [0.1, 0.5, 1.7, -0.3] {
            let v = xi(p, real(2.0), real(x)).unwrap();
            let e = PI * PI / (PI * x).sin().powi(2);
            assert!((v - real(e)).norm() < 1e-12 * e, "{x}: {v}");
        }
    }

    #[test]
    fn branches_agree() {
        let p = EvalParams::default();
        for (s, z) in [
            (c(2.5, 1.0), c(0.3, 0.7)),
            (c(-3.2, 0.5), c(0.8, 0.1)),
            (c(0.4, -2.0), c(0.5, 1.9)),
            (c(5.5, 0.0), c(0.05, 0.3)),
        ] {
            let a = xi_polylog(p, s, z).unwrap();
            let b = xi_hurwitz_pair(p, s, z).unwrap();
            assert!((a - b).norm() < 1e-11 * a.norm().max(1.0), "{s} {z}: {a} {b}");
        }
    }

    #[test]
    fn conversions() {
        let p = EvalParams::default();
        let (s, z) = (c(1.7, 0.3), c(0.25, 0.6));
        for r in 1..=4 {
            let h = h_r(p, r, s, z).unwrap();
            let k = k_r(p, r, s, z).unwrap();
            assert!((h - h_from_k(p, r, s, z).unwrap()).norm() < 1e-10 * h.norm().max(1.0));
            assert!((k - k_from_h(p, r, s, z).unwrap()).norm() < 1e-10 * k.norm().max(1.0));
        }
    }

    #[test]
    fn domain_errors() {
        let p = EvalParams::default();
        assert!(xi(p, real(2.0), c(0.3, -0.1)).is_err());
        assert!(xi(p, real(2.0), real(2.0)).is_err());
        assert!(h_r(p, 0, real(2.0), c(0.3, 0.1)).is_err());
    }
}
