//! `H_r` and `K_r` written through Hurwitz and multiple Hurwitz zeta
//! functions, splitting the bilateral sum at `m = 0`.

use crate::combinatorics::{binomial_f64, factorial_f64, pochhammer_shift_coeffs};
use crate::complex::{ln, powi, ComplexValue, ONE, ZERO};
use crate::error::{Error, Result};
use crate::params::EvalParams;
use crate::special::{hurwitz_zeta, hurwitz_zeta_with, HurwitzMethod};

use super::{check_order, check_upper, mirror_phase};

/// Multiple Hurwitz zeta `ζ_r(s, z) = Σ_{m>=0} binom(m+r-1, r-1) (m+z)^{-s}`
/// and its `s`-derivative, through `ζ_r = 1/(r-1)! Σ_k c_k ζ(s-k, z)`.
pub fn multiple_hurwitz_with_sderiv(
    p: EvalParams,
    r: u32,
    s: ComplexValue,
    z: ComplexValue,
) -> Result<(ComplexValue, ComplexValue)> {
    check_order(r, "zeta_r")?;
    if !(z.re > 0.0) {
        return Err(Error::Domain {
            function: "zeta_r",
            requirement: "Re z > 0",
        });
    }
    let coeffs = pochhammer_shift_coeffs(r, &z);
    let mut value = ZERO;
    let mut deriv = ZERO;
    for (k, ck) in coeffs.iter().enumerate() {
        let (v, d) = hurwitz_zeta_with(p, s - k as f64, z, HurwitzMethod::Auto)?;
        value += *ck * v;
        deriv += *ck * d;
    }
    let inv = 1.0 / factorial_f64(r - 1);
    Ok((value * inv, deriv * inv))
}

pub fn multiple_hurwitz(p: EvalParams, r: u32, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    multiple_hurwitz_with_sderiv(p, r, s, z).map(|v| v.0)
}

/// `(ζ_r(s, z), (-1)^{r-1} e^{-πis} ζ_r(s, r-z))`: the `m >= 0` and
/// `m <= -r` halves of `K_r`. Requires `0 < Re z < r`, `Im z >= 0`.
pub fn k_via_zeta_terms(
    p: EvalParams,
    r: u32,
    s: ComplexValue,
    z: ComplexValue,
) -> Result<(ComplexValue, ComplexValue)> {
    check_order(r, "K")?;
    check_upper(z, "K")?;
    if !(z.re > 0.0 && z.re < r as f64) {
        return Err(Error::Domain {
            function: "k_via_zeta",
            requirement: "0 < Re z < r",
        });
    }
    let direct = multiple_hurwitz(p, r, s, z)?;
    let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
    let mirror = sign * mirror_phase(s) * multiple_hurwitz(p, r, s, r as f64 - z)?;
    Ok((direct, mirror))
}

/// `K_r(s, z) = ζ_r(s, z) + (-1)^{r-1} e^{-πis} ζ_r(s, r-z)`.
pub fn k_via_zeta(p: EvalParams, r: u32, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    let (direct, mirror) = k_via_zeta_terms(p, r, s, z)?;
    Ok(direct + mirror)
}

/// `K_r` with the `m = 0` term split off, usable for `-1 < Re z < r`,
/// `z != 0`: `z^{-s} + Σ_{j=1}^{r} ζ_j(s, 1+z) + (-1)^{r-1} e^{-πis} ζ_r(s, r-z)`.
pub fn k_via_zeta_split(p: EvalParams, r: u32, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "K")?;
    check_upper(z, "K")?;
    if !(z.re > -1.0 && z.re < r as f64) || z == ZERO {
        return Err(Error::Domain {
            function: "k_via_zeta_split",
            requirement: "-1 < Re z < r, z != 0",
        });
    }
    let mut acc = (-s * ln(z)).exp();
    for j in 1..=r {
        acc += multiple_hurwitz(p, j, s, ONE + z)?;
    }
    let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
    acc += sign * mirror_phase(s) * multiple_hurwitz(p, r, s, r as f64 - z)?;
    Ok(acc)
}

/// `H_r(s, z) = Σ_k binom(r-1, k) (-z)^{r-1-k} [ζ(s-k, 1+z) + (-1)^k e^{-πis} ζ(s-k, 1-z)]`
/// (plus `z^{-s}` when `r = 1`), for `-1 < Re z < 1`, `Im z >= 0`.
pub fn h_via_zeta(p: EvalParams, r: u32, s: ComplexValue, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "H")?;
    check_upper(z, "H")?;
    if !(z.re > -1.0 && z.re < 1.0) || (r == 1 && z == ZERO) {
        return Err(Error::Domain {
            function: "h_via_zeta",
            requirement: "-1 < Re z < 1 (z != 0 when r = 1)",
        });
    }
    let phase = mirror_phase(s);
    let mut acc = if r == 1 { (-s * ln(z)).exp() } else { ZERO };
    for k in 0..r {
        let coef = binomial_f64(r - 1, k as i64) * powi(-z, r - 1 - k);
        if coef == ZERO {
            continue;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let sk = s - k as f64;
        acc += coef * (hurwitz_zeta(p, sk, ONE + z)? + sign * phase * hurwitz_zeta(p, sk, ONE - z)?);
    }
    Ok(acc)
}
