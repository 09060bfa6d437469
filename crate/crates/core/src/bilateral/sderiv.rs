//! `s`-derivatives of `ξ`, `H_r`, `K_r` at `s = 1 - n` as finite sums of
//! polylogarithms `Li_j(e^{2πiz})`.

#[cfg(not(feature = "std"))]
use num_traits::Float;
use alloc::vec::Vec;

use crate::complex::{ComplexValue, ZERO};
use crate::error::{Error, Result};
use crate::params::EvalParams;
use crate::special::unit_polylog;

use super::closed::sderiv_weight;
use super::{check_order, check_upper, h_coeffs, k_coeffs};

fn is_real_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re == z.re.round()
}

/// `Σ_j a_j (n+j-1)!/(2πi)^{n+j-1} Li_{n+j}(e^{2πiz})`. A term whose
/// coefficient is exactly zero is skipped even if its `Li` diverges.
fn li_combination(p: EvalParams, coeffs: &[ComplexValue], n: u32, z: ComplexValue) -> Result<ComplexValue> {
    let mut acc = ZERO;
    for (j, a) in coeffs.iter().enumerate() {
        let order = n + j as u32;
        if *a == ZERO {
            continue;
        }
        if order == 1 && is_real_integer(z) {
            return Err(Error::Domain {
                function: "sderiv",
                requirement: "Li_1(1) diverges: e^{2πiz} != 1 when n = 1",
            });
        }
        acc += *a * sderiv_weight(order) * unit_polylog(p, order, z)?;
    }
    Ok(acc)
}

/// `∂ξ/∂s(1-n, z) = (n-1)!/(2πi)^{n-1} Li_n(e^{2πiz})`.
pub fn xi_sderiv_npos(p: EvalParams, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_upper(z, "xi_sderiv")?;
    if n == 0 {
        return Err(Error::Domain {
            function: "xi_sderiv",
            requirement: "n >= 1",
        });
    }
    if is_real_integer(z) {
        return Err(Error::Domain {
            function: "xi_sderiv",
            requirement: "z not an integer",
        });
    }
    li_combination(p, &[crate::complex::ONE], n, z)
}

/// `∂H_r/∂s(1-n, z)` for `Im z > 0` or real `-1 < z < 1`.
pub fn h_sderiv(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "H_sderiv")?;
    check_upper(z, "H_sderiv")?;
    if n == 0 {
        return Err(Error::Domain {
            function: "H_sderiv",
            requirement: "n >= 1",
        });
    }
    if z.im == 0.0 && !(z.re > -1.0 && z.re < 1.0) {
        return Err(Error::Domain {
            function: "H_sderiv",
            requirement: "Im z > 0 or -1 < z < 1",
        });
    }
    let coeffs: Vec<ComplexValue> = h_coeffs(r, z);
    li_combination(p, &coeffs, n, z)
}

/// `∂K_r/∂s(1-n, z)` for `Im z > 0` or real `0 < z < r` (`0 <= z` when `n > 1`).
pub fn k_sderiv(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "K_sderiv")?;
    check_upper(z, "K_sderiv")?;
    if n == 0 {
        return Err(Error::Domain {
            function: "K_sderiv",
            requirement: "n >= 1",
        });
    }
    if z.im == 0.0 {
        let lower_ok = z.re > 0.0 || (z.re == 0.0 && n > 1);
        if !(lower_ok && z.re < r as f64) {
            return Err(Error::Domain {
                function: "K_sderiv",
                requirement: "Im z > 0, or 0 < z < r (0 <= z < r when n > 1)",
            });
        }
    }
    li_combination(p, &k_coeffs(r, z), n, z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, real};
    use core::f64::consts::{LN_2, PI};

    #[test]
    fn xi_sderiv_examples() {
        let p = EvalParams::default();
        let v = xi_sderiv_npos(p, 1, real(0.5)).unwrap();
        assert!((v - real(-LN_2)).norm() < 1e-15);
        let v = xi_sderiv_npos(p, 2, real(0.5)).unwrap();
        let e = real(-PI * PI / 12.0) / c(0.0, 2.0 * PI);
        assert!((v - e).norm() < 1e-15);
        assert!(xi_sderiv_npos(p, 1, real(1.0)).is_err());
    }

    #[test]
    fn zero_and_half_match_closed_forms() {
        let p = EvalParams::default();
        for r in 1..=4 {
            for n in 1..=3 {
                if n + r >= 3 {
                    let a = h_sderiv(p, r, n, real(0.0)).unwrap();
                    let b = super::super::h_sderiv_at_zero(p, r, n).unwrap();
                    assert!((a - b).norm() < 1e-13, "H {r} {n}");
                }
                let a = k_sderiv(p, r, n + 1, real(0.0)).unwrap();
                let b = super::super::k_sderiv_at_zero(p, r, n).unwrap();
                assert!((a - b).norm() < 1e-13, "K {r} {n}");
                let a = h_sderiv(p, r, n, real(0.5)).unwrap();
                let b = super::super::h_sderiv_at_half(p, r, n).unwrap();
                assert!((a - b).norm() < 1e-13, "H half {r} {n}");
                let a = k_sderiv(p, r, n, real(0.5)).unwrap();
                let b = super::super::k_sderiv_at_half(p, r, n).unwrap();
                assert!((a - b).norm() < 1e-13, "K half {r} {n}");
            }
        }
    }

    #[test]
    fn domains() {
        let p = EvalParams::default();
        assert!(h_sderiv(p, 2, 1, real(1.5)).is_err());
        assert!(k_sderiv(p, 2, 1, real(0.0)).is_err());
        assert!(k_sderiv(p, 2, 2, real(0.0)).is_ok());
        assert!(k_sderiv(p, 2, 1, real(2.5)).is_err());
    }
}
