//! Closed forms at integer `s`: `ξ(n+1, z)` as a polynomial in `cot πz`,
//! the resulting values of `H_r` and `K_r`, and the `s`-derivatives at
//! `z = 0` and `z = 1/2` in terms of Riemann zeta values.

#[cfg(not(feature = "std"))]
use num_traits::Float;
use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use crate::combinatorics::{
    binomial_f64, eulerian_f64, factorial_f64, pochhammer_shift_coeffs, stirling_first_unsigned_f64,
};
use crate::complex::{c, powi, real, ComplexValue, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::params::EvalParams;
use crate::special::{pi_cot_pi, riemann_zeta};

use super::{check_order, check_upper, k_coeffs};

fn xi_one(z: ComplexValue) -> Result<ComplexValue> {
    check_upper(z, "xi")?;
    Ok(PI * I + pi_cot_pi(z)?)
}

fn eulerian_sum(n: u32, pc: ComplexValue) -> ComplexValue {
    // π(cot - i), π(cot + i)
    let minus = pc - PI * I;
    let plus = pc + PI * I;
    let mut acc = ZERO;
    for k in 0..n {
        acc += eulerian_f64(n, k) * powi(minus, k + 1) * powi(plus, n - k);
    }
    acc / factorial_f64(n)
}

/// `ξ(n+1, z) = π^{n+1}/n! Σ_k <n k> (cot πz - i)^{k+1} (cot πz + i)^{n-k}`.
pub fn xi_closed_eulerian(n: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_upper(z, "xi_closed")?;
    let pc = pi_cot_pi(z)?;
    if n == 0 {
        return Ok(PI * I + pc);
    }
    Ok(eulerian_sum(n, pc))
}

/// `ξ(n+1, z)` as a polynomial in `ξ(1, z)`:
/// `1/n! Σ_k Σ_l <n k> binom(k+1, l) (-2πi)^l ξ(1, z)^{n+1-l}`.
pub fn xi_closed_powers(n: u32, z: ComplexValue) -> Result<ComplexValue> {
    let x1 = xi_one(z)?;
    if n == 0 {
        return Ok(x1);
    }
    let m = c(0.0, -2.0 * PI);
    let mut acc = ZERO;
    for k in 0..n {
        let a = eulerian_f64(n, k);
        for l in 0..=(k + 1) {
            acc += a * binomial_f64(k + 1, l as i64) * powi(m, l) * powi(x1, n + 1 - l);
        }
    }
    Ok(acc / factorial_f64(n))
}

/// `ξ(m, z)` for integer `m`: zero for `m <= 0`, closed form otherwise.
pub fn xi_at_integer(m: i64, z: ComplexValue) -> Result<ComplexValue> {
    if m <= 0 {
        check_upper(z, "xi")?;
        return Ok(ZERO);
    }
    xi_closed_eulerian((m - 1) as u32, z)
}

/// `H_r(m, z)` for integer `m` from the closed forms of `ξ`.
pub fn h_at_integer(r: u32, m: i64, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "H")?;
    let mut acc = ZERO;
    for k in 0..r {
        let coef = binomial_f64(r - 1, k as i64) * powi(-z, r - 1 - k);
        acc += coef * xi_at_integer(m - k as i64, z)?;
    }
    Ok(acc)
}

/// `K_r(m, z)` for integer `m` from the closed forms of `ξ`.
pub fn k_at_integer(r: u32, m: i64, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "K")?;
    let mut acc = ZERO;
    for (l, b) in k_coeffs(r, z).into_iter().enumerate() {
        acc += b * xi_at_integer(m - l as i64, z)?;
    }
    Ok(acc)
}

/// `H_r(1, z) = (-z)^{r-1} (πi + π cot πz)`.
pub fn h_at_one(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "H")?;
    Ok(powi(-z, r - 1) * xi_one(z)?)
}

/// `K_r(1, z) = (1-z)_{r-1}/(r-1)! (πi + π cot πz)`.
pub fn k_at_one(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "K")?;
    let rising = crate::combinatorics::rising_factorial(&(ONE - z), r - 1);
    Ok(rising / factorial_f64(r - 1) * xi_one(z)?)
}

/// `H_r(1+p, z)`: the `ξ(1)` term plus Eulerian sums for the rest.
pub fn h_at_one_plus(r: u32, p: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "H")?;
    let pc = pi_cot_pi(z)?;
    let mut acc = binomial_f64(r - 1, p as i64) * powi(-z, r.saturating_sub(p + 1)) * xi_one(z)?;
    for k in 0..p.min(r) {
        let coef = binomial_f64(r - 1, k as i64) * powi(-z, r - 1 - k);
        acc += coef * eulerian_sum(p - k, pc);
    }
    Ok(acc)
}

/// `H_r(r+n, z) = Σ_k binom(r-1, k) (-z)^k ξ(n+k+1, z)`, every term Eulerian.
pub fn h_at_r_plus(r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "H")?;
    check_upper(z, "H")?;
    let pc = pi_cot_pi(z)?;
    let mut acc = ZERO;
    for k in 0..r {
        let order = n + k;
        let x = if order == 0 { PI * I + pc } else { eulerian_sum(order, pc) };
        acc += binomial_f64(r - 1, k as i64) * powi(-z, k) * x;
    }
    Ok(acc)
}

/// `K_r(r+n, z)` through the Stirling expansion with every `ξ` Eulerian.
pub fn k_at_r_plus(r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_order(r, "K")?;
    check_upper(z, "K")?;
    let pc = pi_cot_pi(z)?;
    let mut acc = ZERO;
    for k in 1..=r {
        let st = stirling_first_unsigned_f64(r, k);
        for l in 0..k {
            let order = r + n - l - 1;
            let x = if order == 0 { PI * I + pc } else { eulerian_sum(order, pc) };
            acc += st * binomial_f64(k - 1, l as i64) * powi(-z, k - 1 - l) * x;
        }
    }
    Ok(acc / factorial_f64(r - 1))
}

/// `(j-1)! / (2πi)^{j-1}`.
pub(crate) fn sderiv_weight(j: u32) -> ComplexValue {
    factorial_f64(j - 1) / powi(c(0.0, 2.0 * PI), j - 1)
}

/// `∂H_r/∂s(1-n, 0) = (n+r-2)!/(2πi)^{n+r-2} ζ(n+r-1)`, needs `n + r >= 3`.
pub fn h_sderiv_at_zero(p: EvalParams, r: u32, n: u32) -> Result<ComplexValue> {
    check_order(r, "H_sderiv")?;
    if n == 0 || n + r < 3 {
        return Err(Error::Domain {
            function: "h_sderiv_at_zero",
            requirement: "n >= 1 and n + r >= 3",
        });
    }
    Ok(sderiv_weight(n + r - 1) * riemann_zeta(p, real((n + r - 1) as f64))?)
}

/// `∂K_r/∂s(-n, 0) = 1/(r-1)! Σ_k [r k] (n+k-1)!/(2πi)^{n+k-1} ζ(n+k)`.
pub fn k_sderiv_at_zero(p: EvalParams, r: u32, n: u32) -> Result<ComplexValue> {
    check_order(r, "K_sderiv")?;
    if n == 0 {
        return Err(Error::Domain {
            function: "k_sderiv_at_zero",
            requirement: "n >= 1",
        });
    }
    let mut acc = ZERO;
    for k in 1..=r {
        acc += stirling_first_unsigned_f64(r, k)
            * sderiv_weight(n + k)
            * riemann_zeta(p, real((n + k) as f64))?;
    }
    Ok(acc / factorial_f64(r - 1))
}

/// `(2^{1-m} - 1) ζ(m)`, continued to `-log 2` at `m = 1`.
fn alternating_zeta(p: EvalParams, m: u32) -> Result<f64> {
    if m == 1 {
        return Ok(-LN_2);
    }
    Ok((2f64.powi(1 - m as i32) - 1.0) * riemann_zeta(p, real(m as f64))?.re)
}

/// `∂H_r/∂s(1-n, 1/2)`.
pub fn h_sderiv_at_half(p: EvalParams, r: u32, n: u32) -> Result<ComplexValue> {
    check_order(r, "H_sderiv")?;
    if n == 0 {
        return Err(Error::Domain {
            function: "h_sderiv_at_half",
            requirement: "n >= 1",
        });
    }
    let mut acc = ZERO;
    for k in 0..r {
        let half_pow = (-2f64).powi(k as i32 + 1 - r as i32);
        acc += sderiv_weight(n + k)
            * binomial_f64(r - 1, k as i64)
            * half_pow
            * alternating_zeta(p, n + k)?;
    }
    Ok(acc)
}

/// `∂K_r/∂s(1-n, 1/2)`.
pub fn k_sderiv_at_half(p: EvalParams, r: u32, n: u32) -> Result<ComplexValue> {
    check_order(r, "K_sderiv")?;
    if n == 0 {
        return Err(Error::Domain {
            function: "k_sderiv_at_half",
            requirement: "n >= 1",
        });
    }
    let zetas: Vec<f64> = (0..r).map(|l| alternating_zeta(p, n + l)).collect::<Result<_>>()?;
    let mut acc = ZERO;
    for k in 1..=r {
        let st = stirling_first_unsigned_f64(r, k);
        for l in 0..k {
            let half_pow = (-2f64).powi(l as i32 + 1 - k as i32);
            acc += st
                * binomial_f64(k - 1, l as i64)
                * sderiv_weight(n + l)
                * half_pow
                * zetas[l as usize];
        }
    }
    Ok(acc / factorial_f64(r - 1))
}

/// `K_r(1, z)` through the shift coefficients of `(m+1)_{r-1}`; used to
/// cross-check [`k_at_one`].
pub fn k_at_one_via_shift(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    let coeffs = pochhammer_shift_coeffs(r, &z);
    Ok(coeffs[0] / factorial_f64(r - 1) * xi_one(z)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_two_at_quarter() {
        let v = xi_closed_eulerian(1, real(0.25)).unwrap();
        assert!((v - real(2.0 * PI * PI)).norm() < 1e-13);
    }

    #[test]
    fn forms_agree() {
        for z in [c(0.2, 0.3), c(0.7, 0.0), c(-1.3, 2.0)] {
            for n in 1..=6 {
                let a = xi_closed_eulerian(n, z).unwrap();
                let b = xi_closed_powers(n, z).unwrap();
                assert!((a - b).norm() < 1e-10 * a.norm().max(1.0), "{n} {z}");
            }
        }
    }

    #[test]
    fn h_and_k_at_one() {
        let z = real(0.5);
        assert!((h_at_one(2, z).unwrap() - c(0.0, -PI / 2.0)).norm() < 1e-15);
        assert!((k_at_one(2, z).unwrap() - c(0.0, PI / 2.0)).norm() < 1e-15);
        for r in 1..=4 {
            let z = c(0.3, 0.4);
            assert!((k_at_one(r, z).unwrap() - k_at_one_via_shift(r, z).unwrap()).norm() < 1e-13);
            assert!((h_at_one(r, z).unwrap() - h_at_integer(r, 1, z).unwrap()).norm() < 1e-13);
            assert!((k_at_one(r, z).unwrap() - k_at_integer(r, 1, z).unwrap()).norm() < 1e-13);
        }
    }

    #[test]
    fn displays_match_generic() {
        let z = c(0.35, 0.2);
        for r in 1..=4 {
            for p in 1..r {
                let a = h_at_one_plus(r, p, z).unwrap();
                let b = h_at_integer(r, 1 + p as i64, z).unwrap();
                assert!((a - b).norm() < 1e-10 * b.norm().max(1.0));
            }
            for n in 1..=3 {
                let a = h_at_r_plus(r, n, z).unwrap();
                let b = h_at_integer(r, (r + n) as i64, z).unwrap();
                assert!((a - b).norm() < 1e-10 * b.norm().max(1.0));
                let a = k_at_r_plus(r, n, z).unwrap();
                let b = k_at_integer(r, (r + n) as i64, z).unwrap();
                assert!((a - b).norm() < 1e-10 * b.norm().max(1.0));
            }
        }
    }

    #[test]
    fn sderiv_zero_example() {
        // r = 2, n = 2: 2!/(2πi)^2 ζ(3)
        let p = EvalParams::default();
        let v = h_sderiv_at_zero(p, 2, 2).unwrap();
        let z3 = 1.202_056_903_159_594_3;
        assert!((v - real(-2.0 * z3 / (4.0 * PI * PI))).norm() < 1e-15);
    }
}
