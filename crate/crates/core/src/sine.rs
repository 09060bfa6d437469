//! Generalized primitive and normalized multiple sine functions
//!
//! `𝒮_{r,n}(z) = exp(-∂H_r/∂s(1-n, z))` and `𝒮ᶜ_{r,n}(z) = exp(-∂K_r/∂s(1-n, z))`,
//! the classical primitive multiple sine `𝒮_r`, the Kurokawa-Wakayama
//! `S_{r,n}`, and the identities connecting them.
//!
//! Every `log_*` function returns the analytic logarithm (`-∂H/∂s` or
//! `-∂K/∂s` itself, or the corresponding finite combination), never a
//! principal-value logarithm of an exponential. Identities are stated on
//! these logarithms.

use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::bilateral::{
    h_sderiv, h_sderiv_at_half, h_sderiv_at_zero, k_sderiv, k_sderiv_at_half, k_sderiv_at_zero,
    multiple_hurwitz_with_sderiv,
};
use crate::combinatorics::{
    bernoulli_even_over_factorial, binomial_f64, factorial_f64, multiple_bernoulli_poly,
    rising_factorial, stirling_first_unsigned_f64, stirling_second_f64,
};
use crate::complex::{c, ln, powi, real, ComplexValue, CompensatedSum, I, ONE, ZERO};
use crate::error::{Error, Result};
use crate::params::EvalParams;
use crate::quadrature;
use crate::special::{pi_cot_pi, riemann_zeta};

/// A point `(r, n, z)` at which a generalized sine may be evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinePoint {
    pub r: u32,
    pub n: u32,
    pub z: ComplexValue,
}

impl SinePoint {
    pub fn new(r: u32, n: u32, z: ComplexValue) -> Self {
        SinePoint { r, n, z }
    }

    /// `Im z > 0`, or real `-1 < z < 1`.
    pub fn primitive_in_domain(&self) -> bool {
        self.r >= 1
            && self.n >= 1
            && (self.z.im > 0.0 || (self.z.im == 0.0 && self.z.re > -1.0 && self.z.re < 1.0))
    }

    /// `Im z > 0`, or real `0 < z < r` (`0 <= z` when `n > 1`).
    pub fn normalized_in_domain(&self) -> bool {
        if self.r == 0 || self.n == 0 {
            return false;
        }
        if self.z.im > 0.0 {
            return true;
        }
        let lower = self.z.re > 0.0 || (self.z.re == 0.0 && self.n > 1);
        self.z.im == 0.0 && lower && self.z.re < self.r as f64
    }

    pub fn log_primitive(&self, p: EvalParams) -> Result<ComplexValue> {
        log_gen_primitive_sine(p, self.r, self.n, self.z)
    }

    pub fn log_normalized(&self, p: EvalParams) -> Result<ComplexValue> {
        log_gen_normalized_sine(p, self.r, self.n, self.z)
    }
}

fn sign(e: u32) -> f64 {
    if e % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn need(ok: bool, function: &'static str, requirement: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain { function, requirement })
    }
}

/// `log 𝒮_{r,n}(z) = -∂H_r/∂s(1-n, z)`.
pub fn log_gen_primitive_sine(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    Ok(-h_sderiv(p, r, n, z)?)
}

/// `𝒮_{r,n}(z)`.
pub fn gen_primitive_sine(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    Ok(log_gen_primitive_sine(p, r, n, z)?.exp())
}

/// `log 𝒮ᶜ_{r,n}(z) = -∂K_r/∂s(1-n, z)`.
pub fn log_gen_normalized_sine(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    Ok(-k_sderiv(p, r, n, z)?)
}

/// `𝒮ᶜ_{r,n}(z)`.
pub fn gen_normalized_sine(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    Ok(log_gen_normalized_sine(p, r, n, z)?.exp())
}

/// `log 𝒮_{r,n}(0) = -(n+r-2)!/(2πi)^{n+r-2} ζ(n+r-1)`, `n + r >= 3`.
pub fn log_gen_primitive_sine_at_zero(p: EvalParams, r: u32, n: u32) -> Result<ComplexValue> {
    Ok(-h_sderiv_at_zero(p, r, n)?)
}

/// `log 𝒮ᶜ_{r,n+1}(0)` from the Riemann zeta values `ζ(n+k)`.
pub fn log_gen_normalized_sine_at_zero(p: EvalParams, r: u32, n: u32) -> Result<ComplexValue> {
    Ok(-k_sderiv_at_zero(p, r, n)?)
}

/// `log 𝒮_{r,n}(1/2)` from `(2^{1-m} - 1) ζ(m)`.
pub fn log_gen_primitive_sine_at_half(p: EvalParams, r: u32, n: u32) -> Result<ComplexValue> {
    Ok(-h_sderiv_at_half(p, r, n)?)
}

/// `log 𝒮ᶜ_{r,n}(1/2)` from `(2^{1-m} - 1) ζ(m)`.
pub fn log_gen_normalized_sine_at_half(p: EvalParams, r: u32, n: u32) -> Result<ComplexValue> {
    Ok(-k_sderiv_at_half(p, r, n)?)
}

/// `Σ_k (-1)^{r-k} (k-1)! {r k} log 𝒮ᶜ_{k,n}(z)`, equal to `log 𝒮_{r,n}(z)`.
pub fn log_primitive_from_normalized(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    let mut acc = ZERO;
    for k in 1..=r {
        let w = sign(r - k) * factorial_f64(k - 1) * stirling_second_f64(r, k);
        acc += w * log_gen_normalized_sine(p, k, n, z)?;
    }
    Ok(acc)
}

/// `1/(r-1)! Σ_k [r k] log 𝒮_{k,n}(z)`, equal to `log 𝒮ᶜ_{r,n}(z)`.
pub fn log_normalized_from_primitive(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    let mut acc = ZERO;
    for k in 1..=r {
        acc += stirling_first_unsigned_f64(r, k) * log_gen_primitive_sine(p, k, n, z)?;
    }
    Ok(acc / factorial_f64(r - 1))
}

/// `Σ_k (-l)^k binom(r-1, k) log 𝒮_{r-k,n}(z)`, equal to `log 𝒮_{r,n}(z + l)`.
pub fn log_primitive_shift(p: EvalParams, r: u32, n: u32, z: ComplexValue, l: u32) -> Result<ComplexValue> {
    need(r >= 1, "log_primitive_shift", "r >= 1")?;
    let mut acc = ZERO;
    for k in 0..r {
        let w = binomial_f64(r - 1, k as i64) * (-(l as f64)).powi(k as i32);
        acc += w * log_gen_primitive_sine(p, r - k, n, z)?;
    }
    Ok(acc)
}

/// `log 𝒮ᶜ_{r,n}(z) - Σ_{k<l} log 𝒮ᶜ_{r-1,n}(z+k)`, equal to `log 𝒮ᶜ_{r,n}(z + l)`.
pub fn log_normalized_shift(p: EvalParams, r: u32, n: u32, z: ComplexValue, l: u32) -> Result<ComplexValue> {
    need(r >= 2, "log_normalized_shift", "r >= 2")?;
    let mut acc = log_gen_normalized_sine(p, r, n, z)?;
    for k in 0..l {
        acc -= log_gen_normalized_sine(p, r - 1, n, z + k as f64)?;
    }
    Ok(acc)
}

/// `Σ_p binom(n-1, p) z^{n-1-p} log 𝒮_{r+p,1}(z)`, equal to `log 𝒮_{r,n}(z)`.
pub fn log_primitive_from_first_order(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    need(n >= 1, "log_primitive_from_first_order", "n >= 1")?;
    let mut acc = ZERO;
    for q in 0..n {
        let w = binomial_f64(n - 1, q as i64) * powi(z, n - 1 - q);
        if w == ZERO {
            continue;
        }
        acc += w * log_gen_primitive_sine(p, r + q, 1, z)?;
    }
    Ok(acc)
}

/// The triple sum over `k, p, q` of `(-1)^{k+p-q} (q-1)!/(r-1)! [r k]
/// binom(n-1, p) {k+p q} z^{n-1-p} log 𝒮ᶜ_{q,1}(z)`, equal to `log 𝒮ᶜ_{r,n}(z)`.
pub fn log_normalized_from_first_order(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    need(r >= 1 && n >= 1, "log_normalized_from_first_order", "r >= 1, n >= 1")?;
    let top = r + n - 1;
    let mut logs = alloc::vec::Vec::with_capacity(top as usize);
    for q in 1..=top {
        logs.push(log_gen_normalized_sine(p, q, 1, z)?);
    }
    let mut acc = ZERO;
    for k in 1..=r {
        let a = stirling_first_unsigned_f64(r, k);
        for q_ in 0..n {
            let zp = binomial_f64(n - 1, q_ as i64) * powi(z, n - 1 - q_);
            if zp == ZERO {
                continue;
            }
            for q in 1..=(k + q_) {
                let b = sign(k + q_ - q) * factorial_f64(q - 1) * stirling_second_f64(k + q_, q);
                acc += a * b * zp * logs[(q - 1) as usize];
            }
        }
    }
    Ok(acc / factorial_f64(r - 1))
}

/// `Σ_{k<N} Σ_l binom(r-1, l) k^l N^{n+r-l-2} log 𝒮_{r-l,n}(z + k/N)`,
/// equal to `log 𝒮_{r,n}(Nz)`.
pub fn log_primitive_scaled(p: EvalParams, r: u32, n: u32, z: ComplexValue, big_n: u32) -> Result<ComplexValue> {
    need(big_n >= 1 && r >= 1, "log_primitive_scaled", "N >= 1, r >= 1")?;
    let nf = big_n as f64;
    let mut acc = ZERO;
    for k in 0..big_n {
        let w = z + k as f64 / nf;
        for l in 0..r {
            let e = (n + r) as i32 - l as i32 - 2;
            let coef = binomial_f64(r - 1, l as i64) * (k as f64).powi(l as i32) * nf.powi(e);
            if coef == 0.0 {
                continue;
            }
            acc += coef * log_gen_primitive_sine(p, r - l, n, w)?;
        }
    }
    Ok(acc)
}

/// `N^{n-1} Σ_{0<=k_1..k_r<N} log 𝒮ᶜ_{r,n}(z + (k_1+...+k_r)/N)`, equal to
/// `log 𝒮ᶜ_{r,n}(Nz)`. Tuples are grouped by their sum.
pub fn log_normalized_scaled(p: EvalParams, r: u32, n: u32, z: ComplexValue, big_n: u32) -> Result<ComplexValue> {
    need(big_n >= 1 && r >= 1, "log_normalized_scaled", "N >= 1, r >= 1")?;
    // multiplicities of each total (k_1 + ... + k_r)
    let mut counts = alloc::vec![1.0f64];
    for _ in 0..r {
        let mut next = alloc::vec![0.0f64; counts.len() + big_n as usize - 1];
        for (t, ct) in counts.iter().enumerate() {
            for k in 0..big_n as usize {
                next[t + k] += ct;
            }
        }
        counts = next;
    }
    let nf = big_n as f64;
    let mut acc = ZERO;
    for (t, ct) in counts.iter().enumerate() {
        acc += *ct * log_gen_normalized_sine(p, r, n, z + t as f64 / nf)?;
    }
    Ok(acc * nf.powi(n as i32 - 1))
}

/// `(-z)^{r-1} (πi + π cot πz)`, the logarithmic derivative of `𝒮_{r,1}`.
pub fn log_deriv_primitive_first(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    need(r >= 1, "log_deriv_primitive_first", "r >= 1")?;
    Ok(powi(-z, r - 1) * (PI * I + pi_cot_pi(z)?))
}

/// `(1-z)_{r-1}/(r-1)! (πi + π cot πz)`, the logarithmic derivative of `𝒮ᶜ_{r,1}`.
pub fn log_deriv_normalized_first(r: u32, z: ComplexValue) -> Result<ComplexValue> {
    need(r >= 1, "log_deriv_normalized_first", "r >= 1")?;
    let poch = rising_factorial(&(ONE - z), r - 1) / factorial_f64(r - 1);
    Ok(poch * (PI * I + pi_cot_pi(z)?))
}

const LADDER_REL_TOL: f64 = 1e-11;

/// `log 𝒮_{r,n+1}(0) + n ∫_0^z log 𝒮_{r,n}(t) dt` along the straight
/// segment, equal to `log 𝒮_{r,n+1}(z)`.
pub fn log_primitive_ladder(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    let head = log_gen_primitive_sine_at_zero(p, r, n + 1)?;
    let integral = quadrature::segment(
        |t| log_gen_primitive_sine(p, r, n, t),
        ZERO,
        z,
        LADDER_REL_TOL,
        p.quadrature_points,
    )?;
    Ok(head + n as f64 * integral)
}

/// `log 𝒮ᶜ_{r,n+1}(0) + n ∫_0^z log 𝒮ᶜ_{r,n}(t) dt`, equal to `log 𝒮ᶜ_{r,n+1}(z)`.
pub fn log_normalized_ladder(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    let head = log_gen_normalized_sine_at_zero(p, r, n)?;
    let integral = quadrature::segment(
        |t| log_gen_normalized_sine(p, r, n, t),
        ZERO,
        z,
        LADDER_REL_TOL,
        p.quadrature_points,
    )?;
    Ok(head + n as f64 * integral)
}

/// `n ∫_0^l log 𝒮_{r,n}(z+t) dt`.
pub fn primitive_window_integral(p: EvalParams, r: u32, n: u32, z: ComplexValue, l: u32) -> Result<ComplexValue> {
    need(z.im > 0.0, "primitive_window_integral", "Im z > 0")?;
    let v = quadrature::segment(
        |t| log_gen_primitive_sine(p, r, n, t),
        z,
        z + l as f64,
        LADDER_REL_TOL,
        p.quadrature_points,
    )?;
    Ok(n as f64 * v)
}

/// `n ∫_0^l log 𝒮ᶜ_{r,n}(z+t) dt`.
pub fn normalized_window_integral(p: EvalParams, r: u32, n: u32, z: ComplexValue, l: u32) -> Result<ComplexValue> {
    need(z.im > 0.0, "normalized_window_integral", "Im z > 0")?;
    let v = quadrature::segment(
        |t| log_gen_normalized_sine(p, r, n, t),
        z,
        z + l as f64,
        LADDER_REL_TOL,
        p.quadrature_points,
    )?;
    Ok(n as f64 * v)
}

/// `Σ_{k=1}^{r-1} (-l)^k binom(r-1, k) log 𝒮_{r-k,n+1}(z)`, equal to
/// [`primitive_window_integral`].
pub fn primitive_raabe(p: EvalParams, r: u32, n: u32, z: ComplexValue, l: u32) -> Result<ComplexValue> {
    let mut acc = ZERO;
    for k in 1..r {
        let w = binomial_f64(r - 1, k as i64) * (-(l as f64)).powi(k as i32);
        acc += w * log_gen_primitive_sine(p, r - k, n + 1, z)?;
    }
    Ok(acc)
}

/// `-Σ_{k<l} log 𝒮ᶜ_{r-1,n+1}(z+k)`, equal to [`normalized_window_integral`].
pub fn normalized_raabe(p: EvalParams, r: u32, n: u32, z: ComplexValue, l: u32) -> Result<ComplexValue> {
    need(r >= 2, "normalized_raabe", "r >= 2")?;
    let mut acc = ZERO;
    for k in 0..l {
        acc -= log_gen_normalized_sine(p, r - 1, n + 1, z + k as f64)?;
    }
    Ok(acc)
}

/// `P_r(u) = (1-u) exp(Σ_{j=1}^r u^j/j)`.
pub fn p_factor(r: u32, u: ComplexValue) -> ComplexValue {
    let mut sum = ZERO;
    let mut pw = ONE;
    for j in 1..=r {
        pw *= u;
        sum += pw / j as f64;
    }
    (ONE - u) * sum.exp()
}

/// `π t cot(πt)` with the even series `1 - 2 Σ ζ(2k) t^{2k}` near `t = 0`.
fn pi_t_cot(t: ComplexValue) -> Result<ComplexValue> {
    if t.norm() < 0.05 {
        let b = bernoulli_even_over_factorial();
        let t2 = t * t;
        let mut acc = ZERO;
        let mut pw = ONE;
        let two_pi_sq = 4.0 * PI * PI;
        let mut scale = 1.0;
        // 2ζ(2k) = (-1)^{k+1} (2π)^{2k} B_{2k}/(2k)!
        for k in 1..=6usize {
            pw *= t2;
            scale *= two_pi_sq;
            let z2k = sign(k as u32 + 1) * scale * b[k];
            acc += z2k * pw;
        }
        return Ok(ONE - acc);
    }
    Ok(t * pi_cot_pi(t)?)
}

fn check_classical(r: u32, z: ComplexValue, function: &'static str) -> Result<()> {
    need(r >= 2, function, "r >= 2")?;
    need(
        z.im != 0.0 || z.re.abs() < 1.0,
        function,
        "segment [0, z] must avoid nonzero integers",
    )?;
    need(z.re.is_finite() && z.im.is_finite(), function, "finite z")
}

/// `∫_0^z π t^{r-1} cot(πt) dt` along the straight segment, with `nodes`
/// Gauss-Legendre points per panel.
pub fn log_classical_primitive_sine_with(r: u32, z: ComplexValue, nodes: usize) -> Result<ComplexValue> {
    check_classical(r, z, "classical_primitive_sine")?;
    if z == ZERO {
        return Ok(ZERO);
    }
    quadrature::segment(
        |t| Ok(powi(t, r - 2) * pi_t_cot(t)?),
        ZERO,
        z,
        LADDER_REL_TOL,
        nodes,
    )
}

/// `log 𝒮_r(z) = ∫_0^z π t^{r-1} cot(πt) dt`.
pub fn log_classical_primitive_sine(p: EvalParams, r: u32, z: ComplexValue) -> Result<ComplexValue> {
    log_classical_primitive_sine_with(r, z, p.quadrature_points)
}

/// `𝒮_r(z)`.
pub fn classical_primitive_sine(p: EvalParams, r: u32, z: ComplexValue) -> Result<ComplexValue> {
    Ok(log_classical_primitive_sine(p, r, z)?.exp())
}

/// Truncated Weierstrass product
/// `exp(z^{r-1}/(r-1)) Π_{m<=M} (P_r(z/m) P_r(-z/m)^{(-1)^{r-1}})^{m^{r-1}}`.
pub fn classical_primitive_sine_product(r: u32, z: ComplexValue, factors: usize) -> Result<ComplexValue> {
    check_classical(r, z, "classical_primitive_sine_product")?;
    let mut acc = CompensatedSum::new();
    acc.add(powi(z, r - 1) / (r - 1) as f64);
    let flip = sign(r - 1);
    for m in 1..=factors {
        let mf = m as f64;
        let u = z / mf;
        let weight = mf.powi(r as i32 - 1);
        acc.add(weight * (log_p_factor(r, u) + flip * log_p_factor(r, -u)));
    }
    Ok(acc.value().exp())
}

fn log_p_factor(r: u32, u: ComplexValue) -> ComplexValue {
    if u.norm() < 0.5 {
        // -Σ_{j>r} u^j/j
        let mut acc = ZERO;
        let mut pw = powi(u, r);
        for j in (r + 1)..(r + 80) {
            pw *= u;
            let t = pw / j as f64;
            acc -= t;
            if t.norm() < 1e-18 * acc.norm() {
                break;
            }
        }
        return acc;
    }
    let mut sum = ln(ONE - u);
    let mut pw = ONE;
    for j in 1..=r {
        pw *= u;
        sum += pw / j as f64;
    }
    sum
}

fn check_strip(r: u32, z: ComplexValue, function: &'static str) -> Result<()> {
    need(r >= 1, function, "r >= 1")?;
    need(z.re > 0.0 && z.re < r as f64, function, "0 < Re z < r")
}

/// `log S_{r,n}(z) = -∂ζ_r/∂s(1-n, z) + (-1)^{r+n-1} ∂ζ_r/∂s(1-n, r-z)`.
pub fn log_kurokawa_normalized_sine(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_strip(r, z, "kurokawa_normalized_sine")?;
    need(n >= 1, "kurokawa_normalized_sine", "n >= 1")?;
    let s = real(1.0 - n as f64);
    let (_, d_direct) = multiple_hurwitz_with_sderiv(p, r, s, z)?;
    let (_, d_mirror) = multiple_hurwitz_with_sderiv(p, r, s, r as f64 - z)?;
    Ok(-d_direct + sign(r + n - 1) * d_mirror)
}

/// `S_{r,n}(z)`.
pub fn kurokawa_normalized_sine(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    Ok(log_kurokawa_normalized_sine(p, r, n, z)?.exp())
}

/// `ζ_r(1-n, x) = (-1)^r (n-1)!/(n+r-1)! B_{r,r+n-1}(x)`.
pub fn zeta_r_at_nonpositive(r: u32, n: u32, x: ComplexValue) -> Result<ComplexValue> {
    need(r >= 1 && n >= 1, "zeta_r_at_nonpositive", "r >= 1, n >= 1")?;
    let b = multiple_bernoulli_poly(r, r + n - 1).eval_complex(x);
    Ok(sign(r) * factorial_f64(n - 1) / factorial_f64(n + r - 1) * b)
}

/// `-(r-1)!/(2πi)^{r-1} ζ(r) + (-1)^{r-1} πi z^r/r + (-1)^{r-1} log 𝒮_r(z)`,
/// equal to `log 𝒮_{r,1}(z)`.
pub fn log_primitive_from_classical(p: EvalParams, r: u32, z: ComplexValue) -> Result<ComplexValue> {
    check_classical(r, z, "log_primitive_from_classical")?;
    let weight = factorial_f64(r - 1) / powi(c(0.0, 2.0 * PI), r - 1);
    let zeta = riemann_zeta(p, real(r as f64))?;
    let s = sign(r - 1);
    Ok(-weight * zeta + s * PI * I * powi(z, r) / r as f64 + s * log_classical_primitive_sine(p, r, z)?)
}

/// `(-1)^{r-1} πi (n-1)!/(r+n-1)! B_{r,r+n-1}(z) + log S_{r,n}(z)`, equal to
/// `log 𝒮ᶜ_{r,n}(z)` on `0 < Re z < r`.
pub fn log_normalized_from_kurokawa(p: EvalParams, r: u32, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    let ks = log_kurokawa_normalized_sine(p, r, n, z)?;
    let b = multiple_bernoulli_poly(r, r + n - 1).eval_complex(z);
    let w = sign(r - 1) * factorial_f64(n - 1) / factorial_f64(r + n - 1);
    Ok(w * PI * I * b + ks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilateral::multiple_hurwitz;

    fn close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1.0)
    }

    #[test]
    fn p_factor_values() {
        assert_eq!(p_factor(3, ZERO), ONE);
        let v = p_factor(1, real(0.5));
        assert!((v.re - 0.5 * 0.5f64.exp()).abs() < 1e-15);
    }

    #[test]
    fn primitive_at_zero_r2() {
        let p = EvalParams::default();
        let v = gen_primitive_sine(p, 2, 1, ZERO).unwrap();
        let e = c(0.0, PI / 12.0).exp();
        assert!(close(v, e, 1e-14), "{v} {e}");
        let w = log_gen_primitive_sine_at_zero(p, 2, 1).unwrap();
        assert!(close(w, c(0.0, PI / 12.0), 1e-14));
    }

    #[test]
    fn zeta_r_special_value() {
        let p = EvalParams::default();
        let x = real(0.6);
        let a = zeta_r_at_nonpositive(2, 1, x).unwrap();
        let b = multiple_hurwitz(p, 2, ZERO, x).unwrap();
        assert!(close(a, b, 1e-12), "{a} {b}");
        for (r, n, x) in [(3, 2, c(0.4, 0.2)), (2, 3, c(1.3, 0.0)), (4, 1, c(2.2, -0.5))] {
            let a = zeta_r_at_nonpositive(r, n, x).unwrap();
            let b = multiple_hurwitz(p, r, real(1.0 - n as f64), x).unwrap();
            assert!(close(a, b, 1e-11), "{r} {n}: {a} {b}");
        }
    }

    #[test]
    fn kurokawa_bridge() {
        let p = EvalParams::default();
        for (r, n, z) in [(2, 1, c(0.7, 0.0)), (3, 2, c(1.2, 0.3)), (2, 2, c(0.4, 0.1)), (1, 1, c(0.3, 0.0))] {
            let a = log_gen_normalized_sine(p, r, n, z).unwrap();
            let b = log_normalized_from_kurokawa(p, r, n, z).unwrap();
            assert!(close(a.exp(), b.exp(), 1e-9), "{r} {n} {z}: {a} {b}");
        }
    }

    #[test]
    fn classical_bridge() {
        let p = EvalParams::default();
        for (r, z) in [(2, real(0.4)), (3, c(0.3, 0.2)), (2, c(-1.5, 0.7))] {
            let a = gen_primitive_sine(p, r, 1, z).unwrap();
            let b = log_primitive_from_classical(p, r, z).unwrap().exp();
            assert!(close(a, b, 1e-9), "{r} {z}: {a} {b}");
        }
    }

    #[test]
    fn classical_quadrature_stable() {
        let a = log_classical_primitive_sine_with(2, real(0.5), 64).unwrap();
        let b = log_classical_primitive_sine_with(2, real(0.5), 128).unwrap();
        assert!((a - b).norm() <= 1e-10 * a.norm());
        // ∫_0^{1/2} πt cot πt dt = ln 2 / 2
        assert!((a.re - 0.5 * core::f64::consts::LN_2).abs() < 1e-13);
    }

    #[test]
    fn product_approaches_integral() {
        let p = EvalParams::default();
        let a = classical_primitive_sine(p, 2, real(0.3)).unwrap();
        let b = classical_primitive_sine_product(2, real(0.3), 2000).unwrap();
        assert!((a - b).norm() < 1e-4, "{a} {b}");
    }
}
