//! Polylogarithm `Li_α(x) = Σ_{m>=1} x^m / m^α` for `|x| <= 1` and its
//! analytic continuation to `|x| = 1`, `x != 1`.
//!
//! Small `|x|` uses the defining series. Otherwise the expansion in
//! `μ = ln x` is used:
//! `Li_α(e^μ) = Γ(1-α)(-μ)^{α-1} + Σ_k ζ(α-k) μ^k / k!`, `|μ| < 2π`,
//! with the usual harmonic-number limit at positive integer `α`.

#[cfg(not(feature = "std"))]
use num_traits::Float;
use core::f64::consts::PI;

use crate::complex::{c, exact_integer, expm1, ln, pow, ComplexValue, ONE, ZERO};
use crate::error::{Error, Result};
use crate::params::EvalParams;
use crate::special::{complex_gamma, riemann_zeta};

const DIRECT_RADIUS: f64 = 0.5;
const LOG_SERIES_MAX: usize = 200;

pub fn polylog(p: EvalParams, alpha: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    if x == ZERO {
        return Ok(ZERO);
    }
    let r = x.norm();
    if r > 1.0 + 4.0 * f64::EPSILON {
        return Err(Error::Domain {
            function: "polylog",
            requirement: "|x| <= 1",
        });
    }
    let mut mu = ln(x);
    if mu.re > 0.0 {
        mu.re = 0.0;
    }
    polylog_exp(p, alpha, mu)
}

/// `Li_α(e^μ)` for `Re μ <= 0`. Passing `μ` directly keeps points on the
/// unit circle exactly on it.
pub fn polylog_exp(p: EvalParams, alpha: ComplexValue, mu: ComplexValue) -> Result<ComplexValue> {
    p.validate()?;
    if mu.re > 0.0 {
        return Err(Error::Domain {
            function: "polylog",
            requirement: "|x| <= 1",
        });
    }
    // reduce Im μ into (-π, π]
    let turns = ((mu.im - PI) / (2.0 * PI)).ceil();
    let mu = c(mu.re, mu.im - 2.0 * PI * turns);
    if mu == ZERO {
        if alpha.re > 1.0 {
            return riemann_zeta(p, alpha);
        }
        return Err(Error::Divergent {
            function: "polylog",
            reason: "x = 1 requires Re α > 1",
        });
    }
    if mu.re.exp() <= DIRECT_RADIUS {
        return direct(p, alpha, mu, p.series_max_terms);
    }
    log_series(p, alpha, mu)
}

/// The defining series, summed until the tail bound drops below the
/// tolerance. Valid for `|x| < 1`, and on `|x| = 1` when `Re α > 1`.
pub fn polylog_series(p: EvalParams, alpha: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    p.validate()?;
    if x == ZERO {
        return Ok(ZERO);
    }
    let r = x.norm();
    if r > 1.0 + 4.0 * f64::EPSILON || (r >= 1.0 && alpha.re <= 1.0) {
        return Err(Error::Divergent {
            function: "polylog_series",
            reason: "needs |x| < 1, or |x| = 1 with Re α > 1",
        });
    }
    let mut mu = ln(x);
    if mu.re > 0.0 {
        mu.re = 0.0;
    }
    direct(p, alpha, mu, p.series_max_terms)
}

fn direct(p: EvalParams, alpha: ComplexValue, mu: ComplexValue, max_terms: usize) -> Result<ComplexValue> {
    let r = mu.re.exp();
    let sigma = alpha.re;
    let mut sum = ZERO;
    for m in 1..=max_terms {
        let mf = m as f64;
        let term = (mu * mf - alpha * mf.ln()).exp();
        sum += term;
        // tail after m: terms shrink by at most q = r (1 + 1/m)^{max(-σ, 0)}
        let tail = if r < 1.0 {
            let q = r * (1.0 + 1.0 / mf).powf((-sigma).max(0.0));
            if q < 1.0 {
                term.norm() * q / (1.0 - q)
            } else {
                f64::INFINITY
            }
        } else {
            mf.powf(1.0 - sigma) / (sigma - 1.0)
        };
        if tail <= 0.1 * f64::EPSILON * sum.norm() || tail <= 1e-4 * p.target_abs_tol.min(1e-12) {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        function: "polylog_series",
        limit: max_terms,
    })
}

fn log_series(p: EvalParams, alpha: ComplexValue, mu: ComplexValue) -> Result<ComplexValue> {
    if let Some(n) = exact_integer(alpha) {
        if n == 1 {
            return Ok(-ln(-expm1(mu)));
        }
        if n >= 2 {
            return log_series_integer(p, n as usize, mu);
        }
    }
    let mut sum = complex_gamma(ONE - alpha)? * pow(-mu, alpha - 1.0);
    let mut power = ONE;
    let mut quiet = 0;
    for k in 0..LOG_SERIES_MAX {
        if k > 0 {
            power *= mu / k as f64;
        }
        let term = riemann_zeta(p, alpha - k as f64)? * power;
        sum += term;
        if converged(term, sum, &mut quiet, k, alpha) {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        function: "polylog",
        limit: LOG_SERIES_MAX,
    })
}

fn log_series_integer(p: EvalParams, n: usize, mu: ComplexValue) -> Result<ComplexValue> {
    let harmonic: f64 = (1..n).map(|j| 1.0 / j as f64).sum();
    let mut sum = ZERO;
    let mut power = ONE;
    let mut quiet = 0;
    let alpha = c(n as f64, 0.0);
    for k in 0..LOG_SERIES_MAX {
        if k > 0 {
            power *= mu / k as f64;
        }
        let term = if k == n - 1 {
            power * (harmonic - ln(-mu))
        } else {
            riemann_zeta(p, c(n as f64 - k as f64, 0.0))? * power
        };
        sum += term;
        if k >= n && converged(term, sum, &mut quiet, k, alpha) {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence {
        function: "polylog",
        limit: LOG_SERIES_MAX,
    })
}

fn converged(term: ComplexValue, sum: ComplexValue, quiet: &mut usize, k: usize, alpha: ComplexValue) -> bool {
    // terms can still grow while k < -Re α; wait past that point
    if (k as f64) < 2.0 - alpha.re {
        return false;
    }
    if term.norm() <= 1e-17 * sum.norm() || term.norm() < 1e-300 {
        *quiet += 1;
    } else {
        *quiet = 0;
    }
    *quiet >= 3
}

/// `Li_n(e^{2πiz})` for `Im z >= 0`, with `Re z` reduced first.
pub fn unit_polylog(p: EvalParams, n: u32, z: ComplexValue) -> Result<ComplexValue> {
    if z.im < 0.0 {
        return Err(Error::Domain {
            function: "unit_polylog",
            requirement: "Im z >= 0",
        });
    }
    let frac = z.re - z.re.round();
    let mu = c(-2.0 * PI * z.im, 2.0 * PI * frac);
    polylog_exp(p, c(n as f64, 0.0), mu)
}
