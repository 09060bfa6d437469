//! Hurwitz zeta `ζ(s, a) = Σ_{m>=0} (m + a)^{-s}` and its `s`-derivative.
//!
//! Euler-Maclaurin is used for `Re s >= 0`. Further left its
//! explicit terms grow like `N^{1 - Re s}` and cancel, so Hermite's integral
//! representation takes over.

#[cfg(not(feature = "std"))]
use num_traits::Float;
use core::f64::consts::PI;

use crate::combinatorics::bernoulli_even_over_factorial;
use crate::complex::{c, ln, near_integer, ComplexValue, ZERO};
use crate::error::{Error, Result};
use crate::params::EvalParams;
use crate::quadrature::GaussLegendre;
use crate::special::POLE_TOL;

/// Switch point from Euler-Maclaurin to the Hermite integral.
pub const HERMITE_BELOW: f64 = 0.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzMethod {
    Auto,
    EulerMaclaurin,
    Hermite,
}

pub fn hurwitz_zeta(p: EvalParams, s: ComplexValue, a: ComplexValue) -> Result<ComplexValue> {
    hurwitz_zeta_with(p, s, a, HurwitzMethod::Auto).map(|v| v.0)
}

/// `∂ζ(s, a)/∂s`.
pub fn hurwitz_zeta_s_deriv(p: EvalParams, s: ComplexValue, a: ComplexValue) -> Result<ComplexValue> {
    hurwitz_zeta_with(p, s, a, HurwitzMethod::Auto).map(|v| v.1)
}

/// `(ζ(s, a), ∂ζ/∂s(s, a))` with an explicit method choice.
pub fn hurwitz_zeta_with(
    p: EvalParams,
    s: ComplexValue,
    a: ComplexValue,
    method: HurwitzMethod,
) -> Result<(ComplexValue, ComplexValue)> {
    p.validate()?;
    if !(a.re > 0.0) {
        return Err(Error::Domain {
            function: "hurwitz_zeta",
            requirement: "Re a > 0",
        });
    }
    if near_integer(s - 1.0, POLE_TOL) == Some(0) {
        return Err(Error::Pole {
            function: "hurwitz_zeta",
            at: s,
        });
    }
    let use_hermite = match method {
        HurwitzMethod::Auto => s.re < HERMITE_BELOW,
        HurwitzMethod::EulerMaclaurin => false,
        HurwitzMethod::Hermite => true,
    };
    if use_hermite {
        hermite(s, a)
    } else {
        Ok(euler_maclaurin(p, s, a))
    }
}

fn euler_maclaurin(p: EvalParams, s: ComplexValue, a: ComplexValue) -> (ComplexValue, ComplexValue) {
    let mut value = ZERO;
    let mut deriv = ZERO;
    for k in 0..p.euler_maclaurin_shift {
        let l = ln(a + k as f64);
        let t = (-s * l).exp();
        value += t;
        deriv -= l * t;
    }
    let n = a + p.euler_maclaurin_shift as f64;
    let ln_n = ln(n);
    let n_pow = (-s * ln_n).exp();
    let s1 = s - 1.0;
    let integral = n * n_pow / s1;
    value += integral + 0.5 * n_pow;
    deriv += -ln_n * integral - integral / s1 - 0.5 * ln_n * n_pow;

    let bern = bernoulli_even_over_factorial();
    let inv_n2 = (n * n).inv();
    // (s)_{2j-1} and its s-derivative
    let mut poch = s;
    let mut dpoch = c(1.0, 0.0);
    let mut npow = n_pow / n;
    for (j, coef) in bern.iter().enumerate().skip(1).take(p.euler_maclaurin_order) {
        value += *coef * poch * npow;
        deriv += *coef * (dpoch - ln_n * poch) * npow;
        let f1 = s + (2 * j - 1) as f64;
        let f2 = s + (2 * j) as f64;
        dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
        poch = poch * f1 * f2;
        npow *= inv_n2;
    }
    (value, deriv)
}

/// Hermite: `ζ(s,a) = a^{-s}/2 + a^{1-s}/(s-1)
///   + (1/i) ∫_0^∞ [(a - it)^{-s} - (a + it)^{-s}] / (e^{2πt} - 1) dt`.
fn hermite(s: ComplexValue, a: ComplexValue) -> Result<(ComplexValue, ComplexValue)> {
    let mut value = ZERO;
    let mut deriv = ZERO;
    let mut a = a;
    while a.re < 1.0 {
        let l = ln(a);
        let t = (-s * l).exp();
        value += t;
        deriv -= l * t;
        a += 1.0;
    }
    let la = ln(a);
    let a_pow = (-s * la).exp();
    let s1 = s - 1.0;
    let tail = a * a_pow / s1;
    value += 0.5 * a_pow + tail;
    deriv += -0.5 * la * a_pow - la * tail - tail / s1;

    let rule = GaussLegendre::cached(20);
    let peak = 1.0 + s.norm() / (2.0 * PI);
    let mut int_v = ZERO;
    let mut int_d = ZERO;
    const MAX_PANELS: usize = 2000;
    for panel in 0..MAX_PANELS {
        let lo = panel as f64;
        let mut pv = ZERO;
        let mut pd = ZERO;
        for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
            let t = lo + 0.5 * (x + 1.0);
            let lm = ln(a - c(0.0, t));
            let lp = ln(a + c(0.0, t));
            let em = (-s * lm).exp();
            let ep = (-s * lp).exp();
            // 1 / (i (e^{2πt} - 1))
            let weight = c(0.0, -1.0) * (0.5 * w / (2.0 * PI * t).exp_m1());
            pv += (em - ep) * weight;
            pd += (lp * ep - lm * em) * weight;
        }
        int_v += pv;
        int_d += pd;
        let small = |part: ComplexValue, total: ComplexValue| {
            part.norm() <= 1e-17 * (total.norm() + value.norm()) || part.norm() < 1e-300
        };
        if lo > peak && small(pv, int_v) && small(pd, int_d) {
            return Ok((value + int_v, deriv + int_d));
        }
    }
    Err(Error::NoConvergence {
        function: "hurwitz_zeta",
        limit: MAX_PANELS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::real;

    // (s, a, ζ(s, a), ∂ζ/∂s) from a 25-digit reference evaluation
    const REFERENCE: [(ComplexValue, ComplexValue, ComplexValue, ComplexValue); 5] = [
        (
            c(2.5, 1.0),
            c(0.3, 0.2),
            c(21.279_462_707_486_238, -10.627_630_605_429_601),
            c(15.101_936_655_942_655, -22.143_832_763_313_592),
        ),
        (
            c(-3.5, 2.0),
            c(0.7, 1.5),
            c(-27.437_582_696_911_19, 12.291_759_813_329_945),
            c(26.368_539_777_258_128, 31.920_923_694_617_299),
        ),
        (
            c(0.5, -3.0),
            c(1.25, 0.0),
            c(0.230_029_751_868_881_37, 0.416_539_949_111_832_08),
            c(0.053_752_213_819_569_204, 0.063_548_033_144_596_044),
        ),
        (
            c(-8.0, 0.5),
            c(0.4, 0.1),
            c(0.005_317_723_284_459_576, -0.009_054_251_622_230_234),
            c(-0.016_749_260_083_646_066, -0.003_882_742_984_065_725_7),
        ),
        (
            c(6.0, 0.0),
            c(2.5, -1.0),
            c(-0.001_699_347_088_323_917_1, 0.002_560_557_992_111_895_1),
            c(0.000_749_221_010_743_932_03, -0.003_411_055_417_337_290_5),
        ),
    ];

    #[test]
    fn reference_values() {
        let p = EvalParams::default();
        for (s, a, v, d) in REFERENCE {
            let (gv, gd) = hurwitz_zeta_with(p, s, a, HurwitzMethod::Auto).unwrap();
            let tol = 1e-13 * v.norm().max(1.0);
            assert!((gv - v).norm() < tol, "ζ({s}, {a}) = {gv}, want {v}");
            assert!((gd - d).norm() < 1e-13 * d.norm().max(1.0), "ζ'({s}, {a}) = {gd}, want {d}");
        }
    }

    #[test]
    fn methods_agree_on_overlap() {
        let p = EvalParams::default();
        for (s, a) in [(c(0.5, 2.0), c(0.3, 0.0)), (c(3.0, -1.0), c(1.7, 0.4)), (c(0.1, 0.0), c(0.9, 2.0))] {
            let em = hurwitz_zeta_with(p, s, a, HurwitzMethod::EulerMaclaurin).unwrap();
            let he = hurwitz_zeta_with(p, s, a, HurwitzMethod::Hermite).unwrap();
            assert!((em.0 - he.0).norm() < 1e-13, "{s} {a}");
            assert!((em.1 - he.1).norm() < 1e-12, "{s} {a}");
        }
    }

    #[test]
    fn errors() {
        let p = EvalParams::default();
        assert!(matches!(hurwitz_zeta(p, real(1.0), real(0.5)), Err(Error::Pole { .. })));
        assert!(matches!(hurwitz_zeta(p, real(2.0), real(-0.5)), Err(Error::Domain { .. })));
        assert!(matches!(hurwitz_zeta(p, real(2.0), c(0.0, 1.0)), Err(Error::Domain { .. })));
    }
}
