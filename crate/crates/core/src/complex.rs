//! Complex helpers. Logs and powers use the principal branch with
//! `-π < arg ≤ π`; a signed-zero imaginary part never flips the branch.

use core::f64::consts::PI;

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

pub type ComplexValue = Complex64;

pub const I: ComplexValue = Complex64::new(0.0, 1.0);
pub const ZERO: ComplexValue = Complex64::new(0.0, 0.0);
pub const ONE: ComplexValue = Complex64::new(1.0, 0.0);

#[inline]
pub const fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

#[inline]
pub fn real(x: f64) -> ComplexValue {
    Complex64::new(x, 0.0)
}

/// Principal argument in `(-π, π]`. `arg(-1 - 0i) = π`.
pub fn arg(z: ComplexValue) -> f64 {
    if z.im == 0.0 {
        if z.re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        z.im.atan2(z.re)
    }
}

pub fn ln(z: ComplexValue) -> ComplexValue {
    c(z.norm().ln(), arg(z))
}

/// `base^exponent = exp(exponent · ln base)`; `0^w` is 0 for `Re w > 0`.
pub fn pow(base: ComplexValue, exponent: ComplexValue) -> ComplexValue {
    if base == ZERO {
        if exponent == ZERO {
            return ONE;
        }
        if exponent.re > 0.0 {
            return ZERO;
        }
        return c(f64::INFINITY, 0.0);
    }
    (exponent * ln(base)).exp()
}

/// Integer power by repeated squaring; `z^0 = 1` including `0^0`.
pub fn powi(z: ComplexValue, k: u32) -> ComplexValue {
    z.powu(k)
}

/// `sin(πx)` with exact zeros at integers.
pub fn sinpi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x - 2.0 * (x * 0.5).round();
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    let v = if r <= 0.25 {
        (PI * r).sin()
    } else if r <= 0.75 {
        (PI * (r - 0.5)).cos()
    } else {
        (PI * (1.0 - r)).sin()
    };
    sign * v + 0.0
}

/// `cos(πx)` with exact zeros at half-integers.
pub fn cospi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = (x - 2.0 * (x * 0.5).round()).abs();
    let v = if r <= 0.25 {
        (PI * r).cos()
    } else if r <= 0.75 {
        -(PI * (r - 0.5)).sin()
    } else {
        -(PI * (1.0 - r)).cos()
    };
    v + 0.0
}

/// `sin(πz)`.
pub fn sin_pi(z: ComplexValue) -> ComplexValue {
    let y = PI * z.im;
    c(sinpi(z.re) * y.cosh(), cospi(z.re) * y.sinh())
}

/// `cos(πz)`.
pub fn cos_pi(z: ComplexValue) -> ComplexValue {
    let y = PI * z.im;
    c(cospi(z.re) * y.cosh(), -sinpi(z.re) * y.sinh())
}

/// `e^{πiw}`, exact on the unit circle at rational multiples handled by `sinpi`.
pub fn exp_pi_i(w: ComplexValue) -> ComplexValue {
    let m = (-PI * w.im).exp();
    c(m * cospi(w.re), m * sinpi(w.re))
}

/// `e^{πiw} - 1` without cancellation near `w = 0`.
pub fn exp_pi_i_m1(w: ComplexValue) -> ComplexValue {
    let a = -PI * w.im;
    let half = sinpi(0.5 * w.re);
    c(
        a.exp_m1() * cospi(w.re) - 2.0 * half * half,
        a.exp() * sinpi(w.re),
    )
}

/// `e^z - 1` without cancellation near `z = 0`.
pub fn expm1(z: ComplexValue) -> ComplexValue {
    let half = (0.5 * z.im).sin();
    c(
        z.re.exp_m1() * z.im.cos() - 2.0 * half * half,
        z.re.exp() * z.im.sin(),
    )
}

/// Nearest integer to `z` if `|z - n| < tol`.
pub fn near_integer(z: ComplexValue, tol: f64) -> Option<i64> {
    let n = z.re.round();
    if (z - real(n)).norm() < tol {
        Some(n as i64)
    } else {
        None
    }
}

/// `Some(n)` iff `z` is exactly the integer `n`.
pub fn exact_integer(z: ComplexValue) -> Option<i64> {
    if z.im == 0.0 && z.re == z.re.round() && z.re.abs() < 9.0e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: ComplexValue,
    comp: ComplexValue,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: ComplexValue) {
        self.sum.re = two_sum(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = two_sum(self.sum.im, x.im, &mut self.comp.im);
    }

    pub fn value(&self) -> ComplexValue {
        self.sum + self.comp
    }
}

fn two_sum(a: f64, b: f64, comp: &mut f64) -> f64 {
    let t = a + b;
    if a.abs() >= b.abs() {
        *comp += (a - t) + b;
    } else {
        *comp += (b - t) + a;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_zero_does_not_flip_branch() {
        let a = ln(c(-2.0, 0.0));
        let b = ln(c(-2.0, -0.0));
        assert_eq!(a, b);
        assert_eq!(a.im, PI);
    }

    #[test]
    fn sinpi_exact_at_integers() {
        for k in -6..=6 {
            assert_eq!(sinpi(k as f64), 0.0);
            assert_eq!(cospi(k as f64 + 0.5), 0.0);
            assert_eq!(cospi(k as f64).abs(), 1.0);
        }
        assert!((sinpi(0.3) - (0.3 * PI).sin()).abs() < 1e-16);
        assert!((cospi(-1.7) - (-1.7 * PI).cos()).abs() < 1e-15);
    }

    #[test]
    fn exp_pi_i_m1_small() {
        let w = c(1e-12, 2e-12);
        let direct = exp_pi_i_m1(w);
        let expect = I * PI * w;
        assert!((direct - expect).norm() < 1e-22);
        let w = c(0.37, 0.21);
        assert!((exp_pi_i_m1(w) - (exp_pi_i(w) - ONE)).norm() < 1e-15);
        assert!((exp_pi_i(w) - (I * PI * w).exp()).norm() < 1e-15);
    }

    #[test]
    fn powers() {
        let z = c(0.3, 0.4);
        assert!((pow(z, real(3.0)) - z * z * z).norm() < 1e-15);
        assert_eq!(pow(ZERO, c(0.5, 1.0)), ZERO);
        assert_eq!(powi(ZERO, 0), ONE);
    }

    #[test]
    fn compensated() {
        let mut s = CompensatedSum::new();
        s.add(real(1e16));
        s.add(real(1.0));
        s.add(real(-1e16));
        assert_eq!(s.value(), ONE);
    }
}
