//! Gauss-Legendre rules and an adaptive bisecting integrator for complex
//! integrands over real intervals and straight complex segments.

#[cfg(not(feature = "std"))]
use num_traits::Float;
use alloc::borrow::Cow;
use alloc::boxed::Box;
use alloc::vec::Vec;
use core::f64::consts::PI;

use once_cell::race::OnceBox;

use crate::complex::{ComplexValue, ZERO};
use crate::error::{Error, Result};

/// Nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

static GL20: OnceBox<GaussLegendre> = OnceBox::new();
static GL32: OnceBox<GaussLegendre> = OnceBox::new();
static GL64: OnceBox<GaussLegendre> = OnceBox::new();

impl GaussLegendre {
    /// Newton iteration on `P_n` from Chebyshev-like starting guesses.
    pub fn new(n: usize) -> Self {
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for iter in 0..100 {
                let (pn, pn1) = legendre_pair(n, x);
                dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
                let dx = pn / dp;
                x -= dx;
                if dx.abs() < 1e-16 || iter == 99 {
                    let (pn, pn1) = legendre_pair(n, x);
                    dp = n as f64 * (x * pn - pn1) / (x * x - 1.0);
                    break;
                }
            }
            nodes.push(x);
            weights.push(2.0 / ((1.0 - x * x) * dp * dp));
        }
        GaussLegendre { nodes, weights }
    }

    pub fn cached(n: usize) -> Cow<'static, GaussLegendre> {
        let cell = match n {
            20 => &GL20,
            32 => &GL32,
            64 => &GL64,
            _ => return Cow::Owned(GaussLegendre::new(n)),
        };
        Cow::Borrowed(cell.get_or_init(|| Box::new(GaussLegendre::new(n))))
    }

    pub fn integrate<F>(&self, mut f: F, a: f64, b: f64) -> Result<ComplexValue>
    where
        F: FnMut(f64) -> Result<ComplexValue>,
    {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = ZERO;
        for (x, w) in self.nodes.iter().zip(self.weights.iter()) {
            acc += f(mid + half * x)? * *w;
        }
        Ok(acc * half)
    }
}

/// `(P_n(x), P_{n-1}(x))` by the three-term recurrence.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for j in 2..=n {
        let j = j as f64;
        let p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

const MAX_PANELS: usize = 4000;

/// Adaptive integration of `f` over `[a, b]`: each panel is accepted when the
/// `n`-point and `n/2`-point rules agree to `rel_tol` (relative to the panel or
/// to the whole-interval estimate, whichever is looser).
pub fn adaptive<F>(mut f: F, a: f64, b: f64, rel_tol: f64, n: usize) -> Result<ComplexValue>
where
    F: FnMut(f64) -> Result<ComplexValue>,
{
    let fine = GaussLegendre::cached(n);
    let coarse = GaussLegendre::cached(n / 2);
    let total_width = (b - a).abs();
    if total_width == 0.0 {
        return Ok(ZERO);
    }
    let scale = fine.integrate(&mut f, a, b)?.norm();
    let mut stack: Vec<(f64, f64)> = alloc::vec![(a, b)];
    let mut acc = ZERO;
    let mut panels = 0;
    while let Some((lo, hi)) = stack.pop() {
        panels += 1;
        if panels > MAX_PANELS {
            return Err(Error::NoConvergence {
                function: "adaptive_quadrature",
                limit: MAX_PANELS,
            });
        }
        let i_fine = fine.integrate(&mut f, lo, hi)?;
        let i_coarse = coarse.integrate(&mut f, lo, hi)?;
        let err = (i_fine - i_coarse).norm();
        let share = (hi - lo).abs() / total_width;
        if err <= rel_tol * i_fine.norm() || err <= rel_tol * scale * share || err < 1e-300 {
            acc += i_fine;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi));
            stack.push((lo, mid));
        }
    }
    Ok(acc)
}

/// `∫ g` along the straight segment from `from` to `to`.
pub fn segment<G>(mut g: G, from: ComplexValue, to: ComplexValue, rel_tol: f64, n: usize) -> Result<ComplexValue>
where
    G: FnMut(ComplexValue) -> Result<ComplexValue>,
{
    let dir = to - from;
    let v = adaptive(|t| g(from + dir * t), 0.0, 1.0, rel_tol, n)?;
    Ok(v * dir)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{c, real};

    #[test]
    fn rule_is_exact_for_polynomials() {
        let gl = GaussLegendre::new(20);
        let s: f64 = gl.weights.iter().sum();
        assert!((s - 2.0).abs() < 1e-14);
        // ∫_{-1}^{1} x^38 = 2/39
        let v = gl.integrate(|x| Ok(real(x.powi(38))), -1.0, 1.0).unwrap();
        assert!((v.re - 2.0 / 39.0).abs() < 1e-15);
    }

    #[test]
    fn adaptive_handles_peaks() {
        // ∫_0^1 1/(1e-4 + x^2) = atan(100)/1e-2
        let v = adaptive(|x| Ok(real(1.0 / (1e-4 + x * x))), 0.0, 1.0, 1e-12, 64).unwrap();
        let expect = 100.0f64.atan() * 100.0;
        assert!((v.re - expect).abs() < 1e-9 * expect);
    }

    #[test]
    fn segment_exp() {
        let from = c(0.0, 0.0);
        let to = c(1.0, 2.0);
        let v = segment(|z| Ok(z.exp()), from, to, 1e-13, 32).unwrap();
        assert!((v - (to.exp() - 1.0)).norm() < 1e-13);
    }
}
