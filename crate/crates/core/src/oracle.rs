//! Deliberately simple references: truncated bilateral sums with a rigorous
//! tail bound, the single-index multiple Hurwitz sum, central differences,
//! straight-segment quadrature and enumeration counts for the combinatorics.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::combinatorics::factorial_f64;
use crate::complex::{ln, ComplexValue, CompensatedSum, ZERO};
use crate::error::{Error, Result};
use crate::quadrature;

/// Truncation `|m| <= half_width` of a bilateral sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPlan {
    pub half_width: usize,
}

impl TruncationPlan {
    pub fn new(half_width: usize) -> Self {
        TruncationPlan { half_width }
    }
}

/// A truncated sum and a bound on the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BruteSum {
    pub value: ComplexValue,
    pub tail_bound: f64,
}

/// Bound on `Σ_{|m|>N} |w(m)| |(m+z)^{-s}|` when `|w(m)| <= weight_scale |m|^{r-1}`:
/// each term is at most `|m|^{r-1} (|m| - |z|)^{-σ} e^{π|Im s|}`, and
/// `(|m| - |z|)^{-σ} <= ρ^σ |m|^{-σ}` with `ρ = N/(N - |z|)`; summing both
/// sides against `∫_N^∞ x^{r-1-σ} dx` gives `2 ρ^σ e^{π|Im s|} N^{r-σ}/(σ-r)`.
pub fn bilateral_tail_bound(r: u32, s: ComplexValue, z: ComplexValue, n: usize, weight_scale: f64) -> Option<f64> {
    let sigma = s.re;
    let nf = n as f64;
    let az = z.norm();
    if sigma <= r as f64 || nf <= az + 1.0 {
        return None;
    }
    let rho = nf / (nf - az);
    let c = 2.0 * weight_scale * rho.powf(sigma) * (PI * s.im.abs()).exp() / (sigma - r as f64);
    Some(c * nf.powf(r as f64 - sigma))
}

fn check_convergent(r: u32, s: ComplexValue, function: &'static str) -> Result<()> {
    if r == 0 {
        return Err(Error::Domain {
            function,
            requirement: "r >= 1",
        });
    }
    if !(s.re > r as f64) {
        return Err(Error::Divergent {
            function,
            reason: "bilateral sum needs Re s > r",
        });
    }
    Ok(())
}

fn term(s: ComplexValue, w: ComplexValue) -> ComplexValue {
    (-s * ln(w)).exp()
}

fn brute(
    r: u32,
    s: ComplexValue,
    z: ComplexValue,
    plan: TruncationPlan,
    weight: impl Fn(f64) -> f64,
    weight_scale: f64,
    function: &'static str,
) -> Result<BruteSum> {
    check_convergent(r, s, function)?;
    if z.im < 0.0 {
        return Err(Error::Domain {
            function,
            requirement: "Im z >= 0",
        });
    }
    if crate::complex::near_integer(z, 1e-12).is_some() {
        return Err(Error::Domain {
            function,
            requirement: "z not an integer",
        });
    }
    let tail_bound = bilateral_tail_bound(r, s, z, plan.half_width, weight_scale).ok_or(Error::Domain {
        function,
        requirement: "half width must exceed |z| + 1",
    })?;
    let mut acc = CompensatedSum::new();
    acc.add(weight(0.0) * term(s, z));
    for m in 1..=plan.half_width {
        let mf = m as f64;
        let pos = weight(mf) * term(s, z + mf);
        let neg = weight(-mf) * term(s, z - mf);
        acc.add(pos + neg);
    }
    Ok(BruteSum {
        value: acc.value(),
        tail_bound,
    })
}

/// `Σ_{|m|<=N} m^{r-1} (m+z)^{-s}`.
pub fn brute_h(r: u32, s: ComplexValue, z: ComplexValue, plan: TruncationPlan) -> Result<BruteSum> {
    let e = r.saturating_sub(1) as i32;
    brute(r, s, z, plan, |m| if e == 0 { 1.0 } else { m.powi(e) }, 1.0, "brute_H")
}

/// `Σ_{|m|<=N} (m+1)_{r-1}/(r-1)! (m+z)^{-s}`.
pub fn brute_k(r: u32, s: ComplexValue, z: ComplexValue, plan: TruncationPlan) -> Result<BruteSum> {
    let rm1 = r.saturating_sub(1);
    let inv = 1.0 / factorial_f64(rm1);
    // |(m+1)_{r-1}| <= (|m| + r)^{r-1} <= |m|^{r-1} (1 + r/N)^{r-1}
    let scale = inv * (1.0 + r as f64 / plan.half_width.max(1) as f64).powi(rm1 as i32);
    brute(
        r,
        s,
        z,
        plan,
        |m| {
            let mut acc = 1.0;
            for j in 1..=rm1 {
                acc *= m + j as f64;
            }
            acc * inv
        },
        scale,
        "brute_K",
    )
}

/// `Σ_{m<cap} binom(m+r-1, r-1) (m+z)^{-s}` plus the integral estimate of the
/// rest. `tail_bound` bounds the whole omitted tail, so it also covers the
/// error of the estimate.
pub fn brute_zeta_r(r: u32, s: ComplexValue, z: ComplexValue, cap: usize) -> Result<BruteSum> {
    check_convergent(r, s, "brute_zeta_r")?;
    if !(z.re > 0.0) {
        return Err(Error::Domain {
            function: "brute_zeta_r",
            requirement: "Re z > 0",
        });
    }
    let rm1 = r - 1;
    let inv = 1.0 / factorial_f64(rm1);
    let weight = |m: f64| {
        let mut acc = 1.0;
        for j in 1..=rm1 {
            acc *= m + j as f64;
        }
        acc * inv
    };
    let mut acc = CompensatedSum::new();
    for m in 0..cap {
        let mf = m as f64;
        acc.add(weight(mf) * term(s, z + mf));
    }
    // ∫_{cap-1/2}^∞ w(x) (x+z)^{-s} dx, leading order w(x) ~ x^{r-1}/(r-1)!
    let x0 = cap as f64 - 0.5;
    let a = z + x0;
    let estimate = inv * (-(s - r as f64) * ln(a)).exp() / (s - r as f64);
    acc.add(estimate);
    let sigma = s.re;
    let nf = cap as f64;
    let rho = nf / (nf - z.norm()).max(1.0);
    let bound = inv
        * (1.0 + r as f64 / nf).powi(rm1 as i32)
        * rho.powf(sigma)
        * (PI * s.im.abs()).exp()
        * nf.powf(r as f64 - sigma)
        / (sigma - r as f64);
    Ok(BruteSum {
        value: acc.value(),
        tail_bound: bound,
    })
}

/// `(f(x0 + h) - f(x0 - h)) / 2h` along the real direction.
pub fn central_diff<F>(mut f: F, x0: ComplexValue, h: f64) -> Result<ComplexValue>
where
    F: FnMut(ComplexValue) -> Result<ComplexValue>,
{
    Ok((f(x0 + h)? - f(x0 - h)?) / (2.0 * h))
}

/// Central difference in `s`; with `richardson = Some(q)` the estimates at
/// `h` and `h/q` are combined to cancel the `h^2` error term.
pub fn central_sderiv<F>(mut f: F, s0: ComplexValue, h: f64, richardson: Option<f64>) -> Result<ComplexValue>
where
    F: FnMut(ComplexValue) -> Result<ComplexValue>,
{
    let coarse = central_diff(&mut f, s0, h)?;
    match richardson {
        None => Ok(coarse),
        Some(q) => {
            let fine = central_diff(&mut f, s0, h / q)?;
            let q2 = q * q;
            Ok((q2 * fine - coarse) / (q2 - 1.0))
        }
    }
}

/// Adaptive Gauss-Legendre along the segment `[a, b]` to relative tolerance 1e-11.
pub fn segment_quadrature<G>(g: G, a: ComplexValue, b: ComplexValue) -> Result<ComplexValue>
where
    G: FnMut(ComplexValue) -> Result<ComplexValue>,
{
    quadrature::segment(g, a, b, 1e-11, 64)
}

/// Number of set partitions of `{1..n}` into `k` blocks, by walking all
/// restricted growth strings.
pub fn count_set_partitions(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    let mut a = vec![0usize; n];
    loop {
        let blocks = a.iter().copied().max().unwrap_or(0) + 1;
        counts[blocks] += 1;
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return counts;
            }
            let prefix_max = a[..i].iter().copied().max().unwrap_or(0);
            if a[i] <= prefix_max {
                a[i] += 1;
                for x in a.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Number of permutations of `n` elements with exactly `k` ascents, and with
/// exactly `k` cycles, by walking all permutations (Heap's algorithm).
pub fn count_permutations(n: usize) -> (Vec<u64>, Vec<u64>) {
    let mut ascents = vec![0u64; n.max(1)];
    let mut cycles = vec![0u64; n + 1];
    let mut perm: Vec<usize> = (0..n).collect();
    let mut tally = |p: &[usize]| {
        let asc = p.windows(2).filter(|w| w[0] < w[1]).count();
        ascents[asc] += 1;
        let mut seen = vec![false; p.len()];
        let mut cyc = 0;
        for start in 0..p.len() {
            if !seen[start] {
                cyc += 1;
                let mut j = start;
                while !seen[j] {
                    seen[j] = true;
                    j = p[j];
                }
            }
        }
        cycles[cyc] += 1;
    };
    tally(&perm);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            tally(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    (ascents, cycles)
}

/// Row `n` of Pascal's triangle by repeated addition.
pub fn pascal_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row
}

/// Plain sum `Σ_{m=1}^{terms} x^m / m^α` with no tail control.
pub fn polylog_partial_sum(alpha: ComplexValue, x: ComplexValue, terms: usize) -> ComplexValue {
    let mut acc = ZERO;
    let mut power = x;
    for m in 1..=terms {
        acc += power * (-alpha * (m as f64).ln()).exp();
        power *= x;
    }
    acc
}
