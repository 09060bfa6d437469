//! Exact integer and rational combinatorics: binomials, Stirling numbers of
//! both kinds, Eulerian numbers, Bernoulli numbers and multiple Bernoulli
//! polynomials, plus the coefficient expansion of a shifted rising factorial.
//!
//! Small tables are built once and shared; requests past the cached size are
//! computed on demand.

#[cfg(not(feature = "std"))]
use num_traits::Float;
use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use once_cell::race::OnceBox;

use crate::complex::{ComplexValue, ZERO};

pub type RationalInt = BigRational;

const TABLE_ROWS: usize = 64;

/// Lower-triangular table of exact integers indexed `[n][k]`, `0 <= k <= n`.
struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    fn build(n_max: usize, rule: impl Fn(usize, usize, &[BigInt]) -> BigInt) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let row: Vec<BigInt> = (0..=n).map(|k| rule(n, k, prev)).collect();
            rows.push(row);
        }
        Triangle { rows }
    }

    fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            BigInt::zero()
        } else {
            self.rows[n][k].clone()
        }
    }
}

fn at(prev: &[BigInt], k: isize) -> BigInt {
    if k < 0 || k as usize >= prev.len() {
        BigInt::zero()
    } else {
        prev[k as usize].clone()
    }
}

fn stirling2_rule(_n: usize, k: usize, prev: &[BigInt]) -> BigInt {
    at(prev, k as isize) * BigInt::from(k) + at(prev, k as isize - 1)
}

fn stirling1_rule(n: usize, k: usize, prev: &[BigInt]) -> BigInt {
    at(prev, k as isize) * BigInt::from(n - 1) + at(prev, k as isize - 1)
}

fn eulerian_rule(n: usize, k: usize, prev: &[BigInt]) -> BigInt {
    if n == 1 {
        return if k == 0 { BigInt::one() } else { BigInt::zero() };
    }
    at(prev, k as isize) * BigInt::from(k + 1) + at(prev, k as isize - 1) * BigInt::from(n - k)
}

macro_rules! cached_triangle {
    ($name:ident, $cell:ident, $rule:path) => {
        static $cell: OnceBox<Triangle> = OnceBox::new();

        fn $name(n: usize, k: usize) -> BigInt {
            if n <= TABLE_ROWS {
                $cell
                    .get_or_init(|| Box::new(Triangle::build(TABLE_ROWS, $rule)))
                    .get(n, k)
            } else {
                Triangle::build(n, $rule).get(n, k)
            }
        }
    };
}

cached_triangle!(stirling2_int, STIRLING2, stirling2_rule);
cached_triangle!(stirling1_int, STIRLING1, stirling1_rule);
cached_triangle!(eulerian_int, EULERIAN, eulerian_rule);

fn rat(n: BigInt) -> RationalInt {
    RationalInt::from_integer(n)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `binom(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: i64) -> RationalInt {
    rat(binomial_int(n, k))
}

fn binomial_int(n: u32, k: i64) -> BigInt {
    if k < 0 || k > n as i64 {
        return BigInt::zero();
    }
    let k = (k as u32).min(n - k as u32);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Stirling numbers of the second kind `{r k}`.
pub fn stirling_second(r: u32, k: u32) -> RationalInt {
    rat(stirling2_int(r as usize, k as usize))
}

/// Unsigned Stirling numbers of the first kind `[r k]`.
pub fn stirling_first_unsigned(r: u32, k: u32) -> RationalInt {
    rat(stirling1_int(r as usize, k as usize))
}

/// Eulerian numbers `<n k>`: permutations of `n` with `k` ascents.
pub fn eulerian(n: u32, k: u32) -> RationalInt {
    rat(eulerian_int(n as usize, k as usize))
}

const BERNOULLI_CACHED: usize = 130;

static BERNOULLI: OnceBox<Vec<RationalInt>> = OnceBox::new();

fn bernoulli_table(n_max: usize) -> Vec<RationalInt> {
    // B_n = -1/(n+1) * sum_{k<n} binom(n+1, k) B_k
    let mut b: Vec<RationalInt> = Vec::with_capacity(n_max + 1);
    b.push(RationalInt::one());
    for n in 1..=n_max {
        let mut acc = RationalInt::zero();
        for (k, bk) in b.iter().enumerate() {
            if bk.is_zero() {
                continue;
            }
            acc += rat(binomial_int(n as u32 + 1, k as i64)) * bk;
        }
        b.push(-acc / rat(BigInt::from(n + 1)));
    }
    b
}

/// Bernoulli numbers with `B_1 = -1/2`.
pub fn bernoulli_number(k: u32) -> RationalInt {
    let k = k as usize;
    if k <= BERNOULLI_CACHED {
        BERNOULLI
            .get_or_init(|| Box::new(bernoulli_table(BERNOULLI_CACHED)))[k]
            .clone()
    } else {
        bernoulli_table(k).swap_remove(k)
    }
}

/// Dense polynomial with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRational {
    coeffs: Vec<RationalInt>,
}

impl PolyRational {
    pub fn new(mut coeffs: Vec<RationalInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyRational { coeffs }
    }

    pub fn zero() -> Self {
        PolyRational { coeffs: Vec::new() }
    }

    pub fn constant(c: RationalInt) -> Self {
        Self::new(vec![c])
    }

    /// `a + b z`.
    pub fn linear(a: RationalInt, b: RationalInt) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[RationalInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &RationalInt) -> RationalInt {
        self.coeffs
            .iter()
            .rev()
            .fold(RationalInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: ComplexValue) -> ComplexValue {
        self.coeffs
            .iter()
            .rev()
            .fold(ZERO, |acc, c| acc * z + to_f64(c))
    }

    /// `p(a + b z)`.
    pub fn compose_linear(&self, a: RationalInt, b: RationalInt) -> Self {
        let inner = PolyRational::linear(a, b);
        let mut out = PolyRational::zero();
        for c in self.coeffs.iter().rev() {
            out = &(&out * &inner) + &PolyRational::constant(c.clone());
        }
        out
    }
}

impl<'a> Add for &'a PolyRational {
    type Output = PolyRational;
    fn add(self, rhs: &'a PolyRational) -> PolyRational {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &PolyRational, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Zero::zero);
        PolyRational::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl<'a> Sub for &'a PolyRational {
    type Output = PolyRational;
    fn sub(self, rhs: &'a PolyRational) -> PolyRational {
        self + &(-rhs.clone())
    }
}

impl Neg for PolyRational {
    type Output = PolyRational;
    fn neg(self) -> PolyRational {
        PolyRational::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<'a> Mul for &'a PolyRational {
    type Output = PolyRational;
    fn mul(self, rhs: &'a PolyRational) -> PolyRational {
        if self.is_zero() || rhs.is_zero() {
            return PolyRational::zero();
        }
        let mut out = vec![RationalInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyRational::new(out)
    }
}

/// Multiple Bernoulli polynomial `B_{r,k}(z)`, defined by
/// `t^r e^{zt} / (e^t - 1)^r = Σ_k B_{r,k}(z) t^k / k!`.
pub fn multiple_bernoulli_poly(r: u32, k: u32) -> PolyRational {
    let k = k as usize;
    let fact: Vec<RationalInt> = (0..=k as u32).map(|j| rat(factorial(j))).collect();
    // t/(e^t - 1) = Σ B_j t^j / j!
    let base: Vec<RationalInt> = (0..=k)
        .map(|j| bernoulli_number(j as u32) / &fact[j])
        .collect();
    let mut series = vec![RationalInt::zero(); k + 1];
    series[0] = RationalInt::one();
    for _ in 0..r {
        let mut next = vec![RationalInt::zero(); k + 1];
        for (i, a) in series.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in base.iter().enumerate().take(k + 1 - i) {
                next[i + j] += a * b;
            }
        }
        series = next;
    }
    // coefficient of t^k in series(t) e^{zt}, times k!
    let coeffs = (0..=k)
        .map(|i| &series[k - i] * &fact[k] / &fact[i])
        .collect();
    PolyRational::new(coeffs)
}

/// `(x)_r = x (x+1) ... (x+r-1)`.
pub fn rising_factorial<T: Clone + Num + FromPrimitive>(x: &T, r: u32) -> T {
    let mut acc = T::one();
    for j in 0..r {
        acc = acc * (x.clone() + T::from_u32(j).expect("small integer"));
    }
    acc
}

/// Coefficients `c_0..c_{r-1}` with `(w + 1 - z)_{r-1} = Σ_k c_k w^k`.
pub fn pochhammer_shift_coeffs<T: Clone + Num + FromPrimitive>(r: u32, z: &T) -> Vec<T> {
    let mut poly = vec![T::one()];
    for j in 1..r {
        let shift = T::from_u32(j).expect("small integer") - z.clone();
        let mut next = vec![T::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].clone() + a.clone();
            next[i] = next[i].clone() + a.clone() * shift.clone();
        }
        poly = next;
    }
    poly
}

pub fn to_f64(x: &RationalInt) -> f64 {
    let (n, d) = (x.numer(), x.denom());
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // Very large parts: scale down by the bit length difference.
            let shift = n.bits() as i64 - d.bits() as i64;
            let sign = if n.is_negative() { -1.0 } else { 1.0 };
            let scaled = if shift >= 0 {
                RationalInt::new(n.abs(), d.clone() << (shift as usize))
            } else {
                RationalInt::new(n.abs() << ((-shift) as usize), d.clone())
            };
            let m = scaled.numer().to_f64().unwrap_or(f64::NAN)
                / scaled.denom().to_f64().unwrap_or(f64::NAN);
            sign * m * 2f64.powi(shift as i32)
        }
    }
}

pub fn factorial_f64(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

pub fn binomial_f64(n: u32, k: i64) -> f64 {
    to_f64(&binomial(n, k))
}

pub fn stirling_second_f64(r: u32, k: u32) -> f64 {
    to_f64(&stirling_second(r, k))
}

pub fn stirling_first_unsigned_f64(r: u32, k: u32) -> f64 {
    to_f64(&stirling_first_unsigned(r, k))
}

pub fn eulerian_f64(n: u32, k: u32) -> f64 {
    to_f64(&eulerian(n, k))
}

static BERNOULLI_EM: OnceBox<Vec<f64>> = OnceBox::new();

/// `B_{2j} / (2j)!` for `j = 0..=60`, as used by Euler-Maclaurin.
pub fn bernoulli_even_over_factorial() -> &'static [f64] {
    BERNOULLI_EM.get_or_init(|| {
        Box::new(
            (0..=60u32)
                .map(|j| to_f64(&(bernoulli_number(2 * j) / rat(factorial(2 * j)))))
                .collect(),
        )
    })
}
