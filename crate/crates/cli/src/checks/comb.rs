//! Exact identities among the combinatorial tables.

use bizeta_core::combinatorics::{
    eulerian, factorial, multiple_bernoulli_poly, pochhammer_shift_coeffs, rising_factorial, stirling_first_unsigned,
    stirling_second, to_f64, RationalInt,
};
use bizeta_core::complex::real;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{EvalResult, Identity, Limits, Suite};
use crate::report::{Inputs, Outcome};

fn q(n: i64) -> RationalInt {
    RationalInt::from_integer(BigInt::from(n))
}

fn exact(a: &RationalInt, b: &RationalInt) -> Outcome {
    Outcome::exact(real(to_f64(a)), real(to_f64(b)), a == b)
}

/// `i`-th cell of the grid `r in lo..=hi` × `m in -w..=w`.
fn grid_rm(lim: &Limits, i: usize, lo: u32, hi: u32, w: i64) -> Inputs {
    let width = (2 * w + 1) as usize;
    let rows = (lim.r_hi(hi).max(lo) - lo + 1) as usize;
    let r = lo + ((i / width) % rows) as u32;
    let m = (i % width) as i64 - w;
    Inputs::default().r(r).m(m)
}

fn draw_stirling2(_: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    grid_rm(lim, i, 1, 8, 5)
}

fn eval_stirling2(_: &super::Ctx, inp: &Inputs) -> EvalResult {
    let (r, m) = (inp.get_r(), inp.get_m());
    let mut acc = RationalInt::zero();
    for k in 0..=r {
        let term = stirling_second(r, k) * rising_factorial(&q(m), k);
        if (r - k) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(exact(&acc, &q(m.pow(r))))
}

fn draw_stirling1(_: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    grid_rm(lim, i, 1, 8, 5)
}

fn eval_stirling1(_: &super::Ctx, inp: &Inputs) -> EvalResult {
    let (r, m) = (inp.get_r(), inp.get_m());
    let mut acc = RationalInt::zero();
    for k in 0..=r {
        acc += stirling_first_unsigned(r, k) * q(m.pow(k));
    }
    Ok(exact(&acc, &rising_factorial(&q(m), r)))
}

fn draw_eulerian(_: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    let hi = lim.n_hi(8).max(1);
    Inputs::default().n(1 + (i as u32 % hi))
}

fn eval_eulerian(_: &super::Ctx, inp: &Inputs) -> EvalResult {
    let n = inp.get_n();
    let total = (0..n).fold(RationalInt::zero(), |a, k| a + eulerian(n, k));
    Ok(exact(&total, &RationalInt::from_integer(factorial(n))))
}

fn draw_reflection(_: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    let rows = lim.r_hi(5).max(1) as usize;
    Inputs::default().r(1 + ((i / 9) % rows) as u32).aux((i % 9) as u32)
}

fn eval_reflection(_: &super::Ctx, inp: &Inputs) -> EvalResult {
    let (r, k) = (inp.get_r(), inp.get_aux());
    let b = multiple_bernoulli_poly(r, k);
    let reflected = b.compose_linear(q(r as i64), q(-1));
    let expected = if k % 2 == 0 { b.clone() } else { -b.clone() };
    // compare values at a fixed rational point for the f64 display
    let x = RationalInt::new(BigInt::from(3), BigInt::from(7));
    Ok(Outcome::exact(
        real(to_f64(&reflected.eval(&x))),
        real(to_f64(&expected.eval(&x))),
        reflected == expected,
    ))
}

fn draw_shift(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 8);
    let m = rng.random_range(-10..=10i64);
    let num = rng.random_range(-40..40i64);
    let den = rng.random_range(1..13i64);
    Inputs::default().r(r).m(m).q(num, den)
}

fn eval_shift(_: &super::Ctx, inp: &Inputs) -> EvalResult {
    let (r, m) = (inp.get_r(), inp.get_m());
    let [num, den] = inp.q.unwrap_or([0, 1]);
    let z = RationalInt::new(BigInt::from(num), BigInt::from(den));
    let coeffs = pochhammer_shift_coeffs(r, &z);
    let w = q(m) + &z;
    let mut acc = RationalInt::zero();
    let mut pw = RationalInt::one();
    for ck in &coeffs {
        acc += ck * &pw;
        pw *= &w;
    }
    Ok(exact(&acc, &rising_factorial(&q(m + 1), r - 1)))
}

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "combinatorics.stirling2-powers",
            suite: Suite::Combinatorics,
            description: "m^r = sum_k (-1)^(r-k) S2(r,k) (m)_k, r<=8, |m|<=5, exact",
            tol: 0.0,
            default_samples: 88,
            draw: draw_stirling2,
            eval: eval_stirling2,
        },
        Identity {
            id: "combinatorics.stirling1-rising",
            suite: Suite::Combinatorics,
            description: "(m)_r = sum_k c(r,k) m^k, r<=8, |m|<=5, exact",
            tol: 0.0,
            default_samples: 88,
            draw: draw_stirling1,
            eval: eval_stirling1,
        },
        Identity {
            id: "combinatorics.eulerian-sum",
            suite: Suite::Combinatorics,
            description: "sum_k A(n,k) = n!, n<=8, exact",
            tol: 0.0,
            default_samples: 8,
            draw: draw_eulerian,
            eval: eval_eulerian,
        },
        Identity {
            id: "combinatorics.bernoulli-reflection",
            suite: Suite::Combinatorics,
            description: "B_{r,k}(r-z) = (-1)^k B_{r,k}(z) as polynomials, r<=5, k<=8",
            tol: 0.0,
            default_samples: 45,
            draw: draw_reflection,
            eval: eval_reflection,
        },
        Identity {
            id: "combinatorics.pochhammer-shift",
            suite: Suite::Combinatorics,
            description: "sum_k c_k (m+z)^k = (m+1)_{r-1} for rational z, r<=8, |m|<=10",
            tol: 0.0,
            default_samples: 100,
            draw: draw_shift,
            eval: eval_shift,
        },
    ]
}
