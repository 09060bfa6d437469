//! Identities of `ξ`, `H_r`, `K_r` and their `s`-derivatives.

use bizeta_core::bilateral::{
    h_at_integer, h_at_one, h_at_one_plus, h_at_r_plus, h_from_k, h_r, h_sderiv, h_via_zeta, k_at_integer, k_at_one,
    k_at_r_plus, k_from_h, k_r, k_sderiv, k_via_zeta_split, k_via_zeta_terms, xi, xi_closed_eulerian,
    xi_closed_powers, xi_hurwitz_pair, xi_polylog, xi_sderiv_npos,
};
use bizeta_core::combinatorics::{binomial_f64, factorial_f64, stirling_first_unsigned_f64, stirling_second_f64};
use bizeta_core::complex::{c, powi, real, ComplexValue, I, ZERO};
use bizeta_core::oracle::{brute_h, brute_k, central_sderiv, TruncationPlan};
use core::f64::consts::PI;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{contour_deriv, cpx, s_any, scaled, upper, uniform, Ctx, EvalResult, Identity, Injection, Limits, Suite};
use crate::report::{Inputs, Outcome};

const FD_H: f64 = 1e-5;
const RICHARDSON_Q: f64 = 10.0;

fn draw_branch(rng: &mut ChaCha8Rng, _: &Limits, _: usize) -> Inputs {
    let z = cpx(rng, (0.0, 1.0), (0.0, 2.0));
    loop {
        let rho = 6.0 * uniform(rng, 0.0, 1.0).sqrt();
        let s = ComplexValue::from_polar(rho, uniform(rng, -PI, PI));
        if (s - 1.0).norm() > 0.05 && z.im > 1e-3 {
            return Inputs::default().s(s).z(z);
        }
    }
}

fn eval_branch(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (s, z) = (inp.get_s(), inp.get_z());
    Ok(Outcome::new(xi_hurwitz_pair(ctx.params, s, z)?, xi_polylog(ctx.params, s, z)?))
}

fn draw_r_l_s_z(rng: &mut ChaCha8Rng, lim: &Limits, r_lo: u32, r_hi: u32) -> Inputs {
    let r = lim.r(rng, r_lo, r_hi);
    let l = rng.random_range(1..=3u32);
    Inputs::default().r(r).aux(l).s(s_any(rng)).z(upper(rng))
}

fn draw_h_diff_z(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    draw_r_l_s_z(rng, lim, 1, 4)
}

fn eval_h_diff_z(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, l, s, z) = (inp.get_r(), inp.get_aux(), inp.get_s(), inp.get_z());
    let p = ctx.params;
    let lhs = h_r(p, r, s, z + l as f64)?;
    let mut rhs = ZERO;
    for k in 0..r {
        rhs += binomial_f64(r - 1, k as i64) * (-(l as f64)).powi(k as i32) * h_r(p, r - k, s, z)?;
    }
    Ok(Outcome::new(lhs, rhs))
}

fn draw_k_diff_z(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    draw_r_l_s_z(rng, lim, 2, 4)
}

fn eval_k_diff_z(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, l, s, z) = (inp.get_r(), inp.get_aux(), inp.get_s(), inp.get_z());
    let p = ctx.params;
    let lhs = k_r(p, r, s, z + l as f64)?;
    let mut rhs = k_r(p, r, s, z)?;
    for k in 0..l {
        rhs -= k_r(p, r - 1, s, z + k as f64)?;
    }
    Ok(Outcome::new(lhs, rhs))
}

fn draw_diff_s(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    draw_r_l_s_z(rng, lim, 1, 3)
}

fn eval_h_diff_s(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, l, s, z) = (inp.get_r(), inp.get_aux(), inp.get_s(), inp.get_z());
    let p = ctx.params;
    let lhs = h_r(p, r, s - l as f64, z)?;
    let mut rhs = ZERO;
    for q in 0..=l {
        rhs += binomial_f64(l, q as i64) * powi(z, l - q) * h_r(p, r + q, s, z)?;
    }
    Ok(Outcome::new(lhs, rhs))
}

fn eval_k_diff_s(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, l, s, z) = (inp.get_r(), inp.get_aux(), inp.get_s(), inp.get_z());
    let p = ctx.params;
    let lhs = k_r(p, r, s - l as f64, z)?;
    let mut rhs = ZERO;
    for k in 1..=r {
        for q in 0..=l {
            let w = stirling_first_unsigned_f64(r, k) * binomial_f64(l, q as i64) * powi(z, l - q);
            for j in 1..=(k + q) {
                let sg = if (k + q - j) % 2 == 0 { 1.0 } else { -1.0 };
                rhs += w * sg * factorial_f64(j - 1) * stirling_second_f64(k + q, j) * k_r(p, j, s, z)?;
            }
        }
    }
    Ok(Outcome::new(lhs, rhs / factorial_f64(r - 1)))
}

fn draw_h_mult(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let big_n = rng.random_range(2..=3u32);
    Inputs::default().r(r).aux(big_n).s(s_any(rng)).z(upper(rng))
}

fn eval_h_mult(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, big_n, s, z) = (inp.get_r(), inp.get_aux(), inp.get_s(), inp.get_z());
    let p = ctx.params;
    let nf = big_n as f64;
    let lhs = h_r(p, r, s, nf * z)?;
    let mut rhs = ZERO;
    for k in 0..big_n {
        for l in 0..r {
            let w = binomial_f64(r - 1, l as i64) * (k as f64).powi(l as i32) * nf.powi((r - l - 1) as i32);
            if w != 0.0 {
                rhs += w * h_r(p, r - l, s, z + k as f64 / nf)?;
            }
        }
    }
    Ok(Outcome::new(lhs, (-s * nf.ln()).exp() * rhs))
}

fn draw_k_mult(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    Inputs::default().r(r).aux(2).s(s_any(rng)).z(upper(rng))
}

/// `N = 2`: the tuples `(k_1, …, k_r) ∈ {0,1}^r` with sum `t` number `binom(r, t)`.
fn eval_k_mult(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let p = ctx.params;
    let lhs = k_r(p, r, s, 2.0 * z)?;
    let mut rhs = ZERO;
    for t in 0..=r {
        rhs += binomial_f64(r, t as i64) * k_r(p, r, s, z + t as f64 / 2.0)?;
    }
    Ok(Outcome::new(lhs, (-s * 2f64.ln()).exp() * rhs))
}

fn draw_r_s_z(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    Inputs::default().r(r).s(s_any(rng)).z(upper(rng))
}

type Bilateral = fn(bizeta_core::EvalParams, u32, ComplexValue, ComplexValue) -> bizeta_core::Result<ComplexValue>;

fn deriv_z(ctx: &Ctx, inp: &Inputs, f: Bilateral) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let p = ctx.params;
    let d = contour_deriv(z, z.im / 4.0, 24, |w| f(p, r, s, w))?;
    Ok(scaled(d, -s * f(p, r, s + 1.0, z)?))
}

fn eval_h_deriv_z(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    deriv_z(ctx, inp, h_r)
}

fn eval_k_deriv_z(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    deriv_z(ctx, inp, k_r)
}

fn draw_sderiv_z(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let n = lim.n(rng, 2, 3);
    Inputs::default().r(r).n(n).z(upper(rng))
}

type Sderiv = fn(bizeta_core::EvalParams, u32, u32, ComplexValue) -> bizeta_core::Result<ComplexValue>;

fn sderiv_z(ctx: &Ctx, inp: &Inputs, f: Sderiv) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let p = ctx.params;
    let d = contour_deriv(z, z.im / 4.0, 24, |w| f(p, r, n, w))?;
    Ok(scaled(d, (n - 1) as f64 * f(p, r, n - 1, z)?))
}

fn eval_h_sderiv_z(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    sderiv_z(ctx, inp, h_sderiv)
}

fn eval_k_sderiv_z(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    sderiv_z(ctx, inp, k_sderiv)
}

fn draw_brute(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let s = c(r as f64 + 1.0 + uniform(rng, 0.05, 3.0), uniform(rng, -1.0, 1.0));
    Inputs::default().r(r).aux(4000).s(s).z(upper(rng))
}

fn eval_h_brute(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let b = brute_h(r, s, z, TruncationPlan::new(inp.get_aux() as usize))?;
    Ok(Outcome::new(h_r(ctx.params, r, s, z)?, b.value).with_tail(b.tail_bound))
}

fn eval_k_brute(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let b = brute_k(r, s, z, TruncationPlan::new(inp.get_aux() as usize))?;
    Ok(Outcome::new(k_r(ctx.params, r, s, z)?, b.value).with_tail(b.tail_bound))
}

fn draw_stirling(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    Inputs::default().r(r).s(s_any(rng)).z(upper(rng))
}

fn eval_h_from_k(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    Ok(Outcome::new(h_from_k(ctx.params, r, s, z)?, h_r(ctx.params, r, s, z)?))
}

fn eval_k_from_h(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    Ok(Outcome::new(k_from_h(ctx.params, r, s, z)?, k_r(ctx.params, r, s, z)?))
}

/// A point with `|Re z| < 1`, on or above the real axis, away from 0.
fn strip_point(rng: &mut ChaCha8Rng, re_lo: f64, re_hi: f64) -> ComplexValue {
    loop {
        let x = uniform(rng, re_lo, re_hi);
        let y = if rng.random_bool(0.3) { 0.0 } else { uniform(rng, 0.0, 1.0) };
        if x.abs() > 0.05 {
            return c(x, y);
        }
    }
}

fn draw_xi_zeros(rng: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    let n = 1 + i as u32 % lim.n_hi(4).max(1);
    Inputs::default().n(n).z(strip_point(rng, 0.05, 0.95))
}

/// Through the Hurwitz pair, where the zero comes from Bernoulli cancellation.
fn eval_xi_zeros(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let s = real(1.0 - inp.get_n() as f64);
    Ok(Outcome::new(xi_hurwitz_pair(ctx.params, s, inp.get_z())?, ZERO))
}

/// Cycles every `(r, n)` with `r, n <= 4`.
fn zero_cell(lim: &Limits, i: usize) -> (u32, u32) {
    let (rs, ns) = (lim.r_hi(4).max(1), lim.n_hi(4).max(1));
    let i = i as u32 % (rs * ns);
    (1 + i / ns, 1 + i % ns)
}

fn draw_h_zeros(rng: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    let (r, n) = zero_cell(lim, i);
    Inputs::default().r(r).n(n).z(strip_point(rng, -0.95, 0.95))
}

fn eval_h_zeros(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let s = real(1.0 - inp.get_n() as f64);
    Ok(Outcome::new(h_via_zeta(ctx.params, inp.get_r(), s, inp.get_z())?, ZERO))
}

fn draw_k_zeros(rng: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    let (r, n) = zero_cell(lim, i);
    Inputs::default().r(r).n(n).z(strip_point(rng, -0.95, r as f64 - 0.05))
}

fn eval_k_zeros(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let s = real(1.0 - inp.get_n() as f64);
    Ok(Outcome::new(k_via_zeta_split(ctx.params, inp.get_r(), s, inp.get_z())?, ZERO))
}

fn draw_half(_: &mut ChaCha8Rng, _: &Limits, _: usize) -> Inputs {
    Inputs::default().s(real(1.0)).z(real(0.5))
}

fn eval_xi_one_half(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    Ok(Outcome::new(xi(ctx.params, inp.get_s(), inp.get_z())?, PI * I))
}

fn draw_at_one(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    let z = if rng.random_bool(0.25) { real(uniform(rng, 0.05, 0.95)) } else { upper(rng) };
    Inputs::default().r(r).z(z)
}

fn eval_h_at_one(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, z) = (inp.get_r(), inp.get_z());
    Ok(Outcome::new(h_r(ctx.params, r, real(1.0), z)?, h_at_one(r, z)?))
}

fn eval_k_at_one(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, z) = (inp.get_r(), inp.get_z());
    Ok(Outcome::new(k_r(ctx.params, r, real(1.0), z)?, k_at_one(r, z)?))
}

fn draw_r_p_z(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    let q = rng.random_range(0..=3u32);
    Inputs::default().r(r).aux(q).z(upper(rng))
}

fn eval_h_at_one_plus(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, q, z) = (inp.get_r(), inp.get_aux(), inp.get_z());
    Ok(Outcome::new(h_r(ctx.params, r, real(1.0 + q as f64), z)?, h_at_one_plus(r, q, z)?))
}

fn eval_k_at_one_plus(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, q, z) = (inp.get_r(), inp.get_aux(), inp.get_z());
    Ok(Outcome::new(k_r(ctx.params, r, real(1.0 + q as f64), z)?, k_at_integer(r, 1 + q as i64, z)?))
}

fn eval_h_at_r_plus(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, q, z) = (inp.get_r(), inp.get_aux(), inp.get_z());
    let s = real((r + q) as f64);
    Ok(Outcome::new(h_r(ctx.params, r, s, z)?, h_at_r_plus(r, q, z)?))
}

fn eval_k_at_r_plus(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, q, z) = (inp.get_r(), inp.get_aux(), inp.get_z());
    let s = real((r + q) as f64);
    Ok(Outcome::new(k_r(ctx.params, r, s, z)?, k_at_r_plus(r, q, z)?))
}

fn eval_h_at_integer_cross(_: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, q, z) = (inp.get_r(), inp.get_aux(), inp.get_z());
    Ok(Outcome::new(h_at_integer(r, 1 + q as i64, z)?, h_at_one_plus(r, q, z)?))
}

fn draw_eulerian(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let n = lim.n(rng, 1, 5);
    let z = if rng.random_bool(0.25) { real(uniform(rng, 0.1, 0.9)) } else { cpx(rng, (-0.9, 1.9), (0.1, 1.0)) };
    Inputs::default().n(n).z(z)
}

fn eval_xi_eulerian(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (n, z) = (inp.get_n(), inp.get_z());
    Ok(Outcome::new(xi_closed_eulerian(n, z)?, xi(ctx.params, real(n as f64 + 1.0), z)?))
}

fn eval_xi_powers(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (n, z) = (inp.get_n(), inp.get_z());
    Ok(Outcome::new(xi_closed_powers(n, z)?, xi(ctx.params, real(n as f64 + 1.0), z)?))
}

fn draw_xi_sderiv_fd(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let n = lim.n(rng, 1, 4);
    Inputs::default().n(n).z(upper(rng))
}

/// Richardson-extrapolated central difference in `s` at `s = 1-n`.
fn fd_sderiv(
    mut f: impl FnMut(ComplexValue) -> bizeta_core::Result<ComplexValue>,
    n: u32,
) -> bizeta_core::Result<ComplexValue> {
    central_sderiv(&mut f, real(1.0 - n as f64), FD_H, Some(RICHARDSON_Q))
}

fn eval_xi_sderiv_fd(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (n, z) = (inp.get_n(), inp.get_z());
    let d = fd_sderiv(|s| xi(ctx.params, s, z), n)?;
    Ok(scaled(d, xi_sderiv_npos(ctx.params, n, z)?))
}

fn draw_sderiv_fd(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let n = lim.n(rng, 1, 3);
    Inputs::default().r(r).n(n).z(upper(rng))
}

fn eval_h_sderiv_fd(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let d = fd_sderiv(|s| h_r(ctx.params, r, s, z), n)?;
    Ok(scaled(d, h_sderiv(ctx.params, r, n, z)?))
}

fn eval_k_sderiv_fd(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let d = fd_sderiv(|s| k_r(ctx.params, r, s, z), n)?;
    Ok(scaled(d, k_sderiv(ctx.params, r, n, z)?))
}

fn draw_k_strip(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    let x = uniform(rng, 0.05, 0.95) * r as f64;
    let y = if rng.random_bool(0.3) { 0.0 } else { uniform(rng, 0.0, 1.0) };
    Inputs::default().r(r).s(s_any(rng)).z(c(x, y))
}

fn eval_k_via_zeta(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let (direct, mirror) = k_via_zeta_terms(ctx.params, r, s, z)?;
    let mirror = match ctx.injection {
        Some(Injection::KMirrorSign) => -mirror,
        None => mirror,
    };
    Ok(Outcome::new(direct + mirror, k_r(ctx.params, r, s, z)?))
}

fn draw_k_split(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    Inputs::default().r(r).s(s_any(rng)).z(strip_point(rng, -0.95, r as f64 - 0.05))
}

fn eval_k_split(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    Ok(Outcome::new(k_via_zeta_split(ctx.params, r, s, z)?, k_r(ctx.params, r, s, z)?))
}

fn draw_h_strip(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    Inputs::default().r(r).s(s_any(rng)).z(strip_point(rng, -0.95, 0.95))
}

fn eval_h_via_zeta(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    Ok(Outcome::new(h_via_zeta(ctx.params, r, s, z)?, h_r(ctx.params, r, s, z)?))
}

fn draw_period(rng: &mut ChaCha8Rng, _: &Limits, _: usize) -> Inputs {
    let z = if rng.random_bool(0.3) { real(uniform(rng, 0.05, 0.95)) } else { upper(rng) };
    Inputs::default().s(s_any(rng)).z(z)
}

/// Both sides through the Hurwitz pair, which sees `z` and `z+1` as
/// different arguments until it reduces them.
fn eval_period(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (s, z) = (inp.get_s(), inp.get_z());
    if (s - 1.0).norm() < 1e-3 {
        return Ok(Outcome::new(xi(ctx.params, s, z + 1.0)?, xi(ctx.params, s, z)?));
    }
    Ok(Outcome::new(xi_hurwitz_pair(ctx.params, s, z + 1.0)?, xi_polylog_or_pair(ctx, s, z)?))
}

fn xi_polylog_or_pair(ctx: &Ctx, s: ComplexValue, z: ComplexValue) -> bizeta_core::Result<ComplexValue> {
    if z.im > 0.0 {
        xi_polylog(ctx.params, s, z)
    } else {
        xi_hurwitz_pair(ctx.params, s, z)
    }
}

macro_rules! identity {
    ($id:expr, $desc:expr, $tol:expr, $n:expr, $draw:expr, $eval:expr) => {
        Identity {
            id: $id,
            suite: Suite::Bilateral,
            description: $desc,
            tol: $tol,
            default_samples: $n,
            draw: $draw,
            eval: $eval,
        }
    };
}

pub(super) fn identities() -> Vec<Identity> {
    vec![
        identity!("bilateral.xi-branch", "Hurwitz-pair and polylog routes for xi agree, |s|<=6", 1e-9, 50, draw_branch, eval_branch),
        identity!("bilateral.H-diff-z", "H_r(s,z+l) = sum_k (-l)^k C(r-1,k) H_{r-k}(s,z), r<=4, l<=3", 1e-9, 20, draw_h_diff_z, eval_h_diff_z),
        identity!("bilateral.K-diff-z", "K_r(s,z+l) = K_r(s,z) - sum_{k<l} K_{r-1}(s,z+k), r<=4, l<=3", 1e-9, 20, draw_k_diff_z, eval_k_diff_z),
        identity!("bilateral.H-diff-s", "H_r(s-l,z) = sum_p C(l,p) z^(l-p) H_{r+p}(s,z), r<=3, l<=3", 1e-9, 20, draw_diff_s, eval_h_diff_s),
        identity!("bilateral.K-diff-s", "K_r(s-l,z) through Stirling numbers of both kinds, r<=3, l<=3", 1e-9, 20, draw_diff_s, eval_k_diff_s),
        identity!("bilateral.H-mult", "H_r(s,Nz) multiplication formula, N in {2,3}, r<=3", 1e-8, 20, draw_h_mult, eval_h_mult),
        identity!("bilateral.K-mult", "K_r(s,2z) multiplication formula, r<=3", 1e-8, 20, draw_k_mult, eval_k_mult),
        identity!("bilateral.H-deriv-z", "dH_r/dz(s,z) = -s H_r(s+1,z) on a Cauchy circle", 1e-8, 20, draw_r_s_z, eval_h_deriv_z),
        identity!("bilateral.K-deriv-z", "dK_r/dz(s,z) = -s K_r(s+1,z) on a Cauchy circle", 1e-8, 20, draw_r_s_z, eval_k_deriv_z),
        identity!("bilateral.H-sderiv-z", "d/dz dH_r/ds(1-n,z) = (n-1) dH_r/ds(2-n,z), n in {2,3}", 1e-8, 20, draw_sderiv_z, eval_h_sderiv_z),
        identity!("bilateral.K-sderiv-z", "d/dz dK_r/ds(1-n,z) = (n-1) dK_r/ds(2-n,z), n in {2,3}", 1e-8, 20, draw_sderiv_z, eval_k_sderiv_z),
        identity!("bilateral.H-brute", "H_r vs truncated bilateral sum, Re s > r+1, N=4000, beyond tail bound", 1e-7, 20, draw_brute, eval_h_brute),
        identity!("bilateral.K-brute", "K_r vs truncated bilateral sum, Re s > r+1, N=4000, beyond tail bound", 1e-7, 20, draw_brute, eval_k_brute),
        identity!("bilateral.H-from-K", "H_r = sum_k (-1)^(r-k) (k-1)! S2(r,k) K_k", 1e-9, 24, draw_stirling, eval_h_from_k),
        identity!("bilateral.K-from-H", "K_r = 1/(r-1)! sum_k c(r,k) H_k", 1e-9, 24, draw_stirling, eval_k_from_h),
        identity!("bilateral.xi-zeros", "xi(1-n,z) = 0 through the Hurwitz pair, n<=4", 1e-10, 20, draw_xi_zeros, eval_xi_zeros),
        identity!("bilateral.H-zeros", "H_r(1-n,z) = 0 through Hurwitz zeta, r<=4, n<=4", 1e-10, 32, draw_h_zeros, eval_h_zeros),
        identity!("bilateral.K-zeros", "K_r(1-n,z) = 0 through multiple Hurwitz zeta, r<=4, n<=4", 1e-10, 32, draw_k_zeros, eval_k_zeros),
        identity!("bilateral.xi-one-half", "xi(1,1/2) = pi i", 1e-12, 1, draw_half, eval_xi_one_half),
        identity!("bilateral.H-at-one", "H_r(1,z) = (-z)^(r-1) (pi i + pi cot pi z)", 1e-9, 20, draw_at_one, eval_h_at_one),
        identity!("bilateral.K-at-one", "K_r(1,z) = (1-z)_{r-1}/(r-1)! (pi i + pi cot pi z)", 1e-9, 20, draw_at_one, eval_k_at_one),
        identity!("bilateral.H-at-one-plus", "H_r(1+p,z) closed form, p<=3", 1e-9, 20, draw_r_p_z, eval_h_at_one_plus),
        identity!("bilateral.K-at-one-plus", "K_r(1+p,z) from the xi expansion with closed-form xi, p<=3", 1e-9, 20, draw_r_p_z, eval_k_at_one_plus),
        identity!("bilateral.H-at-r-plus", "H_r(r+n,z) closed form, n<=3", 1e-9, 20, draw_r_p_z, eval_h_at_r_plus),
        identity!("bilateral.K-at-r-plus", "K_r(r+n,z) closed form, n<=3", 1e-9, 20, draw_r_p_z, eval_k_at_r_plus),
        identity!("bilateral.H-at-integer", "two closed forms of H_r(1+p,z) agree", 1e-9, 20, draw_r_p_z, eval_h_at_integer_cross),
        identity!("bilateral.xi-eulerian", "xi(n+1,z) Eulerian closed form vs direct xi, n<=5", 1e-9, 25, draw_eulerian, eval_xi_eulerian),
        identity!("bilateral.xi-powers", "xi(n+1,z) as a polynomial in xi(1,z) vs direct xi, n<=5", 1e-9, 25, draw_eulerian, eval_xi_powers),
        identity!("bilateral.xi-sderiv-fd", "dxi/ds(1-n,z) polylog form vs Richardson central difference", 1e-6, 10, draw_xi_sderiv_fd, eval_xi_sderiv_fd),
        identity!("bilateral.H-sderiv-fd", "dH_r/ds(1-n,z) polylog form vs Richardson central difference", 1e-6, 10, draw_sderiv_fd, eval_h_sderiv_fd),
        identity!("bilateral.K-sderiv-fd", "dK_r/ds(1-n,z) polylog form vs Richardson central difference", 1e-6, 10, draw_sderiv_fd, eval_k_sderiv_fd),
        identity!("bilateral.K-via-zeta", "K_r = zeta_r(s,z) + (-1)^(r-1) e^(-pi i s) zeta_r(s,r-z), 0<Re z<r", 1e-9, 30, draw_k_strip, eval_k_via_zeta),
        identity!("bilateral.K-split", "K_r with the m=0 term split off, -1<Re z<r", 1e-9, 30, draw_k_split, eval_k_split),
        identity!("bilateral.H-via-zeta", "H_r through Hurwitz zeta at 1+z and 1-z, -1<Re z<1", 1e-9, 30, draw_h_strip, eval_h_via_zeta),
        identity!("bilateral.xi-period", "xi(s,z+1) = xi(s,z)", 1e-9, 20, draw_period, eval_period),
    ]
}
