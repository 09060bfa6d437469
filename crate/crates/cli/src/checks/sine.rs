//! Identities of the generalized multiple sine functions, all stated for the
//! analytic logarithms `-∂H_r/∂s(1-n, z)` and `-∂K_r/∂s(1-n, z)`.

use bizeta_core::bilateral::multiple_hurwitz;
use bizeta_core::complex::{c, real, ComplexValue, ZERO};
use bizeta_core::sine::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{cpx, scaled, uniform, Ctx, EvalResult, Identity, Limits, Suite};
use crate::report::{Inputs, Outcome};

const FD_H: f64 = 1e-5;

fn sine_point(rng: &mut ChaCha8Rng) -> ComplexValue {
    cpx(rng, (-0.9, 0.9), (0.02, 1.0))
}

fn draw_bridge(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    let n = lim.n(rng, 1, 3);
    Inputs::default().r(r).n(n).z(sine_point(rng))
}

fn eval_primitive_bridge(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_primitive_sine(p, r, n, z)?, log_primitive_from_normalized(p, r, n, z)?))
}

fn eval_normalized_bridge(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_normalized_sine(p, r, n, z)?, log_normalized_from_primitive(p, r, n, z)?))
}

fn draw_diff(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 2, 4);
    let n = lim.n(rng, 1, 3);
    let l = rng.random_range(1..=2u32);
    Inputs::default().r(r).n(n).aux(l).z(sine_point(rng))
}

fn eval_primitive_diff(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, l, z) = (inp.get_r(), inp.get_n(), inp.get_aux(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_primitive_sine(p, r, n, z + l as f64)?, log_primitive_shift(p, r, n, z, l)?))
}

fn eval_normalized_diff(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, l, z) = (inp.get_r(), inp.get_n(), inp.get_aux(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_normalized_sine(p, r, n, z + l as f64)?, log_normalized_shift(p, r, n, z, l)?))
}

fn draw_r3_n3(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let n = lim.n(rng, 1, 3);
    Inputs::default().r(r).n(n).z(sine_point(rng))
}

fn eval_primitive_s_shift(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_primitive_sine(p, r, n, z)?, log_primitive_from_first_order(p, r, n, z)?))
}

fn eval_normalized_s_shift(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_normalized_sine(p, r, n, z)?, log_normalized_from_first_order(p, r, n, z)?))
}

fn draw_mult(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let n = lim.n(rng, 1, 2);
    Inputs::default().r(r).n(n).aux(2).z(sine_point(rng))
}

fn eval_primitive_mult(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, big_n, z) = (inp.get_r(), inp.get_n(), inp.get_aux(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(
        log_gen_primitive_sine(p, r, n, big_n as f64 * z)?,
        log_primitive_scaled(p, r, n, z, big_n)?,
    ))
}

fn eval_normalized_mult(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, big_n, z) = (inp.get_r(), inp.get_n(), inp.get_aux(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(
        log_gen_normalized_sine(p, r, n, big_n as f64 * z)?,
        log_normalized_scaled(p, r, n, z, big_n)?,
    ))
}

fn draw_r4(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    Inputs::default().r(r).n(1).z(sine_point(rng))
}

type LogSine = fn(bizeta_core::EvalParams, u32, u32, ComplexValue) -> bizeta_core::Result<ComplexValue>;

fn fd(ctx: &Ctx, f: LogSine, r: u32, n: u32, z: ComplexValue) -> bizeta_core::Result<ComplexValue> {
    Ok((f(ctx.params, r, n, z + FD_H)? - f(ctx.params, r, n, z - FD_H)?) / (2.0 * FD_H))
}

fn eval_primitive_logderiv(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, z) = (inp.get_r(), inp.get_z());
    Ok(scaled(fd(ctx, log_gen_primitive_sine, r, 1, z)?, log_deriv_primitive_first(r, z)?))
}

fn eval_normalized_logderiv(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, z) = (inp.get_r(), inp.get_z());
    Ok(scaled(fd(ctx, log_gen_normalized_sine, r, 1, z)?, log_deriv_normalized_first(r, z)?))
}

fn draw_ladder_fd(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 4);
    let n = lim.n(rng, 1, 3);
    Inputs::default().r(r).n(n).z(sine_point(rng))
}

fn eval_primitive_ladder_fd(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let rhs = n as f64 * log_gen_primitive_sine(ctx.params, r, n, z)?;
    Ok(scaled(fd(ctx, log_gen_primitive_sine, r, n + 1, z)?, rhs))
}

fn eval_normalized_ladder_fd(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let rhs = n as f64 * log_gen_normalized_sine(ctx.params, r, n, z)?;
    Ok(scaled(fd(ctx, log_gen_normalized_sine, r, n + 1, z)?, rhs))
}

fn draw_quadrature(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 2, 3);
    let n = lim.n(rng, 1, 2);
    Inputs::default().r(r).n(n).aux(1).z(sine_point(rng))
}

fn eval_primitive_ladder_integral(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(log_primitive_ladder(p, r, n, z)?, log_gen_primitive_sine(p, r, n + 1, z)?))
}

/// Integrates `log 𝒮ᶜ_{r,n+1}`, which stays finite at `t = 0`.
fn eval_normalized_ladder_integral(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(log_normalized_ladder(p, r, n + 1, z)?, log_gen_normalized_sine(p, r, n + 2, z)?))
}

fn eval_primitive_raabe(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, l, z) = (inp.get_r(), inp.get_n(), inp.get_aux(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(primitive_window_integral(p, r, n, z, l)?, primitive_raabe(p, r, n, z, l)?))
}

fn eval_normalized_raabe(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, l, z) = (inp.get_r(), inp.get_n(), inp.get_aux(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(normalized_window_integral(p, r, n, z, l)?, normalized_raabe(p, r, n, z, l)?))
}

/// `i`-th cell of `r in 1..=4` × `n in 1..=3`, skipping cells rejected by `keep`.
fn grid_rn(lim: &Limits, i: usize, keep: fn(u32, u32) -> bool) -> Inputs {
    let mut cells = Vec::new();
    for r in 1..=lim.r_hi(4).max(1) {
        for n in 1..=lim.n_hi(3).max(1) {
            if keep(r, n) {
                cells.push((r, n));
            }
        }
    }
    let (r, n) = cells[i % cells.len()];
    Inputs::default().r(r).n(n)
}

fn draw_primitive_zero(_: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    grid_rn(lim, i, |r, n| n + r >= 3).z(ZERO)
}

fn eval_primitive_zero(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n) = (inp.get_r(), inp.get_n());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_primitive_sine(p, r, n, ZERO)?, log_gen_primitive_sine_at_zero(p, r, n)?))
}

fn draw_normalized_zero(_: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    grid_rn(lim, i, |_, _| true).z(ZERO)
}

/// `n` here indexes `𝒮ᶜ_{r,n+1}(0)`.
fn eval_normalized_zero(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n) = (inp.get_r(), inp.get_n());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_normalized_sine(p, r, n + 1, ZERO)?, log_gen_normalized_sine_at_zero(p, r, n)?))
}

fn draw_half(_: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    grid_rn(lim, i, |_, _| true).z(real(0.5))
}

fn eval_primitive_half(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n) = (inp.get_r(), inp.get_n());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_primitive_sine(p, r, n, real(0.5))?, log_gen_primitive_sine_at_half(p, r, n)?))
}

fn eval_normalized_half(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n) = (inp.get_r(), inp.get_n());
    let p = ctx.params;
    Ok(Outcome::new(log_gen_normalized_sine(p, r, n, real(0.5))?, log_gen_normalized_sine_at_half(p, r, n)?))
}

fn draw_classical(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 2, 4);
    let z = if rng.random_bool(0.25) { real(uniform(rng, -0.9, 0.9)) } else { sine_point(rng) };
    Inputs::default().r(r).z(z)
}

/// Compared as values: the classical integral and the polylog form may
/// differ by a multiple of `2πi` in the logarithm.
fn eval_classical_bridge(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, z) = (inp.get_r(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(
        log_gen_primitive_sine(p, r, 1, z)?.exp(),
        log_primitive_from_classical(p, r, z)?.exp(),
    ))
}

fn eval_classical_nodes(_: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, z) = (inp.get_r(), inp.get_z());
    let a = log_classical_primitive_sine_with(r, z, 32)?;
    let b = log_classical_primitive_sine_with(r, z, 64)?;
    Ok(scaled(a, b))
}

fn draw_kurokawa(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let n = lim.n(rng, 1, 3);
    let z = c(uniform(rng, 0.05, 0.95) * r as f64, if rng.random_bool(0.3) { 0.0 } else { uniform(rng, 0.0, 0.8) });
    Inputs::default().r(r).n(n).z(z)
}

fn eval_kurokawa_bridge(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, z) = (inp.get_r(), inp.get_n(), inp.get_z());
    let p = ctx.params;
    Ok(Outcome::new(
        log_gen_normalized_sine(p, r, n, z)?.exp(),
        log_normalized_from_kurokawa(p, r, n, z)?.exp(),
    ))
}

fn draw_zeta_r(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let n = lim.n(rng, 1, 3);
    Inputs::default().r(r).n(n).z(cpx(rng, (0.1, 3.0), (-1.0, 1.0)))
}

fn eval_zeta_r(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, n, x) = (inp.get_r(), inp.get_n(), inp.get_z());
    Ok(Outcome::new(
        multiple_hurwitz(ctx.params, r, real(1.0 - n as f64), x)?,
        zeta_r_at_nonpositive(r, n, x)?,
    ))
}

macro_rules! identity {
    ($id:expr, $desc:expr, $tol:expr, $n:expr, $draw:expr, $eval:expr) => {
        Identity {
            id: $id,
            suite: Suite::Sine,
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
        identity!("sine.primitive-stirling", "log S_{r,n} = sum_k (-1)^(r-k) (k-1)! S2(r,k) log Sc_{k,n}, r<=4, n<=3", 1e-9, 20, draw_bridge, eval_primitive_bridge),
        identity!("sine.normalized-stirling", "log Sc_{r,n} = 1/(r-1)! sum_k c(r,k) log S_{k,n}, r<=4, n<=3", 1e-9, 20, draw_bridge, eval_normalized_bridge),
        identity!("sine.primitive-diff-z", "S_{r,n}(z+l) as a product of S_{r-k,n}(z), l in {1,2}", 1e-8, 20, draw_diff, eval_primitive_diff),
        identity!("sine.normalized-diff-z", "Sc_{r,n}(z+l) = Sc_{r,n}(z) / prod_{k<l} Sc_{r-1,n}(z+k), l in {1,2}", 1e-8, 20, draw_diff, eval_normalized_diff),
        identity!("sine.primitive-s-shift", "S_{r,n} from the first-order S_{r+p,1}, r<=3, n<=3", 1e-8, 20, draw_r3_n3, eval_primitive_s_shift),
        identity!("sine.normalized-s-shift", "Sc_{r,n} from the first-order Sc_{j,1}, r<=3, n<=3", 1e-8, 20, draw_r3_n3, eval_normalized_s_shift),
        identity!("sine.primitive-mult", "S_{r,n}(2z) multiplication formula, r<=3, n<=2", 1e-7, 20, draw_mult, eval_primitive_mult),
        identity!("sine.normalized-mult", "Sc_{r,n}(2z) multiplication formula, r<=3, n<=2", 1e-7, 20, draw_mult, eval_normalized_mult),
        identity!("sine.primitive-logderiv", "S'_{r,1}/S_{r,1} = (-z)^(r-1) (pi i + pi cot pi z) by central differences", 1e-6, 20, draw_r4, eval_primitive_logderiv),
        identity!("sine.normalized-logderiv", "Sc'_{r,1}/Sc_{r,1} = (1-z)_{r-1}/(r-1)! (pi i + pi cot pi z) by central differences", 1e-6, 20, draw_r4, eval_normalized_logderiv),
        identity!("sine.primitive-ladder-fd", "d/dz log S_{r,n+1} = n log S_{r,n} by central differences", 1e-6, 20, draw_ladder_fd, eval_primitive_ladder_fd),
        identity!("sine.normalized-ladder-fd", "d/dz log Sc_{r,n+1} = n log Sc_{r,n} by central differences", 1e-6, 20, draw_ladder_fd, eval_normalized_ladder_fd),
        identity!("sine.primitive-ladder-integral", "log S_{r,n+1}(z) = log S_{r,n+1}(0) + n int_0^z log S_{r,n}", 1e-7, 8, draw_quadrature, eval_primitive_ladder_integral),
        identity!("sine.normalized-ladder-integral", "log Sc_{r,n+2}(z) = log Sc_{r,n+2}(0) + (n+1) int_0^z log Sc_{r,n+1}", 1e-7, 8, draw_quadrature, eval_normalized_ladder_integral),
        identity!("sine.primitive-raabe", "n int_0^1 log S_{r,n}(z+t) dt = sum_k (-1)^k C(r-1,k) log S_{r-k,n+1}(z)", 1e-7, 8, draw_quadrature, eval_primitive_raabe),
        identity!("sine.normalized-raabe", "n int_0^1 log Sc_{r,n}(z+t) dt = -log Sc_{r-1,n+1}(z)", 1e-7, 8, draw_quadrature, eval_normalized_raabe),
        identity!("sine.primitive-at-zero", "log S_{r,n}(0) from zeta(n+r-1)", 1e-10, 10, draw_primitive_zero, eval_primitive_zero),
        identity!("sine.normalized-at-zero", "log Sc_{r,n+1}(0) from zeta(n+k)", 1e-10, 12, draw_normalized_zero, eval_normalized_zero),
        identity!("sine.primitive-at-half", "log S_{r,n}(1/2) from (2^(1-m)-1) zeta(m), with the -log 2 limit", 1e-10, 12, draw_half, eval_primitive_half),
        identity!("sine.normalized-at-half", "log Sc_{r,n}(1/2) from (2^(1-m)-1) zeta(m), with the -log 2 limit", 1e-10, 12, draw_half, eval_normalized_half),
        identity!("sine.classical-bridge", "S_{r,1} from the classical primitive sine by quadrature", 1e-8, 20, draw_classical, eval_classical_bridge),
        identity!("sine.classical-nodes", "classical primitive sine quadrature at 32 and 64 nodes per panel", 1e-10, 10, draw_classical, eval_classical_nodes),
        identity!("sine.kurokawa-bridge", "Sc_{r,n} = exp((-1)^(r-1) pi i (n-1)!/(r+n-1)! B_{r,r+n-1}(z)) S_{r,n}, 0<Re z<r", 1e-8, 20, draw_kurokawa, eval_kurokawa_bridge),
        identity!("sine.zeta-r-nonpositive", "zeta_r(1-n,x) = (-1)^r (n-1)!/(n+r-1)! B_{r,r+n-1}(x)", 1e-9, 20, draw_zeta_r, eval_zeta_r),
    ]
}
