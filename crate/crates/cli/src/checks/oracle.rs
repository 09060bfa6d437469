//! Closed-form evaluators against the brute-force references.

use bizeta_core::bilateral::{h_r, k_r, multiple_hurwitz};
use bizeta_core::combinatorics::{binomial, eulerian, stirling_first_unsigned, stirling_second, to_f64, RationalInt};
use bizeta_core::complex::{c, real, ComplexValue};
use bizeta_core::oracle::{
    brute_h, brute_k, brute_zeta_r, count_permutations, count_set_partitions, pascal_row, BruteSum, TruncationPlan,
};
use bizeta_core::sine::{classical_primitive_sine, classical_primitive_sine_product};
use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;

use super::{cpx, uniform, Ctx, EvalResult, Identity, Limits, Suite};
use crate::report::{Inputs, Outcome};

const GRID_N: u32 = 100_000;
const HONEST_N: u32 = 2_000;

/// `z` with `Im z ∈ [0, 1)`, kept away from the integers when nearly real.
fn grid_z(rng: &mut ChaCha8Rng) -> ComplexValue {
    loop {
        let z = cpx(rng, (-0.5, 1.5), (0.0, 1.0));
        if z.im > 0.05 || (z.re - z.re.round()).abs() > 0.05 {
            return z;
        }
    }
}

/// Cell `i / 10` of `r ∈ {1,2,3}` × `Re s ∈ {r+1, r+2.5}`.
fn draw_grid_with(rng: &mut ChaCha8Rng, lim: &Limits, i: usize, half_width: u32) -> Inputs {
    let rows = lim.r_hi(3).max(1) as usize;
    let cell = (i / 10) % (2 * rows);
    let r = 1 + (cell / 2) as u32;
    let sigma = r as f64 + if cell % 2 == 0 { 1.0 } else { 2.5 };
    let s = c(sigma, uniform(rng, -0.5, 0.5));
    Inputs::default().r(r).aux(half_width).s(s).z(grid_z(rng))
}

fn draw_grid(rng: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    draw_grid_with(rng, lim, i, GRID_N)
}

fn draw_honest(rng: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    draw_grid_with(rng, lim, i, HONEST_N)
}

fn eval_h_grid(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let b = brute_h(r, s, z, TruncationPlan::new(inp.get_aux() as usize))?;
    Ok(Outcome::new(h_r(ctx.params, r, s, z)?, b.value).with_tail(b.tail_bound))
}

fn eval_k_grid(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let b = brute_k(r, s, z, TruncationPlan::new(inp.get_aux() as usize))?;
    Ok(Outcome::new(k_r(ctx.params, r, s, z)?, b.value).with_tail(b.tail_bound))
}

type Brute = fn(u32, ComplexValue, ComplexValue, TruncationPlan) -> bizeta_core::Result<BruteSum>;

/// `S_{2N}` against `S_N`, with the bound reported at `N`.
fn honest(inp: &Inputs, f: Brute) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let n = inp.get_aux() as usize;
    let a = f(r, s, z, TruncationPlan::new(n))?;
    let b = f(r, s, z, TruncationPlan::new(2 * n))?;
    Ok(Outcome::new(a.value, b.value).with_tail(a.tail_bound))
}

fn eval_h_honest(_: &Ctx, inp: &Inputs) -> EvalResult {
    honest(inp, brute_h)
}

fn eval_k_honest(_: &Ctx, inp: &Inputs) -> EvalResult {
    honest(inp, brute_k)
}

fn draw_zeta_r(rng: &mut ChaCha8Rng, lim: &Limits, _: usize) -> Inputs {
    let r = lim.r(rng, 1, 3);
    let s = c(r as f64 + uniform(rng, 1.0, 3.0), uniform(rng, -1.0, 1.0));
    Inputs::default().r(r).aux(20_000).s(s).z(cpx(rng, (0.2, 3.0), (-1.0, 1.0)))
}

fn eval_zeta_r(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, s, z) = (inp.get_r(), inp.get_s(), inp.get_z());
    let b = brute_zeta_r(r, s, z, inp.get_aux() as usize)?;
    Ok(Outcome::new(multiple_hurwitz(ctx.params, r, s, z)?, b.value).with_tail(b.tail_bound))
}

fn draw_row(_: &mut ChaCha8Rng, lim: &Limits, i: usize) -> Inputs {
    let hi = lim.n_hi(8).max(1);
    Inputs::default().n(1 + (i as u32 % hi))
}

fn row_outcome(table: impl Fn(u32) -> RationalInt, counts: &[u64]) -> Outcome {
    let mut equal = true;
    let (mut a, mut b) = (0.0, 0.0);
    for (k, &cnt) in counts.iter().enumerate() {
        let t = table(k as u32);
        let e = RationalInt::from_integer(BigInt::from(cnt));
        equal &= t == e;
        a += to_f64(&t);
        b += cnt as f64;
    }
    Outcome::exact(real(a), real(b), equal)
}

fn eval_enum_stirling2(_: &Ctx, inp: &Inputs) -> EvalResult {
    let n = inp.get_n();
    Ok(row_outcome(|k| stirling_second(n, k), &count_set_partitions(n as usize)))
}

fn eval_enum_stirling1(_: &Ctx, inp: &Inputs) -> EvalResult {
    let n = inp.get_n();
    let (_, cycles) = count_permutations(n as usize);
    Ok(row_outcome(|k| stirling_first_unsigned(n, k), &cycles))
}

fn eval_enum_eulerian(_: &Ctx, inp: &Inputs) -> EvalResult {
    let n = inp.get_n();
    let (ascents, _) = count_permutations(n as usize);
    Ok(row_outcome(|k| eulerian(n, k), &ascents))
}

fn eval_enum_binomial(_: &Ctx, inp: &Inputs) -> EvalResult {
    let n = inp.get_n();
    Ok(row_outcome(|k| binomial(n, k as i64), &pascal_row(n as usize)))
}

fn draw_product(rng: &mut ChaCha8Rng, _: &Limits, i: usize) -> Inputs {
    let z = if i == 0 { real(0.3) } else { cpx(rng, (0.1, 0.4), (0.0, 0.2)) };
    Inputs::default().r(2).aux(2000).z(z)
}

fn eval_product(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (r, z) = (inp.get_r(), inp.get_z());
    Ok(Outcome::new(
        classical_primitive_sine_product(r, z, inp.get_aux() as usize)?,
        classical_primitive_sine(ctx.params, r, z)?,
    ))
}

macro_rules! identity {
    ($id:expr, $desc:expr, $tol:expr, $n:expr, $draw:expr, $eval:expr) => {
        Identity {
            id: $id,
            suite: Suite::Oracle,
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
        identity!("oracle.H-brute-grid", "H_r vs bilateral sum N=1e5, r<=3, Re s in {r+1, r+2.5}, beyond tail bound", 1e-9, 60, draw_grid, eval_h_grid),
        identity!("oracle.K-brute-grid", "K_r vs bilateral sum N=1e5, r<=3, Re s in {r+1, r+2.5}, beyond tail bound", 1e-9, 60, draw_grid, eval_k_grid),
        identity!("oracle.H-tail-honest", "|S_2N - S_N| within the tail bound at N for the H sum", 1e-13, 60, draw_honest, eval_h_honest),
        identity!("oracle.K-tail-honest", "|S_2N - S_N| within the tail bound at N for the K sum", 1e-13, 60, draw_honest, eval_k_honest),
        identity!("oracle.zeta-r-brute", "multiple Hurwitz zeta vs single-index sum with integral tail", 1e-8, 20, draw_zeta_r, eval_zeta_r),
        identity!("oracle.enum-stirling2", "S2(n,k) equals counted set partitions, n<=8", 0.0, 8, draw_row, eval_enum_stirling2),
        identity!("oracle.enum-stirling1", "c(n,k) equals permutations counted by cycles, n<=8", 0.0, 8, draw_row, eval_enum_stirling1),
        identity!("oracle.enum-eulerian", "A(n,k) equals permutations counted by ascents, n<=8", 0.0, 8, draw_row, eval_enum_eulerian),
        identity!("oracle.enum-binomial", "C(n,k) equals the Pascal recurrence, n<=8", 0.0, 8, draw_row, eval_enum_binomial),
        identity!("oracle.product-vs-integral", "truncated product (2000 factors) vs integral for the classical S_2", 1e-4, 5, draw_product, eval_product),
    ]
}
