//! Classical special functions.

use bizeta_core::complex::{ln, near_integer, ComplexValue};
use bizeta_core::special::{complex_gamma, hurwitz_zeta, hurwitz_zeta_with, polylog, HurwitzMethod};
use bizeta_core::EvalParams;
use rand_chacha::ChaCha8Rng;

use super::{cpx, scaled, uniform, Ctx, EvalResult, Identity, Limits, Suite};
use crate::report::{Inputs, Outcome};

fn draw_hurwitz_shift(rng: &mut ChaCha8Rng, _: &Limits, _: usize) -> Inputs {
    loop {
        let s = cpx(rng, (-4.0, 4.0), (-3.0, 3.0));
        let a = cpx(rng, (0.1, 3.0), (-1.0, 1.0));
        if (s - 1.0).norm() > 1e-3 {
            return Inputs::default().s(s).z(a);
        }
    }
}

fn eval_hurwitz_shift(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (s, a) = (inp.get_s(), inp.get_z());
    let lhs = hurwitz_zeta(ctx.params, s, a)?;
    let rhs = (-s * ln(a)).exp() + hurwitz_zeta(ctx.params, s, a + 1.0)?;
    Ok(Outcome::new(lhs, rhs))
}

fn draw_gamma(rng: &mut ChaCha8Rng, _: &Limits, _: usize) -> Inputs {
    loop {
        let s = cpx(rng, (-10.0, 10.0), (-10.0, 10.0));
        if s.norm() <= 10.0 && near_integer(s, 1e-3).is_none_or(|n| n > 0) {
            return Inputs::default().s(s);
        }
    }
}

/// Compared after dividing by `|sΓ(s)|`, so the tolerance is relative.
fn eval_gamma(_: &Ctx, inp: &Inputs) -> EvalResult {
    let s = inp.get_s();
    let lhs = complex_gamma(s + 1.0)?;
    let rhs = s * complex_gamma(s)?;
    let k = rhs.norm();
    Ok(Outcome::new(lhs / k, rhs / k))
}

fn draw_polylog(rng: &mut ChaCha8Rng, _: &Limits, _: usize) -> Inputs {
    let alpha = cpx(rng, (-2.0, 4.0), (-1.0, 1.0));
    let rho = uniform(rng, 0.05, 0.9);
    let th = uniform(rng, -3.1, 3.1);
    Inputs::default().s(alpha).z(ComplexValue::from_polar(rho, th))
}

/// `x d/dx Li_α(x)` by a central difference along the ray through `x`.
fn eval_polylog(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (alpha, x) = (inp.get_s(), inp.get_z());
    let h = 1e-5;
    let d = (polylog(ctx.params, alpha, x + h * x)? - polylog(ctx.params, alpha, x - h * x)?) / (2.0 * h);
    let rhs = polylog(ctx.params, alpha - 1.0, x)?;
    Ok(scaled(d, rhs))
}

fn draw_em(rng: &mut ChaCha8Rng, _: &Limits, _: usize) -> Inputs {
    loop {
        let s = cpx(rng, (0.0, 5.0), (-5.0, 5.0));
        let a = cpx(rng, (0.2, 2.0), (-0.5, 0.5));
        if (s - 1.0).norm() > 1e-2 {
            return Inputs::default().s(s).z(a);
        }
    }
}

fn eval_em(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (s, a) = (inp.get_s(), inp.get_z());
    let base = ctx.params;
    let shifted = EvalParams {
        euler_maclaurin_shift: base.euler_maclaurin_shift + 8,
        ..base
    };
    let (x, _) = hurwitz_zeta_with(base, s, a, HurwitzMethod::EulerMaclaurin)?;
    let (y, _) = hurwitz_zeta_with(shifted, s, a, HurwitzMethod::EulerMaclaurin)?;
    Ok(Outcome::new(x, y))
}

fn draw_hermite(rng: &mut ChaCha8Rng, _: &Limits, _: usize) -> Inputs {
    loop {
        let s = cpx(rng, (-0.5, 3.0), (-3.0, 3.0));
        let a = cpx(rng, (0.3, 2.0), (-0.5, 0.5));
        if (s - 1.0).norm() > 1e-2 {
            return Inputs::default().s(s).z(a);
        }
    }
}

fn eval_hermite(ctx: &Ctx, inp: &Inputs) -> EvalResult {
    let (s, a) = (inp.get_s(), inp.get_z());
    let (x, _) = hurwitz_zeta_with(ctx.params, s, a, HurwitzMethod::EulerMaclaurin)?;
    let (y, _) = hurwitz_zeta_with(ctx.params, s, a, HurwitzMethod::Hermite)?;
    Ok(Outcome::new(x, y))
}

pub(super) fn identities() -> Vec<Identity> {
    vec![
        Identity {
            id: "special.hurwitz-shift",
            suite: Suite::Special,
            description: "zeta(s,a) = a^-s + zeta(s,a+1)",
            tol: 1e-10,
            default_samples: 100,
            draw: draw_hurwitz_shift,
            eval: eval_hurwitz_shift,
        },
        Identity {
            id: "special.gamma-recurrence",
            suite: Suite::Special,
            description: "Gamma(s+1) = s Gamma(s), |s|<=10, relative",
            tol: 1e-11,
            default_samples: 100,
            draw: draw_gamma,
            eval: eval_gamma,
        },
        Identity {
            id: "special.polylog-derivative",
            suite: Suite::Special,
            description: "x d/dx Li_a(x) = Li_{a-1}(x) by central differences",
            tol: 1e-6,
            default_samples: 20,
            draw: draw_polylog,
            eval: eval_polylog,
        },
        Identity {
            id: "special.em-shift",
            suite: Suite::Special,
            description: "Euler-Maclaurin Hurwitz zeta with shifts M and M+8 agree",
            tol: 1e-11,
            default_samples: 50,
            draw: draw_em,
            eval: eval_em,
        },
        Identity {
            id: "special.hermite-vs-em",
            suite: Suite::Special,
            description: "Hermite integral and Euler-Maclaurin Hurwitz zeta agree",
            tol: 1e-10,
            default_samples: 30,
            draw: draw_hermite,
            eval: eval_hermite,
        },
    ]
}
