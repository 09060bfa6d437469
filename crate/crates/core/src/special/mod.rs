//! Gamma, Hurwitz and Riemann zeta, polylogarithm and `π cot πz`.

mod gamma;
mod hurwitz;
mod polylog;
mod trig;
mod zeta;

pub use gamma::{complex_gamma, ln_gamma, recip_gamma};
pub use hurwitz::{
    hurwitz_zeta, hurwitz_zeta_s_deriv, hurwitz_zeta_with, HurwitzMethod, HERMITE_BELOW,
};
pub use polylog::{polylog, polylog_exp, polylog_series, unit_polylog};
pub use trig::pi_cot_pi;
pub use zeta::riemann_zeta;

/// Distance below which an argument counts as sitting on a pole.
pub const POLE_TOL: f64 = 1e-8;
