use core::f64::consts::PI;

use crate::complex::{c, cospi, exp_pi_i, exp_pi_i_m1, near_integer, sinpi, ComplexValue, I};
use crate::error::{Error, Result};
use crate::special::POLE_TOL;

/// `π cot πz`. Off the real axis this goes through `q = e^{±2πiz}` so that it
/// stays accurate for large `|Im z|`.
pub fn pi_cot_pi(z: ComplexValue) -> Result<ComplexValue> {
    if near_integer(z, POLE_TOL).is_some() {
        return Err(Error::Pole {
            function: "pi_cot_pi",
            at: z,
        });
    }
    let w = 2.0 * z;
    let cot = if z.im > 0.0 {
        // cot = -i (1 + q) / (1 - q), q = e^{2πiz}
        let q = exp_pi_i(w);
        -I * (1.0 + q) / (-exp_pi_i_m1(w))
    } else if z.im < 0.0 {
        let q = exp_pi_i(-w);
        I * (1.0 + q) / (-exp_pi_i_m1(-w))
    } else {
        c(cospi(z.re) / sinpi(z.re), 0.0)
    };
    Ok(PI * cot)
}
