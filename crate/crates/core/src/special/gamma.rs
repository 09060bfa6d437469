use core::f64::consts::PI;

use crate::complex::{c, exact_integer, near_integer, sin_pi, ComplexValue, ZERO};
use crate::error::{Error, Result};
use crate::special::POLE_TOL;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Lanczos `ln Γ(s)` for `Re s >= 1/2`, principal branch of each factor.
fn lanczos_ln(s: ComplexValue) -> ComplexValue {
    let z = s - 1.0;
    let mut a = c(LANCZOS[0], 0.0);
    for (i, p) in LANCZOS.iter().enumerate().skip(1) {
        a += *p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * crate::complex::ln(t) - t + crate::complex::ln(a) + LN_SQRT_2PI
}

/// `ln Γ(s)` for `Re s >= 1/2`; the imaginary part is continuous in `s`
/// there but is not reduced modulo `2π`.
pub fn ln_gamma(s: ComplexValue) -> Result<ComplexValue> {
    if s.re < 0.5 {
        return Err(Error::Domain {
            function: "ln_gamma",
            requirement: "Re s >= 1/2",
        });
    }
    Ok(lanczos_ln(s))
}

pub fn complex_gamma(s: ComplexValue) -> Result<ComplexValue> {
    if s.re <= 0.5 {
        if let Some(n) = near_integer(s, POLE_TOL) {
            if n <= 0 {
                return Err(Error::Pole {
                    function: "gamma",
                    at: s,
                });
            }
        }
    }
    if s.re >= 0.5 {
        Ok(lanczos_ln(s).exp())
    } else {
        Ok(PI / (sin_pi(s) * lanczos_ln(1.0 - s).exp()))
    }
}

/// `1/Γ(s)`, entire, exactly zero at non-positive integers.
pub fn recip_gamma(s: ComplexValue) -> ComplexValue {
    if let Some(n) = exact_integer(s) {
        if n <= 0 {
            return ZERO;
        }
    }
    if s.re >= 0.5 {
        (-lanczos_ln(s)).exp()
    } else {
        sin_pi(s) * lanczos_ln(1.0 - s).exp() / PI
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::real;

    #[test]
    fn integers_and_half() {
        let g = complex_gamma(real(5.0)).unwrap();
        assert!((g.re - 24.0).abs() < 24.0 * 1e-14);
        let h = complex_gamma(real(0.5)).unwrap();
        assert!((h.re - PI.sqrt()).abs() < 1e-14);
        let m = complex_gamma(real(-0.5)).unwrap();
        assert!((m.re + 2.0 * PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn complex_reference() {
        // Γ(1 + i) = 0.49801566811835604 - 0.15494982830181069 i
        let g = complex_gamma(c(1.0, 1.0)).unwrap();
        assert!((g - c(0.498_015_668_118_356_04, -0.154_949_828_301_810_69)).norm() < 1e-14);
        // Γ(-2.5 + 0.5i) = -0.33387520352243234 - 0.20645730796360841 i
        let g = complex_gamma(c(-2.5, 0.5)).unwrap();
        assert!((g - c(-0.333_875_203_522_432_34, -0.206_457_307_963_608_41)).norm() < 1e-14);
    }

    #[test]
    fn poles() {
        assert!(complex_gamma(real(-3.0)).is_err());
        assert!(complex_gamma(c(-3.0, 1e-9)).is_err());
        assert_eq!(recip_gamma(real(-3.0)), ZERO);
        assert_eq!(recip_gamma(real(0.0)), ZERO);
    }
}
