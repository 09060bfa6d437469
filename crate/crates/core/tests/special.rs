use bizeta_core::complex::{c, ln, real, ComplexValue, I, ZERO};
use bizeta_core::special::*;
use bizeta_core::EvalParams;
use core::f64::consts::PI;
use proptest::prelude::*;

fn p() -> EvalParams {
    EvalParams::default()
}

fn near(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
    (a - b).norm() <= tol || (a.norm().max(b.norm()) > 1e3 && (a - b).norm() <= 1e-8 * b.norm())
}

#[test]
fn riemann_values() {
    assert!((riemann_zeta(p(), real(2.0)).unwrap() - real(PI * PI / 6.0)).norm() < 1e-15);
    assert!((riemann_zeta(p(), real(0.0)).unwrap() - real(-0.5)).norm() < 1e-15);
    assert!((riemann_zeta(p(), real(4.0)).unwrap() - real(PI.powi(4) / 90.0)).norm() < 1e-14);
    assert!(riemann_zeta(p(), real(1.0)).is_err());
}

#[test]
fn cot_values() {
    assert!(pi_cot_pi(real(0.5)).unwrap().norm() < 1e-15);
    assert!((pi_cot_pi(real(0.25)).unwrap() - real(PI)).norm() < 1e-14);
    assert!((pi_cot_pi(c(0.3, 8.0)).unwrap() + PI * I).norm() < 1e-20);
    assert!(pi_cot_pi(real(3.0)).is_err());
}

#[test]
fn gamma_poles_and_values() {
    assert!(complex_gamma(real(-2.0)).is_err());
    assert_eq!(recip_gamma(real(-3.0)), ZERO);
    assert!((complex_gamma(real(5.0)).unwrap() - real(24.0)).norm() < 1e-12);
    assert!((complex_gamma(real(0.5)).unwrap() - real(PI.sqrt())).norm() < 1e-14);
}

#[test]
fn polylog_closed_forms() {
    // Li_1(x) = -ln(1-x), Li_0(x) = x/(1-x)
    for x in [c(0.3, 0.4), c(-0.9, 0.1), c(0.6, -0.7)] {
        let a = polylog(p(), real(1.0), x).unwrap();
        assert!((a + ln(1.0 - x)).norm() < 1e-14, "{x}");
        let b = polylog(p(), real(0.0), x).unwrap();
        assert!((b - x / (1.0 - x)).norm() < 1e-13, "{x}");
    }
    let li2 = polylog(p(), real(2.0), real(1.0)).unwrap();
    assert!((li2 - real(PI * PI / 6.0)).norm() < 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn hurwitz_shift(sr in -4.0f64..4.0, si in -3.0f64..3.0, ar in 0.1f64..3.0, ai in -1.0f64..1.0) {
        let s = c(sr, si);
        prop_assume!((s - 1.0).norm() > 1e-3);
        let a = c(ar, ai);
        let lhs = hurwitz_zeta(p(), s, a).unwrap();
        let rhs = (-s * ln(a)).exp() + hurwitz_zeta(p(), s, a + 1.0).unwrap();
        prop_assert!(near(lhs, rhs, 1e-10), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn gamma_recurrence(sr in -10.0f64..10.0, si in -10.0f64..10.0) {
        let s = c(sr, si);
        prop_assume!(s.norm() <= 10.0);
        prop_assume!(bizeta_core::complex::near_integer(s, 1e-3).map_or(true, |n| n > 0));
        let lhs = complex_gamma(s + 1.0).unwrap();
        let rhs = s * complex_gamma(s).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * rhs.norm(), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn polylog_derivative(alpha_r in -2.0f64..4.0, alpha_i in -1.0f64..1.0, rho in 0.05f64..0.9, th in -3.1f64..3.1) {
        let alpha = c(alpha_r, alpha_i);
        let x = c(rho * th.cos(), rho * th.sin());
        let h = 1e-5;
        let f = |w: ComplexValue| polylog(p(), alpha, w).unwrap();
        let d = (f(x + h * x) - f(x - h * x)) / (2.0 * h);
        let rhs = polylog(p(), alpha - 1.0, x).unwrap();
        prop_assert!((d - rhs).norm() <= 1e-6 * rhs.norm().max(1.0), "{} vs {}", d, rhs);
    }

    #[test]
    fn euler_maclaurin_shift_independence(sr in 0.0f64..5.0, si in -5.0f64..5.0, ar in 0.2f64..2.0, ai in -0.5f64..0.5) {
        let s = c(sr, si);
        prop_assume!((s - 1.0).norm() > 1e-2);
        let a = c(ar, ai);
        let base = p();
        let shifted = EvalParams { euler_maclaurin_shift: base.euler_maclaurin_shift + 8, ..base };
        let (x, dx) = hurwitz_zeta_with(base, s, a, HurwitzMethod::EulerMaclaurin).unwrap();
        let (y, dy) = hurwitz_zeta_with(shifted, s, a, HurwitzMethod::EulerMaclaurin).unwrap();
        prop_assert!(near(x, y, 1e-11), "{} vs {}", x, y);
        prop_assert!(near(dx, dy, 1e-10), "{} vs {}", dx, dy);
    }

    #[test]
    fn hermite_matches_euler_maclaurin(sr in -0.5f64..3.0, si in -3.0f64..3.0, ar in 0.3f64..2.0, ai in -0.5f64..0.5) {
        let s = c(sr, si);
        prop_assume!((s - 1.0).norm() > 1e-2);
        let a = c(ar, ai);
        let (x, _) = hurwitz_zeta_with(p(), s, a, HurwitzMethod::EulerMaclaurin).unwrap();
        let (y, _) = hurwitz_zeta_with(p(), s, a, HurwitzMethod::Hermite).unwrap();
        prop_assert!(near(x, y, 1e-10), "{} vs {}", x, y);
    }
}
