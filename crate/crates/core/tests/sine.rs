use bizeta_core::complex::{c, real, ComplexValue, ZERO};
use bizeta_core::sine::*;
use bizeta_core::EvalParams;
use core::f64::consts::{LN_2, PI};
use proptest::prelude::*;

fn p() -> EvalParams {
    EvalParams::default()
}

fn near(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
    (a - b).norm() <= tol || (a.norm().max(b.norm()) > 1e3 && (a - b).norm() <= 1e-8 * b.norm())
}

fn fd(f: impl Fn(ComplexValue) -> ComplexValue, z: ComplexValue, h: f64) -> ComplexValue {
    (f(z + h) - f(z - h)) / (2.0 * h)
}

#[test]
fn special_values_at_zero() {
    let v = gen_primitive_sine(p(), 2, 1, ZERO).unwrap();
    assert!((v - c(0.0, PI / 12.0).exp()).norm() < 1e-14);
    for r in 1..=4 {
        for n in 1..=3 {
            if n + r >= 3 {
                let a = log_gen_primitive_sine(p(), r, n, ZERO).unwrap();
                let b = log_gen_primitive_sine_at_zero(p(), r, n).unwrap();
                assert!(near(a, b, 1e-12), "{r} {n}");
            }
            let a = log_gen_normalized_sine(p(), r, n + 1, ZERO).unwrap();
            let b = log_gen_normalized_sine_at_zero(p(), r, n).unwrap();
            assert!(near(a, b, 1e-12), "{r} {n}");
        }
    }
}

#[test]
fn special_values_at_half() {
    // n = 1, k = 0 carries the -log 2 limit
    let a = log_gen_primitive_sine(p(), 1, 1, real(0.5)).unwrap();
    assert!((a - real(LN_2)).norm() < 1e-14);
    for r in 1..=4 {
        for n in 1..=3 {
            let a = log_gen_primitive_sine(p(), r, n, real(0.5)).unwrap();
            let b = log_gen_primitive_sine_at_half(p(), r, n).unwrap();
            assert!(near(a, b, 1e-12), "{r} {n}");
            let a = log_gen_normalized_sine(p(), r, n, real(0.5)).unwrap();
            let b = log_gen_normalized_sine_at_half(p(), r, n).unwrap();
            assert!(near(a, b, 1e-12), "{r} {n}");
        }
    }
}

#[test]
fn r_one_degeneracy() {
    for n in 1..=3 {
        let z = c(0.3, 0.2);
        assert_eq!(gen_normalized_sine(p(), 1, n, z).unwrap(), gen_primitive_sine(p(), 1, n, z).unwrap());
    }
}

#[test]
fn stirling_bridge_example() {
    let z = c(0.3, 0.3);
    let a = gen_primitive_sine(p(), 3, 1, z).unwrap();
    let b = log_primitive_from_normalized(p(), 3, 1, z).unwrap().exp();
    assert!((a - b).norm() < 1e-9);
}

#[test]
fn classical_examples() {
    assert_eq!(classical_primitive_sine(p(), 3, ZERO).unwrap(), c(1.0, 0.0));
    let a = gen_primitive_sine(p(), 2, 1, real(0.4)).unwrap();
    let b = log_primitive_from_classical(p(), 2, real(0.4)).unwrap().exp();
    assert!((a - b).norm() < 1e-8);
    assert!(classical_primitive_sine(p(), 2, real(1.5)).is_err());
    let prod = classical_primitive_sine_product(2, real(0.3), 2000).unwrap();
    assert!((prod - classical_primitive_sine(p(), 2, real(0.3)).unwrap()).norm() < 1e-4);
}

#[test]
fn kurokawa_examples() {
    let z = real(0.7);
    let a = gen_normalized_sine(p(), 2, 1, z).unwrap();
    let b = log_normalized_from_kurokawa(p(), 2, 1, z).unwrap().exp();
    assert!((a - b).norm() < 1e-8);
    assert!(kurokawa_normalized_sine(p(), 3, 1, c(1.1, 0.4)).is_ok());
    assert!(kurokawa_normalized_sine(p(), 2, 1, real(2.5)).is_err());
    let v = zeta_r_at_nonpositive(2, 1, real(0.6)).unwrap();
    let w = bizeta_core::bilateral::multiple_hurwitz(p(), 2, ZERO, real(0.6)).unwrap();
    assert!((v - w).norm() < 1e-9);
}

#[test]
fn raabe_example() {
    let z = c(0.2, 0.5);
    let a = primitive_window_integral(p(), 2, 1, z, 1).unwrap();
    let b = primitive_raabe(p(), 2, 1, z, 1).unwrap();
    assert!((a - b).norm() < 1e-7, "{a} {b}");
}

fn upper() -> impl Strategy<Value = ComplexValue> {
    (-0.9f64..0.9, 0.1f64..1.0).prop_map(|(x, y)| c(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn stirling_bridges(r in 1u32..=4, n in 1u32..=3, z in upper()) {
        let a = log_gen_primitive_sine(p(), r, n, z).unwrap();
        prop_assert!(near(log_primitive_from_normalized(p(), r, n, z).unwrap(), a, 1e-9));
        let b = log_gen_normalized_sine(p(), r, n, z).unwrap();
        prop_assert!(near(log_normalized_from_primitive(p(), r, n, z).unwrap(), b, 1e-9));
    }

    #[test]
    fn difference_equations(r in 2u32..=4, n in 1u32..=3, l in 1u32..=2, z in upper()) {
        let a = log_gen_primitive_sine(p(), r, n, z + l as f64).unwrap();
        prop_assert!(near(log_primitive_shift(p(), r, n, z, l).unwrap(), a, 1e-8));
        let b = log_gen_normalized_sine(p(), r, n, z + l as f64).unwrap();
        prop_assert!(near(log_normalized_shift(p(), r, n, z, l).unwrap(), b, 1e-8));
    }

    #[test]
    fn s_shift(r in 1u32..=3, n in 1u32..=3, z in upper()) {
        let a = log_gen_primitive_sine(p(), r, n, z).unwrap();
        prop_assert!(near(log_primitive_from_first_order(p(), r, n, z).unwrap(), a, 1e-8));
        let b = log_gen_normalized_sine(p(), r, n, z).unwrap();
        prop_assert!(near(log_normalized_from_first_order(p(), r, n, z).unwrap(), b, 1e-8));
    }

    #[test]
    fn multiplication(r in 1u32..=3, n in 1u32..=2, z in upper()) {
        let a = log_gen_primitive_sine(p(), r, n, 2.0 * z).unwrap();
        prop_assert!(near(log_primitive_scaled(p(), r, n, z, 2).unwrap(), a, 1e-7));
        let b = log_gen_normalized_sine(p(), r, n, 2.0 * z).unwrap();
        prop_assert!(near(log_normalized_scaled(p(), r, n, z, 2).unwrap(), b, 1e-7));
    }

    #[test]
    fn log_derivatives(r in 1u32..=4, n in 1u32..=3, z in upper()) {
        let d = fd(|w| log_gen_primitive_sine(p(), r, 1, w).unwrap(), z, 1e-5);
        prop_assert!(near(d, log_deriv_primitive_first(r, z).unwrap(), 1e-6 * d.norm().max(1.0)));
        let d = fd(|w| log_gen_normalized_sine(p(), r, 1, w).unwrap(), z, 1e-5);
        prop_assert!(near(d, log_deriv_normalized_first(r, z).unwrap(), 1e-6 * d.norm().max(1.0)));
        let d = fd(|w| log_gen_primitive_sine(p(), r, n + 1, w).unwrap(), z, 1e-5);
        let e = n as f64 * log_gen_primitive_sine(p(), r, n, z).unwrap();
        prop_assert!(near(d, e, 1e-6 * e.norm().max(1.0)));
        let d = fd(|w| log_gen_normalized_sine(p(), r, n + 1, w).unwrap(), z, 1e-5);
        let e = n as f64 * log_gen_normalized_sine(p(), r, n, z).unwrap();
        prop_assert!(near(d, e, 1e-6 * e.norm().max(1.0)));
    }

    #[test]
    fn classical_bridge(r in 2u32..=4, z in upper()) {
        let a = log_gen_primitive_sine(p(), r, 1, z).unwrap().exp();
        let b = log_primitive_from_classical(p(), r, z).unwrap().exp();
        prop_assert!(near(a, b, 1e-8), "{} vs {}", a, b);
    }

    #[test]
    fn kurokawa_bridge(r in 1u32..=3, n in 1u32..=3, t in 0.05f64..0.95, y in 0.0f64..0.8) {
        let z = c(t * r as f64, y);
        let a = log_gen_normalized_sine(p(), r, n, z).unwrap().exp();
        let b = log_normalized_from_kurokawa(p(), r, n, z).unwrap().exp();
        prop_assert!(near(a, b, 1e-8), "{} vs {}", a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn ladder_integrals(r in 2u32..=3, n in 1u32..=2, z in upper()) {
        let a = log_gen_primitive_sine(p(), r, n + 1, z).unwrap();
        prop_assert!(near(log_primitive_ladder(p(), r, n, z).unwrap(), a, 1e-7));
        // n >= 2 keeps the integrand finite at t = 0
        let b = log_gen_normalized_sine(p(), r, n + 2, z).unwrap();
        prop_assert!(near(log_normalized_ladder(p(), r, n + 1, z).unwrap(), b, 1e-7));
    }

    #[test]
    fn raabe(r in 2u32..=3, n in 1u32..=2, z in upper()) {
        let a = primitive_window_integral(p(), r, n, z, 1).unwrap();
        prop_assert!(near(primitive_raabe(p(), r, n, z, 1).unwrap(), a, 1e-7), "{}", a);
        let b = normalized_window_integral(p(), r, n, z, 1).unwrap();
        prop_assert!(near(normalized_raabe(p(), r, n, z, 1).unwrap(), b, 1e-7), "{}", b);
    }
}
