use bizeta_core::bilateral::*;
use bizeta_core::combinatorics::{binomial_f64, factorial_f64, stirling_first_unsigned_f64, stirling_second_f64};
use bizeta_core::complex::{c, powi, real, ComplexValue, I, ZERO};
use bizeta_core::oracle::{brute_h, brute_k, brute_zeta_r, central_sderiv, TruncationPlan};
use bizeta_core::special::{riemann_zeta, unit_polylog};
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
fn xi_examples() {
    assert!((xi(p(), real(1.0), real(0.5)).unwrap() - PI * I).norm() < 1e-15);
    for n in 1..=4 {
        assert_eq!(xi(p(), real(1.0 - n as f64), c(0.3, 0.2)).unwrap(), ZERO);
    }
    let s = c(2.3, 0.4);
    let z = c(0.25, 0.1);
    assert!(near(xi(p(), s, z + 1.0).unwrap(), xi(p(), s, z).unwrap(), 1e-12));
}

#[test]
fn h_vanishes_at_nonpositive_integers() {
    let v = h_r(p(), 3, real(-1.0), c(0.3, 0.2)).unwrap();
    assert!(v.norm() < 1e-12);
    // also through the Hurwitz pair, which does not short-circuit
    for r in 1..=4 {
        for n in 1..=4 {
            let s = real(1.0 - n as f64);
            let z = real(0.37);
            let h = h_via_zeta(p(), r, s, z).unwrap();
            let k = k_via_zeta_split(p(), r, s, z).unwrap();
            assert!(h.norm() < 1e-10, "H r={r} n={n}: {h}");
            assert!(k.norm() < 1e-10, "K r={r} n={n}: {k}");
        }
    }
}

#[test]
fn brute_force_examples() {
    let z = c(0.3, 0.4);
    let b = brute_h(2, real(4.0), z, TruncationPlan::new(100_000)).unwrap();
    assert!((h_r(p(), 2, real(4.0), z).unwrap() - b.value).norm() <= 1e-8);
    let z = c(0.25, 0.3);
    let b = brute_k(2, real(4.0), z, TruncationPlan::new(20_000)).unwrap();
    assert!((k_r(p(), 2, real(4.0), z).unwrap() - b.value).norm() <= b.tail_bound + 1e-9);
    let bh = brute_h(1, real(4.0), real(0.5), TruncationPlan::new(1000)).unwrap();
    let bk = brute_k(1, real(4.0), real(0.5), TruncationPlan::new(1000)).unwrap();
    assert_eq!(bh, bk);
    let x = xi(p(), real(4.0), real(0.5)).unwrap();
    assert!((x - bh.value).norm() <= bh.tail_bound);
}

#[test]
fn brute_multiple_hurwitz() {
    let b = brute_zeta_r(2, real(4.0), real(0.8), 20_000).unwrap();
    let v = multiple_hurwitz(p(), 2, real(4.0), real(0.8)).unwrap();
    assert!((b.value - v).norm() < 1e-8);
    let lo = brute_zeta_r(2, real(4.0), real(0.9), 20_000).unwrap();
    assert!(lo.value.re < b.value.re);
}

#[test]
fn zeta_form_examples() {
    let k = k_r(p(), 2, real(2.5), real(0.7)).unwrap();
    assert!(near(k_via_zeta(p(), 2, real(2.5), real(0.7)).unwrap(), k, 1e-9));
    let z = c(0.4, 0.1);
    let h = h_r(p(), 3, real(3.2), z).unwrap();
    assert!(near(h_via_zeta(p(), 3, real(3.2), z).unwrap(), h, 1e-9));
    let a = k_via_zeta_split(p(), 2, real(0.5), real(0.3)).unwrap();
    let b = k_via_zeta(p(), 2, real(0.5), real(0.3)).unwrap();
    assert!((a - b).norm() < 1e-10);
}

#[test]
fn sderiv_examples() {
    // r=2, n=2 at z=0
    let v = h_sderiv(p(), 2, 2, ZERO).unwrap();
    let e = 2.0 / powi(c(0.0, 2.0 * PI), 2) * riemann_zeta(p(), real(3.0)).unwrap();
    assert!((v - e).norm() < 1e-14);
    let z = c(0.3, 0.4);
    let fd = central_sderiv(|s| h_r(p(), 2, s, z), ZERO, 1e-5, None).unwrap();
    assert!((fd - h_sderiv(p(), 2, 1, z).unwrap()).norm() < 1e-6);
    let fd = central_sderiv(|s| k_r(p(), 2, s, real(0.6)), real(-1.0), 1e-5, None).unwrap();
    assert!((fd - k_sderiv(p(), 2, 2, real(0.6)).unwrap()).norm() < 1e-6);
    for n in 1..=3 {
        let a = k_sderiv(p(), 1, n, z).unwrap();
        let b = xi_sderiv_npos(p(), n, z).unwrap();
        assert_eq!(a, b);
    }
    assert!(k_sderiv(p(), 2, 1, ZERO).is_err());
    let w = unit_polylog(p(), 1, z).unwrap();
    assert!((xi_sderiv_npos(p(), 1, z).unwrap() - w).norm() < 1e-15);
}

#[test]
fn richardson_beats_plain_difference() {
    let z = c(0.3, 0.4);
    let exact = xi_sderiv_npos(p(), 1, z).unwrap();
    let f = |s: ComplexValue| xi(p(), s, z);
    let plain = central_sderiv(f, ZERO, 1e-2, None).unwrap();
    let rich = central_sderiv(f, ZERO, 1e-2, Some(2.0)).unwrap();
    assert!((rich - exact).norm() * 10.0 <= (plain - exact).norm());
}

#[test]
fn integer_closed_forms() {
    for z in [c(0.3, 0.2), c(-0.6, 0.9), real(0.45)] {
        for r in 1..=4 {
            assert!(near(h_at_one(r, z).unwrap(), h_r(p(), r, real(1.0), z).unwrap(), 1e-9));
            assert!(near(k_at_one(r, z).unwrap(), k_r(p(), r, real(1.0), z).unwrap(), 1e-9));
            assert!(near(k_at_one_via_shift(r, z).unwrap(), k_at_one(r, z).unwrap(), 1e-12));
            for m in 2..=5i64 {
                assert!(near(h_at_integer(r, m, z).unwrap(), h_r(p(), r, real(m as f64), z).unwrap(), 1e-9));
                assert!(near(k_at_integer(r, m, z).unwrap(), k_r(p(), r, real(m as f64), z).unwrap(), 1e-9));
            }
            for q in 0..=3 {
                assert!(near(h_at_one_plus(r, q, z).unwrap(), h_at_integer(r, 1 + q as i64, z).unwrap(), 1e-9));
                assert!(near(h_at_r_plus(r, q, z).unwrap(), h_at_integer(r, (r + q) as i64, z).unwrap(), 1e-9));
                assert!(near(k_at_r_plus(r, q, z).unwrap(), k_at_integer(r, (r + q) as i64, z).unwrap(), 1e-9));
            }
        }
    }
}

fn upper() -> impl Strategy<Value = ComplexValue> {
    (-0.9f64..1.9, 0.05f64..1.0).prop_map(|(x, y)| c(x, y))
}

fn s_any() -> impl Strategy<Value = ComplexValue> {
    (-4.0f64..5.0, -2.0f64..2.0).prop_map(|(x, y)| c(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn stirling_relations(r in 1u32..=4, s in s_any(), z in upper()) {
        let h = h_r(p(), r, s, z).unwrap();
        let k = k_r(p(), r, s, z).unwrap();
        prop_assert!(near(h_from_k(p(), r, s, z).unwrap(), h, 1e-8));
        prop_assert!(near(k_from_h(p(), r, s, z).unwrap(), k, 1e-8));
    }

    #[test]
    fn difference_in_z(r in 1u32..=4, l in 1u32..=3, s in s_any(), z in upper()) {
        let lhs = h_r(p(), r, s, z + l as f64).unwrap();
        let mut rhs = ZERO;
        for k in 0..r {
            rhs += binomial_f64(r - 1, k as i64) * (-(l as f64)).powi(k as i32) * h_r(p(), r - k, s, z).unwrap();
        }
        prop_assert!(near(lhs, rhs, 1e-9), "{} vs {}", lhs, rhs);
        if r >= 2 {
            let lhs = k_r(p(), r, s, z + l as f64).unwrap();
            let mut rhs = k_r(p(), r, s, z).unwrap();
            for k in 0..l {
                rhs -= k_r(p(), r - 1, s, z + k as f64).unwrap();
            }
            prop_assert!(near(lhs, rhs, 1e-9), "{} vs {}", lhs, rhs);
        }
    }

    #[test]
    fn difference_in_s(r in 1u32..=3, l in 1u32..=3, s in s_any(), z in upper()) {
        let lhs = h_r(p(), r, s - l as f64, z).unwrap();
        let mut rhs = ZERO;
        for q in 0..=l {
            rhs += binomial_f64(l, q as i64) * powi(z, l - q) * h_r(p(), r + q, s, z).unwrap();
        }
        prop_assert!(near(lhs, rhs, 1e-9), "{} vs {}", lhs, rhs);
        let lhs = k_r(p(), r, s - l as f64, z).unwrap();
        let mut rhs = ZERO;
        for k in 1..=r {
            for q in 0..=l {
                let w = stirling_first_unsigned_f64(r, k) * binomial_f64(l, q as i64) * powi(z, l - q);
                for j in 1..=(k + q) {
                    let sg = if (k + q - j) % 2 == 0 { 1.0 } else { -1.0 };
                    rhs += w * sg * factorial_f64(j - 1) * stirling_second_f64(k + q, j) * k_r(p(), j, s, z).unwrap();
                }
            }
        }
        rhs /= factorial_f64(r - 1);
        prop_assert!(near(lhs, rhs, 1e-9), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn multiplication(r in 1u32..=3, big_n in 2u32..=3, s in s_any(), z in upper()) {
        let nf = big_n as f64;
        let scale = (-s * nf.ln()).exp();
        let lhs = h_r(p(), r, s, nf * z).unwrap();
        let mut rhs = ZERO;
        for k in 0..big_n {
            for l in 0..r {
                let w = binomial_f64(r - 1, l as i64) * (k as f64).powi(l as i32) * nf.powi((r - l - 1) as i32);
                if w != 0.0 {
                    rhs += w * h_r(p(), r - l, s, z + k as f64 / nf).unwrap();
                }
            }
        }
        prop_assert!(near(lhs, scale * rhs, 1e-8), "{} vs {}", lhs, scale * rhs);
        if big_n == 2 {
            let lhs = k_r(p(), r, s, 2.0 * z).unwrap();
            let mut rhs = ZERO;
            for t in 0..=r {
                rhs += binomial_f64(r, t as i64) * k_r(p(), r, s, z + t as f64 / 2.0).unwrap();
            }
            prop_assert!(near(lhs, scale * rhs, 1e-8), "{} vs {}", lhs, scale * rhs);
        }
    }

    #[test]
    fn derivative_in_z(r in 1u32..=3, s in s_any(), z in upper()) {
        let h = 1e-5;
        let d = (h_r(p(), r, s, z + h).unwrap() - h_r(p(), r, s, z - h).unwrap()) / (2.0 * h);
        let rhs = -s * h_r(p(), r, s + 1.0, z).unwrap();
        prop_assert!(near(d, rhs, 1e-6 * rhs.norm().max(1.0)), "{} vs {}", d, rhs);
        let d = (k_r(p(), r, s, z + h).unwrap() - k_r(p(), r, s, z - h).unwrap()) / (2.0 * h);
        let rhs = -s * k_r(p(), r, s + 1.0, z).unwrap();
        prop_assert!(near(d, rhs, 1e-6 * rhs.norm().max(1.0)), "{} vs {}", d, rhs);
    }

    #[test]
    fn brute_force_equivalence(r in 1u32..=3, extra in 1.05f64..3.0, si in -1.0f64..1.0, z in upper()) {
        let s = c(r as f64 + extra + 1.0, si);
        let plan = TruncationPlan::new(4000);
        let b = brute_h(r, s, z, plan).unwrap();
        prop_assert!((h_r(p(), r, s, z).unwrap() - b.value).norm() <= b.tail_bound + 1e-7);
        let b = brute_k(r, s, z, plan).unwrap();
        prop_assert!((k_r(p(), r, s, z).unwrap() - b.value).norm() <= b.tail_bound + 1e-7);
    }

    #[test]
    fn zeta_forms_on_their_strips(r in 1u32..=4, s in s_any(), x in 0.05f64..0.95, y in 0.0f64..1.0) {
        let z = c(x, y);
        let k = k_r(p(), r, s, z).unwrap();
        prop_assert!(near(k_via_zeta(p(), r, s, z).unwrap(), k, 1e-9));
        prop_assert!(near(k_via_zeta_split(p(), r, s, z).unwrap(), k, 1e-9));
        let h = h_r(p(), r, s, z).unwrap();
        prop_assert!(near(h_via_zeta(p(), r, s, z).unwrap(), h, 1e-9));
        let w = c(-x, y);
        let h = h_r(p(), r, s, w).unwrap();
        prop_assert!(near(h_via_zeta(p(), r, s, w).unwrap(), h, 1e-9));
    }

    #[test]
    fn sderiv_ladder(r in 1u32..=3, n in 2u32..=3, z in upper()) {
        let h = 1e-5;
        let d = (h_sderiv(p(), r, n, z + h).unwrap() - h_sderiv(p(), r, n, z - h).unwrap()) / (2.0 * h);
        let rhs = (n - 1) as f64 * h_sderiv(p(), r, n - 1, z).unwrap();
        prop_assert!(near(d, rhs, 1e-6 * rhs.norm().max(1.0)), "{} vs {}", d, rhs);
        let d = (k_sderiv(p(), r, n, z + h).unwrap() - k_sderiv(p(), r, n, z - h).unwrap()) / (2.0 * h);
        let rhs = (n - 1) as f64 * k_sderiv(p(), r, n - 1, z).unwrap();
        prop_assert!(near(d, rhs, 1e-6 * rhs.norm().max(1.0)), "{} vs {}", d, rhs);
    }
}
