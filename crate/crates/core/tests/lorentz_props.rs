use proptest::prelude::*;
use ruled4_core::linalg::{det3, det4};
use ruled4_core::lorentz::{characterize, cross4, gram, CausalCharacter, Vec4};
use ruled4_core::testkit::{cross_by_pairing, normal_by_minors};

fn vec4() -> impl Strategy<Value = Vec4> {
    prop::array::uniform4(-3.0..3.0f64).prop_map(Vec4)
}

fn rel(a: f64, b: f64, scale: f64) -> f64 {
    (a - b).abs() / scale.max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cross_pairs_to_determinant(w in vec4(), x in vec4(), y in vec4(), z in vec4()) {
        let c = cross4(&x, &y, &z);
        let d = det4(&[w.0, x.0, y.0, z.0]);
        let scale = w.euclid_norm() * x.euclid_norm() * y.euclid_norm() * z.euclid_norm();
        prop_assert!(rel(c.dot(&w), d, scale) <= 1e-10);
    }

    #[test]
    fn cross_is_orthogonal_to_its_arguments(x in vec4(), y in vec4(), z in vec4()) {
        let c = cross4(&x, &y, &z);
        let scale = x.euclid_norm() * y.euclid_norm() * z.euclid_norm();
        for v in [x, y, z] {
            prop_assert!(c.dot(&v).abs() <= 1e-12 * scale.max(1.0) * v.euclid_norm().max(1.0));
        }
    }

    #[test]
    fn cross_is_antisymmetric(x in vec4(), y in vec4(), z in vec4()) {
        let c = cross4(&x, &y, &z);
        let tol = 1e-12 * (x.euclid_norm() * y.euclid_norm() * z.euclid_norm()).max(1.0);
        prop_assert!((cross4(&y, &x, &z) + c).max_abs() <= tol);
        prop_assert!((cross4(&x, &z, &y) + c).max_abs() <= tol);
        prop_assert!((cross4(&z, &y, &x) + c).max_abs() <= tol);
        prop_assert!((cross4(&y, &z, &x) - c).max_abs() <= tol);
    }

    #[test]
    fn cross_is_trilinear(x in vec4(), x2 in vec4(), y in vec4(), z in vec4(), s in -2.0..2.0f64) {
        let lhs = cross4(&(s * x + x2), &y, &z);
        let rhs = s * cross4(&x, &y, &z) + cross4(&x2, &y, &z);
        let tol = 1e-12 * ((x.euclid_norm() + x2.euclid_norm()) * y.euclid_norm() * z.euclid_norm()).max(1.0) * 4.0;
        prop_assert!((lhs - rhs).max_abs() <= tol);
    }

    #[test]
    fn lagrange_identity(x in vec4(), y in vec4(), z in vec4()) {
        let c = cross4(&x, &y, &z);
        let g = det3(&gram(&x, &y, &z));
        let scale = (x.euclid_norm() * y.euclid_norm() * z.euclid_norm()).powi(2);
        prop_assert!(rel(c.quad(), -g, scale) <= 1e-10);
    }

    #[test]
    fn explicit_minors_and_pairing_agree_with_cross(x in vec4(), y in vec4(), z in vec4()) {
        let c = cross4(&x, &y, &z);
        let tol = 1e-12 * (x.euclid_norm() * y.euclid_norm() * z.euclid_norm()).max(1.0);
        prop_assert!((normal_by_minors(&x, &y, &z) - c).max_abs() <= tol);
        prop_assert!((cross_by_pairing(&x, &y, &z) - c).max_abs() <= tol);
    }

    #[test]
    fn character_is_scale_invariant(x in vec4(), lambda in prop_oneof![-5.0..-0.1f64, 0.1..5.0f64]) {
        let a = characterize(&x).character;
        let b = characterize(&(lambda * x)).character;
        if a != CausalCharacter::Zero && a != CausalCharacter::Lightlike {
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn lagrange_identity_on_basis_triple() {
    let e = Vec4::basis;
    let c = cross4(&e(0), &e(1), &e(2));
    assert_eq!(c.quad(), 1.0);
    assert_eq!(-det3(&gram(&e(0), &e(1), &e(2))), 1.0);
}

#[test]
fn lightlike_character_survives_exact_scaling() {
    let x = Vec4::new(1.0, 1.0, 0.0, 0.0);
    for lambda in [2.0, -4.0, 0.5] {
        assert_eq!(characterize(&(lambda * x)).character, CausalCharacter::Lightlike);
    }
}
