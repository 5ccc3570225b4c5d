use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ruled4_core::construct::{
    construct_from_dual_curves, construct_from_octonions, probe_i, star_product_point,
};
use ruled4_core::dsl::{linspace, Curve, CurveSpec};
use ruled4_core::dual::DualNorm;
use ruled4_core::lorentz::{cross4, Vec4};
use ruled4_core::surface::curvature_report;
use ruled4_core::testkit::{orthogonal_to, random_vec4, UNIT_BOX};
use ruled4_core::GeometryError;

fn spec(c: [&str; 4]) -> CurveSpec {
    CurveSpec::parse(&c).unwrap()
}

fn unit_i() -> impl Strategy<Value = Vec4> {
    (0usize..4, any::<bool>()).prop_map(|(k, neg)| if neg { -Vec4::basis(k) } else { Vec4::basis(k) })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn star_product_path_equals_direct_path(seed in any::<u64>(), i in unit_i(), s in -2.0..2.0f64, r in -2.0..2.0f64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut u = random_vec4(&mut rng, 2.0);
        while u.quad().abs() < 0.1 {
            u = random_vec4(&mut rng, 2.0);
        }
        let v = orthogonal_to(&mut rng, &u);
        let w = orthogonal_to(&mut rng, &u);
        let star = star_product_point(&u, &v, &w, &i, s, r).unwrap();
        let direct = cross4(&u, &v, &i) + cross4(&u, &w, &i) + s * w + r * v;
        let scale = u.euclid_norm() * (v.euclid_norm() + w.euclid_norm()) + 1.0;
        prop_assert!(star.scalar.abs() <= 1e-10 * scale);
        prop_assert!((star.vector - direct).max_abs() <= 1e-10 * scale);
    }
}

fn ex3() -> (CurveSpec, CurveSpec, CurveSpec) {
    (
        spec(["-cos(t)*cos(2*t)", "cos(t)*sin(2*t)", "0", "0"]),
        spec(["cos(t)*sin(2*t)", "sin(t)*sin(2*t)", "sin(t)", "-cos(t)"]),
        spec(["sin(t)*sin(2*t)", "sin(t)*cos(2*t)", "cos(t)", "sin(t)"]),
    )
}

#[test]
fn ex3_ruling_part_against_printed_components() {
    let (u, v, w) = ex3();
    let (h, report) =
        construct_from_octonions(&u, &v, &w, Vec4::basis(3), UNIT_BOX, DualNorm::Lorentz).unwrap();
    // printed φ minus printed α: coefficients of s and r per component
    let s_coef = spec(["sin(t)*sin(2*t)", "sin(t)*cos(2*t)", "cos(t)", "sin(t)"]);
    let r_coef = spec(["cos(t)*sin(2*t)", "sin(t)*sin(2*t)", "sin(t)", "cos(t)"]);
    let mut fourth_mismatch = 0.0_f64;
    for t in linspace(-3.0, 3.0, 13) {
        for s in linspace(-1.0, 1.0, 5) {
            for r in linspace(-1.0, 1.0, 5) {
                let ruling = h.eval_point(t, s, r).unwrap() - h.alpha.jet(t).unwrap().p;
                let printed = s * s_coef.value(t).unwrap() + r * r_coef.value(t).unwrap();
                for k in 0..3 {
                    assert!((ruling[k] - printed[k]).abs() <= 1e-15, "component {k}");
                }
                fourth_mismatch = fourth_mismatch.max((ruling[3] - printed[3]).abs());
            }
        }
    }
    // v₄ = −cos t against the printed +r·cos t
    assert!(fourth_mismatch > 1.0);
    assert!(h.eval_point(0.0, 1.0, 1.0).unwrap() - h.alpha.jet(0.0).unwrap().p == Vec4::new(0.0, 0.0, 1.0, -1.0));
    // neither Lorentz-unit nor Lorentz-orthogonal to u
    assert!(report.unit_violation.iter().all(|&x| x > 1e-3));
    assert!(!h.warnings.is_empty());
}

#[test]
fn ex3_euclidean_hypotheses() {
    let (u, v, w) = ex3();
    let (_, report) =
        construct_from_octonions(&u, &v, &w, Vec4::basis(3), UNIT_BOX, DualNorm::Euclid).unwrap();
    // w·u = 0 identically; v·u = −cos t·sin 2t·cos 3t does not vanish
    assert!(report.orthogonality_violation[0] < 1e-12);
    assert!(report.orthogonality_violation[1] > 0.1);
    assert!(report.unit_violation.iter().all(|&x| x > 1e-3));
}

#[test]
fn ex3_printed_base_curve_matches_no_basis_i() {
    let (u, v, w) = ex3();
    let printed = spec(["0", "0", "sin(2*t)*(1/2*sin(2*t) - cos(t)^2)", "sin(2*t)*(1/2*sin(2*t) + cos(t)^2)"]);
    let probe = probe_i(&[(u.clone(), v), (u, w)], &printed, &linspace(-3.0, 3.0, 61)).unwrap();
    assert_eq!(probe.candidates.len(), 8);
    assert!(probe.matched.is_none());
    assert!(probe.least_squares_residual > 0.1);
}

#[test]
fn constructions_are_flat() {
    let u = spec(["0", "0", "cos(t)", "sin(t)"]);
    let v = spec(["0", "cos(t)", "0", "0"]);
    let w = spec(["1", "0", "0", "sin(t)"]);
    let (h, _) = construct_from_octonions(&u, &v, &w, Vec4::basis(1), UNIT_BOX, DualNorm::Lorentz).unwrap();
    let a = spec(["0", "cos(t)", "sin(t)", "0"]);
    let a_star = spec(["t", "-sin(t)", "cos(t)", "1"]);
    let b = spec(["sinh(t)", "0", "0", "cosh(t)"]);
    let b_star = spec(["1", "t", "0", "0"]);
    let (g, _) = construct_from_dual_curves((&a, &a_star), (&b, &b_star), Vec4::basis(3), UNIT_BOX, DualNorm::Lorentz).unwrap();
    let mut checked = 0;
    for surf in [&h, &g] {
        for t in linspace(-0.9, 0.9, 4) {
            for s in linspace(-0.9, 0.9, 3) {
                for r in linspace(-0.9, 0.9, 3) {
                    match curvature_report(surf, t, s, r) {
                        Ok(rep) => {
                            assert!(rep.k.abs() <= 1e-9);
                            checked += 1;
                        }
                        Err(GeometryError::DegenerateNormal { .. } | GeometryError::SingularMetric { .. }) => {}
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }
    assert!(checked > 36);
}

#[test]
fn non_unit_i_is_rejected() {
    let (u, v, w) = ex3();
    let err = construct_from_octonions(&u, &v, &w, Vec4::new(0.0, 0.0, 0.0, 2.0), UNIT_BOX, DualNorm::Lorentz);
    assert!(matches!(err, Err(GeometryError::NonUnitI(_))));
}
