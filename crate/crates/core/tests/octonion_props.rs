use proptest::prelude::*;
use ruled4_core::lorentz::Vec4;
use ruled4_core::octonion::{particular_product, MulTable, Octonion, ParticularOctonion};

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-2.0..2.0f64).prop_map(Octonion)
}

fn close(a: &Octonion, b: &Octonion, scale: f64) -> bool {
    a.0.iter().zip(b.0.iter()).all(|(x, y)| (x - y).abs() <= 1e-10 * scale.max(1.0))
}

fn wrap(i: usize) -> usize {
    let r = i % 7;
    if r == 0 {
        7
    } else {
        r
    }
}

#[test]
fn table_satisfies_the_structural_rules() {
    let t = MulTable::standard();
    for i in 1..=7 {
        let sq = t.get(i, i);
        assert_eq!((sq.sign, sq.index), (-1, 0), "e{i}² = −1");
        for j in 1..=7 {
            if i == j {
                continue;
            }
            let p = t.get(i, j);
            let q = t.get(j, i);
            assert_eq!(p.index, q.index);
            assert_eq!(p.sign, -q.sign, "e{i}e{j} = −e{j}e{i}");
            let k = p.index;
            let cyc = t.get(wrap(i + 1), wrap(j + 1));
            assert_eq!((cyc.sign, cyc.index), (p.sign, wrap(k + 1)), "cycling ({i},{j})");
            let dbl = t.get(wrap(2 * i), wrap(2 * j));
            assert_eq!((dbl.sign, dbl.index), (p.sign, wrap(2 * k)), "doubling ({i},{j})");
        }
    }
}

#[test]
fn non_associativity_witness() {
    let e = Octonion::unit;
    assert_eq!((e(1) * e(2)) * e(3), -e(6));
    assert_eq!(e(1) * (e(2) * e(3)), e(6));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn alternative(x in octonion(), y in octonion()) {
        let scale = x.norm() * x.norm() * y.norm();
        prop_assert!(close(&((x * x) * y), &(x * (x * y)), scale));
        prop_assert!(close(&((y * x) * x), &(y * (x * x)), scale));
    }

    #[test]
    fn norm_is_multiplicative(x in octonion(), y in octonion()) {
        let lhs = (x * y).norm();
        let rhs = x.norm() * y.norm();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.max(1.0));
    }

    #[test]
    fn star_product_is_bilinear(
        a in prop::array::uniform5(-2.0..2.0f64),
        b in prop::array::uniform5(-2.0..2.0f64),
        c in prop::array::uniform5(-2.0..2.0f64),
        s in -2.0..2.0f64,
        k in 0usize..4,
    ) {
        let po = |v: [f64; 5]| ParticularOctonion::new(v[0], Vec4::new(v[1], v[2], v[3], v[4]));
        let (q, q2, p) = (po(a), po(b), po(c));
        let i = Vec4::basis(k);
        let sum = ParticularOctonion::new(s * q.scalar + q2.scalar, s * q.vector + q2.vector);
        let lhs = particular_product(&sum, &p, &i).unwrap();
        let l1 = particular_product(&q, &p, &i).unwrap();
        let l2 = particular_product(&q2, &p, &i).unwrap();
        prop_assert!((lhs.scalar - (s * l1.scalar + l2.scalar)).abs() <= 1e-10 * 50.0);
        prop_assert!((lhs.vector - (s * l1.vector + l2.vector)).max_abs() <= 1e-10 * 50.0);
        let rhs = particular_product(&p, &sum, &i).unwrap();
        let r1 = particular_product(&p, &q, &i).unwrap();
        let r2 = particular_product(&p, &q2, &i).unwrap();
        prop_assert!((rhs.vector - (s * r1.vector + r2.vector)).max_abs() <= 1e-10 * 50.0);
    }
}

#[test]
fn csv_lists_every_product() {
    let csv = MulTable::standard().to_csv();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[1].starts_with("e1,"));
    assert!(lines[1].contains("+4"));
}
