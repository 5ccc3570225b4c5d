use proptest::prelude::*;
use ruled4_core::dsl::{parse_expr, validate_director, CurveSpec, Exponent, Expr, Func, NamedConst, ParseError};
use ruled4_core::lorentz::ModelSpace;

fn func() -> impl Strategy<Value = Func> {
    prop_oneof![
        Just(Func::Sin),
        Just(Func::Cos),
        Just(Func::Sinh),
        Just(Func::Cosh),
        Just(Func::Exp),
        Just(Func::Sqrt),
        Just(Func::Log),
    ]
}

fn exponent() -> impl Strategy<Value = Exponent> {
    prop_oneof![
        (-4i32..6).prop_map(Exponent::Int),
        (-5i32..6, 2i32..5).prop_map(|(p, q)| Exponent::Ratio(p, q)),
    ]
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0.0..1e3f64).prop_map(Expr::Const),
        (0.0..1e-3f64).prop_map(Expr::Const),
        Just(Expr::Named(NamedConst::Pi)),
        Just(Expr::Named(NamedConst::E)),
        Just(Expr::Var),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        let b = |e: Expr| Box::new(e);
        prop_oneof![
            inner.clone().prop_map(move |a| Expr::Neg(b(a))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Add(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Sub(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Mul(b(x), b(y))),
            (inner.clone(), inner.clone()).prop_map(move |(x, y)| Expr::Div(b(x), b(y))),
            (inner.clone(), exponent()).prop_map(move |(x, n)| Expr::Pow(b(x), n)),
            (func(), inner).prop_map(move |(f, x)| Expr::Call(f, b(x))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn printed_tree_reparses_identically(e in expr()) {
        let text = e.to_string();
        let back = parse_expr(&text).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(parse_expr(&back.to_string()).unwrap(), back);
    }
}

#[test]
fn printing_normalises_user_text() {
    for text in [
        "3*t+7",
        "-2/sqrt(3)",
        "t^4/4 + sqrt(2)",
        "sin(2*t)*(1/2*sin(2*t) - cos(t)^2)",
        "-t^2",
        "2^-1",
        "t^(1/2) + 1.5e-3*exp(-t)",
        "pi*e - 2*pi",
    ] {
        let first = parse_expr(text).unwrap();
        let again = parse_expr(&first.to_string()).unwrap();
        assert_eq!(first, again, "{text}");
    }
}

#[test]
fn errors_carry_locations() {
    match parse_expr("sin(") {
        Err(ParseError::Syntax { offset, .. }) => assert_eq!(offset, 4),
        other => panic!("unexpected {other:?}"),
    }
    match parse_expr("2*tan(t)") {
        Err(ParseError::UnknownIdentifier { name, offset }) => {
            assert_eq!(name, "tan");
            assert_eq!(offset, 2);
        }
        other => panic!("unexpected {other:?}"),
    }
    assert!(parse_expr("1 +").is_err());
    assert!(parse_expr("(t").is_err());
}

#[test]
fn director_validation_examples() {
    let grid: Vec<f64> = (0..11).map(|k| -1.0 + 0.2 * k as f64).collect();
    let beta = CurveSpec::parse(&["1/sqrt(7)", "0", "2*sqrt(2)/sqrt(7)", "0"]).unwrap();
    assert!(validate_director(&beta, ModelSpace::DeSitter3, &grid).pass);

    let gamma = CurveSpec::parse(&["0", "1/sqrt(7)", "0", "sqrt(6)/sqrt(7)"]).unwrap();
    let r = validate_director(&gamma, ModelSpace::Hyperbolic3, &grid);
    assert!(!r.pass);
    assert!((r.worst_quad - 1.0).abs() < 1e-12);

    let light = CurveSpec::parse(&["1", "1", "0", "0"]).unwrap();
    let r = validate_director(&light, ModelSpace::DeSitter3, &grid);
    assert!(!r.pass);
    assert!((r.max_violation - 1.0).abs() < 1e-15);
}
