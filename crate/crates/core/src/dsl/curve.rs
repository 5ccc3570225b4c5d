use serde::Serialize;
use thiserror::Error;

use super::ast::Expr;
use super::parser::{parse_expr, ParseError};
use crate::dual::Dual;
use crate::error::DomainError;
use crate::jet::Jet2;
use crate::lorentz::{ModelSpace, Vec4};
use crate::tolerance;

/// Position with first and second derivative of a curve in R⁴₁.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CurveJet {
    pub p: Vec4,
    pub d1: Vec4,
    pub d2: Vec4,
}

impl CurveJet {
    pub fn from_components(c: [Jet2; 4]) -> Self {
        CurveJet {
            p: Vec4(c.map(|j| j.f)),
            d1: Vec4(c.map(|j| j.d1)),
            d2: Vec4(c.map(|j| j.d2)),
        }
    }
}

/// Anything that yields a curve jet at a parameter value.
pub trait Curve {
    fn jet(&self, t: f64) -> Result<CurveJet, DomainError>;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("component {component}: {error}")]
pub struct CurveParseError {
    pub component: usize,
    pub error: ParseError,
}

/// Four component expressions of t, in slots 0…3.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub comp: [Expr; 4],
    pub source: [String; 4],
}

impl CurveSpec {
    pub fn parse<S: AsRef<str>>(components: &[S; 4]) -> Result<Self, CurveParseError> {
        let mut comp: Vec<Expr> = Vec::with_capacity(4);
        for (k, text) in components.iter().enumerate() {
            comp.push(
                parse_expr(text.as_ref())
                    .map_err(|error| CurveParseError { component: k, error })?,
            );
        }
        Ok(CurveSpec {
            comp: comp.try_into().expect("four components"),
            source: std::array::from_fn(|k| components[k].as_ref().to_string()),
        })
    }

    /// A constant curve at `v`, written with full precision literals.
    pub fn constant(v: Vec4) -> Self {
        let source = v.0.map(|c| format!("{c:?}"));
        let comp = v.0.map(Expr::Const);
        CurveSpec { comp, source }
    }

    pub fn value(&self, t: f64) -> Result<Vec4, DomainError> {
        Ok(Vec4([
            self.comp[0].eval::<f64>(t)?,
            self.comp[1].eval::<f64>(t)?,
            self.comp[2].eval::<f64>(t)?,
            self.comp[3].eval::<f64>(t)?,
        ]))
    }

    /// Forward-mode evaluation: re is the position, eps the velocity.
    pub fn dual(&self, t: f64) -> Result<[Dual; 4], DomainError> {
        Ok([
            self.comp[0].eval::<Dual>(t)?,
            self.comp[1].eval::<Dual>(t)?,
            self.comp[2].eval::<Dual>(t)?,
            self.comp[3].eval::<Dual>(t)?,
        ])
    }
}

impl Curve for CurveSpec {
    fn jet(&self, t: f64) -> Result<CurveJet, DomainError> {
        curve_eval(self, t)
    }
}

pub fn curve_eval(c: &CurveSpec, t: f64) -> Result<CurveJet, DomainError> {
    Ok(CurveJet::from_components([
        c.comp[0].eval::<Jet2>(t)?,
        c.comp[1].eval::<Jet2>(t)?,
        c.comp[2].eval::<Jet2>(t)?,
        c.comp[3].eval::<Jet2>(t)?,
    ]))
}

/// Result of checking a director curve against its model space on a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DirectorReport {
    pub constraint: ModelSpace,
    /// Largest |⟨c,c⟩ − target| over the grid.
    pub max_violation: f64,
    pub worst_t: f64,
    /// ⟨c,c⟩ at `worst_t`.
    pub worst_quad: f64,
    /// Time-orientation (H³₊) or x₀ ≠ 0 (light cone) held everywhere.
    pub sign_ok: bool,
    pub pass: bool,
    /// First domain error hit while sampling, if any.
    pub domain_error: Option<String>,
}

impl DirectorReport {
    pub fn describe(&self) -> String {
        let mut s = format!(
            "{:?}: max violation {:.3e} at t = {} (<c,c> = {})",
            self.constraint, self.max_violation, self.worst_t, self.worst_quad
        );
        if !self.sign_ok {
            s.push_str(match self.constraint {
                ModelSpace::Hyperbolic3 => ", timelike slot not positive",
                _ => ", timelike slot vanishes",
            });
        }
        if let Some(e) = &self.domain_error {
            s.push_str(&format!(", {e}"));
        }
        s
    }
}

pub fn validate_director(
    c: &dyn Curve,
    constraint: ModelSpace,
    samples: &[f64],
) -> DirectorReport {
    let target = match constraint {
        ModelSpace::Hyperbolic3 => -1.0,
        ModelSpace::DeSitter3 => 1.0,
        ModelSpace::LightCone => 0.0,
    };
    let mut report = DirectorReport {
        constraint,
        max_violation: 0.0,
        worst_t: samples.first().copied().unwrap_or(0.0),
        worst_quad: f64::NAN,
        sign_ok: true,
        pass: true,
        domain_error: None,
    };
    for &t in samples {
        let p = match c.jet(t) {
            Ok(j) => j.p,
            Err(e) => {
                report.domain_error = Some(e.to_string());
                report.pass = false;
                return report;
            }
        };
        let q = p.quad();
        let violation = (q - target).abs();
        if violation > report.max_violation || report.worst_quad.is_nan() {
            report.max_violation = violation;
            report.worst_t = t;
            report.worst_quad = q;
        }
        match constraint {
            ModelSpace::Hyperbolic3 if p[0] <= 0.0 => report.sign_ok = false,
            ModelSpace::LightCone if p[0] == 0.0 => report.sign_ok = false,
            _ => {}
        }
    }
    report.pass = report.sign_ok && report.max_violation <= tolerance::CONSTRUCTION;
    report
}

/// `n` evenly spaced samples over the closed interval [lo, hi].
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
                }
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1_alpha() -> CurveSpec {
        CurveSpec::parse(&["3*t+7", "-5*t+1", "t", "-4*t-1"]).unwrap()
    }

    #[test]
    fn example1_base_curve() {
        let j = curve_eval(&example1_alpha(), 0.0).unwrap();
        assert_eq!(j.p, Vec4::new(7.0, 1.0, 0.0, -1.0));
        assert_eq!(j.d1, Vec4::new(3.0, -5.0, 1.0, -4.0));
        assert_eq!(j.d2, Vec4::ZERO);
    }

    #[test]
    fn constant_curve_has_no_derivatives() {
        let c = CurveSpec::constant(Vec4::new(1.0, 2.0, 3.0, 4.0));
        let j = curve_eval(&c, 0.7).unwrap();
        assert_eq!(j.d1, Vec4::ZERO);
        assert_eq!(j.d2, Vec4::ZERO);
    }

    #[test]
    fn example_e1_first_component() {
        let c = CurveSpec::parse(&["t^4/4 + sqrt(2)", "2*t+1", "-3*t", "t^3/3"]).unwrap();
        let j = curve_eval(&c, 1.0).unwrap();
        assert_eq!(j.p[0], 0.25 + 2.0_f64.sqrt());
        assert_eq!(j.d1[0], 1.0);
        assert_eq!(j.d2[0], 3.0);
    }

    #[test]
    fn parse_error_names_component() {
        let err = CurveSpec::parse(&["t", "sin(", "0", "0"]).unwrap_err();
        assert_eq!(err.component, 1);
        assert_eq!(err.error.offset(), 4);
    }

    #[test]
    fn director_checks() {
        let grid = linspace(-1.0, 1.0, 7);
        let beta = CurveSpec::parse(&["1/sqrt(7)", "0", "2*sqrt(2)/sqrt(7)", "0"]).unwrap();
        assert!(validate_director(&beta, ModelSpace::DeSitter3, &grid).pass);

        let gamma_e1 = CurveSpec::parse(&["0", "1/sqrt(7)", "0", "sqrt(6)/sqrt(7)"]).unwrap();
        let r = validate_director(&gamma_e1, ModelSpace::Hyperbolic3, &grid);
        assert!(!r.pass);
        assert!((r.worst_quad - 1.0).abs() < 1e-15);

        let lightlike = CurveSpec::parse(&["1", "1", "0", "0"]).unwrap();
        let r = validate_director(&lightlike, ModelSpace::DeSitter3, &grid);
        assert!(!r.pass);
        assert_eq!(r.max_violation, 1.0);
    }

    #[test]
    fn past_pointing_director_fails_hyperbolic_sign() {
        let beta = CurveSpec::parse(&["-2/sqrt(3)", "0", "1/sqrt(3)", "0"]).unwrap();
        let r = validate_director(&beta, ModelSpace::Hyperbolic3, &[0.0, 1.0]);
        assert!(r.max_violation < 1e-15);
        assert!(!r.sign_ok);
        assert!(!r.pass);
    }

    #[test]
    fn linspace_is_closed() {
        assert_eq!(linspace(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
        assert_eq!(linspace(-2.0, 2.0, 2), vec![-2.0, 2.0]);
    }
}
