//! 2-ruled hypersurfaces φ(x,y,z) = α(x) + yβ(x) + zγ(x) in R⁴₁.
//!
//! Type-1 hypersurfaces take their directors β, γ in de Sitter space S³₁,
//! type-2 in hyperbolic space H³₊(−1). Hypersurfaces built from octonions
//! carry no director constraint and are tagged [`SurfaceKind::Unconstrained`].
//!
//! All derivatives come from jets of the curve expressions, so the frame,
//! fundamental forms and Laplace–Beltrami operator are exact up to rounding.

mod curvature;
mod forms;
mod gauss;
mod laplace;

use serde::{Deserialize, Serialize};

pub use curvature::{curvature_report, minimality_residual, CurvatureReport, Minimality};
pub use forms::{first_form, inverse_metric, second_form, MetricData};
pub use gauss::{
    compare_printed_gauss_components, gauss_map, printed_gauss_components, ComponentVerdict,
    GaussComponentComparison, GaussMapData,
};
pub use laplace::{laplace_beltrami, LaplaceBeltrami};

use crate::construct::CrossSumCurve;
use crate::dsl::{linspace, validate_director, Curve, CurveJet, CurveSpec, DirectorReport};
use crate::error::{DomainError, GeometryError};
use crate::lorentz::{ModelSpace, Vec4};

/// Grid size used when validating director curves over the base interval.
pub const DIRECTOR_SAMPLES: usize = 33;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    /// β, γ ∈ S³₁.
    Type1,
    /// β, γ ∈ H³₊(−1).
    Type2,
    Unconstrained,
}

impl SurfaceKind {
    pub fn director_space(self) -> Option<ModelSpace> {
        match self {
            SurfaceKind::Type1 => Some(ModelSpace::DeSitter3),
            SurfaceKind::Type2 => Some(ModelSpace::Hyperbolic3),
            SurfaceKind::Unconstrained => None,
        }
    }

    /// Nominal ⟨β,β⟩ = ⟨γ,γ⟩ for constrained kinds.
    pub fn director_square(self) -> Option<f64> {
        match self {
            SurfaceKind::Type1 => Some(1.0),
            SurfaceKind::Type2 => Some(-1.0),
            SurfaceKind::Unconstrained => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub min: f64,
    pub max: f64,
}

impl Interval {
    pub const fn new(min: f64, max: f64) -> Self {
        Self { min, max }
    }

    pub fn contains(&self, v: f64) -> bool {
        self.min <= v && v <= self.max
    }
}

/// A curve given either by expressions or by a sum of ternary products.
#[derive(Debug, Clone, PartialEq)]
pub enum CurveSource {
    Spec(CurveSpec),
    CrossSum(CrossSumCurve),
}

impl Curve for CurveSource {
    fn jet(&self, t: f64) -> Result<CurveJet, DomainError> {
        match self {
            CurveSource::Spec(c) => c.jet(t),
            CurveSource::CrossSum(c) => c.jet(t),
        }
    }
}

impl From<CurveSpec> for CurveSource {
    fn from(c: CurveSpec) -> Self {
        CurveSource::Spec(c)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuledHypersurface {
    pub alpha: CurveSource,
    pub beta: CurveSource,
    pub gamma: CurveSource,
    pub kind: SurfaceKind,
    /// Intervals for x, y, z (or t, s, r for octonion constructions).
    pub domain: [Interval; 3],
    /// Director checks run at construction (empty for unconstrained kinds).
    pub director_reports: Vec<DirectorReport>,
    /// Lax-mode violations and construction hypotheses that failed.
    pub warnings: Vec<String>,
}

pub fn make_ruled(
    alpha: impl Into<CurveSource>,
    beta: impl Into<CurveSource>,
    gamma: impl Into<CurveSource>,
    kind: SurfaceKind,
    domain: [Interval; 3],
    strict: bool,
) -> Result<RuledHypersurface, GeometryError> {
    let mut h = RuledHypersurface {
        alpha: alpha.into(),
        beta: beta.into(),
        gamma: gamma.into(),
        kind,
        domain,
        director_reports: Vec::new(),
        warnings: Vec::new(),
    };
    if let Some(space) = kind.director_space() {
        let grid = linspace(domain[0].min, domain[0].max, DIRECTOR_SAMPLES);
        for (name, curve) in [("beta", &h.beta), ("gamma", &h.gamma)] {
            let report = validate_director(curve, space, &grid);
            if !report.pass {
                let msg = format!("{name} violates {}", report.describe());
                if strict {
                    return Err(GeometryError::DirectorConstraintViolated(msg));
                }
                h.warnings.push(msg);
            }
            h.director_reports.push(report);
        }
    }
    Ok(h)
}

/// Tangent frame and second derivatives of φ at a parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub point: Vec4,
    pub phi_x: Vec4,
    pub phi_y: Vec4,
    pub phi_z: Vec4,
    pub phi_xx: Vec4,
    pub phi_xy: Vec4,
    pub phi_xz: Vec4,
}

impl Frame {
    /// φ_y, φ_z as named directors.
    pub fn beta(&self) -> Vec4 {
        self.phi_y
    }

    pub fn gamma(&self) -> Vec4 {
        self.phi_z
    }

    /// First partials in (x, y, z) order.
    pub fn tangents(&self) -> [Vec4; 3] {
        [self.phi_x, self.phi_y, self.phi_z]
    }

    /// ∂ₖ∂ⱼφ; every second partial that involves only y or z vanishes.
    pub fn second(&self, k: usize, j: usize) -> Vec4 {
        match (k.min(j), k.max(j)) {
            (0, 0) => self.phi_xx,
            (0, 1) => self.phi_xy,
            (0, 2) => self.phi_xz,
            _ => Vec4::ZERO,
        }
    }
}

impl RuledHypersurface {
    pub fn eval_point(&self, x: f64, y: f64, z: f64) -> Result<Vec4, DomainError> {
        let a = self.alpha.jet(x)?.p;
        let b = self.beta.jet(x)?.p;
        let c = self.gamma.jet(x)?.p;
        Ok(a + y * b + z * c)
    }

    pub fn frame(&self, x: f64, y: f64, z: f64) -> Result<Frame, DomainError> {
        let a = self.alpha.jet(x)?;
        let b = self.beta.jet(x)?;
        let c = self.gamma.jet(x)?;
        Ok(Frame {
            x,
            y,
            z,
            point: a.p + y * b.p + z * c.p,
            phi_x: a.d1 + y * b.d1 + z * c.d1,
            phi_y: b.p,
            phi_z: c.p,
            phi_xx: a.d2 + y * b.d2 + z * c.d2,
            phi_xy: b.d1,
            phi_xz: c.d1,
        })
    }
}

pub fn eval_point(h: &RuledHypersurface, x: f64, y: f64, z: f64) -> Result<Vec4, DomainError> {
    h.eval_point(x, y, z)
}

pub fn frame(h: &RuledHypersurface, x: f64, y: f64, z: f64) -> Result<Frame, DomainError> {
    h.frame(x, y, z)
}
