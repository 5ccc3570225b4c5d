use serde::Serialize;

use super::forms::{inverse_metric, second_form_from, MetricData};
use super::gauss::GaussMapData;
use super::laplace::{laplace_from_frame, LaplaceBeltrami};
use super::{Frame, RuledHypersurface, SurfaceKind};
use crate::error::GeometryError;
use crate::linalg::{adjugate3, det3, matmul3, trace3, Mat3};
use crate::lorentz::Vec4;
use crate::tolerance;

/// Left-hand side of the minimality condition
///
/// ```text
/// R = adj₁₁⟨φxx,N⟩ + 2·adj₁₂⟨β′,N⟩ + 2·adj₁₃⟨γ′,N⟩
/// ```
///
/// with N the unnormalised normal and adj the adjugate of g (type-1:
/// 1−e², ce−b, be−c; type-2: 1−e², ce+b, be+c). 3H = R / (det g · D).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Minimality {
    pub value: f64,
    /// Orthogonal-director form (e = 0): n₁₁ ∓ 2b·n₁₂ ∓ 2c·n₁₃.
    pub corollary: Option<f64>,
    /// |R| / ((|det g| + 1)(D + 1)).
    pub normalized: f64,
}

impl Minimality {
    pub fn is_minimal(&self) -> bool {
        self.normalized <= tolerance::MINIMAL
    }
}

fn minimality_from(
    f: &Frame,
    m: &MetricData,
    gauss: &GaussMapData,
    kind: SurfaceKind,
) -> Minimality {
    let n = &gauss.n_raw;
    let n11 = f.phi_xx.dot(n);
    let n12 = f.phi_xy.dot(n);
    let n13 = f.phi_xz.dot(n);
    let adj = adjugate3(&m.g);
    let value = adj[0][0] * n11 + 2.0 * adj[0][1] * n12 + 2.0 * adj[0][2] * n13;
    let corollary = if m.e.abs() <= tolerance::ORTHOGONAL_DIRECTORS {
        match kind {
            SurfaceKind::Type1 => Some(n11 - 2.0 * m.b * n12 - 2.0 * m.c * n13),
            SurfaceKind::Type2 => Some(n11 + 2.0 * m.b * n12 + 2.0 * m.c * n13),
            SurfaceKind::Unconstrained => None,
        }
    } else {
        None
    };
    Minimality {
        value,
        corollary,
        normalized: value.abs() / ((m.detg.abs() + 1.0) * (gauss.d + 1.0)),
    }
}

pub fn minimality_residual(
    h: &RuledHypersurface,
    x: f64,
    y: f64,
    z: f64,
) -> Result<Minimality, GeometryError> {
    let f = h.frame(x, y, z)?;
    let gauss = GaussMapData::from_frame(&f)?;
    let m = MetricData::from_frame(&f, h.kind);
    Ok(minimality_from(&f, &m, &gauss, h.kind))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureReport {
    /// Parameter point (x, y, z).
    pub point: [f64; 3],
    pub position: Vec4,
    pub metric: MetricData,
    pub gauss: GaussMapData,
    /// Second fundamental form.
    pub h: Mat3,
    /// Shape operator g⁻¹h.
    pub shape: Mat3,
    /// det h / det g.
    pub k: f64,
    /// K from the rank-two structure of h (rows 2 and 3 are parallel).
    pub k_structural: f64,
    /// trace(S) / 3.
    pub mean_curvature: f64,
    /// R / (3 · det g · D).
    pub mean_curvature_residual: f64,
    pub minimality: Minimality,
    pub lb: LaplaceBeltrami,
    pub flags: Vec<String>,
}

impl CurvatureReport {
    pub fn lb_norm(&self) -> f64 {
        self.lb.general.euclid_norm()
    }
}

pub fn curvature_report(
    h: &RuledHypersurface,
    x: f64,
    y: f64,
    z: f64,
) -> Result<CurvatureReport, GeometryError> {
    let f = h.frame(x, y, z)?;
    let gauss = GaussMapData::from_frame(&f)?;
    let metric = MetricData::from_frame(&f, h.kind);
    let inv = inverse_metric(&metric, h.kind)?;
    let second = second_form_from(&f, &gauss);
    let shape = matmul3(&inv, &second);
    let minimality = minimality_from(&f, &metric, &gauss, h.kind);
    let lb = laplace_from_frame(&f, &metric, h.kind)?;

    let mut flags = Vec::new();
    if !h.warnings.is_empty() {
        flags.push("director-constraint".to_string());
    }
    let report = CurvatureReport {
        point: [x, y, z],
        position: f.point,
        metric,
        gauss,
        h: second,
        shape,
        k: det3(&second) / metric.detg,
        k_structural: 0.0,
        mean_curvature: trace3(&shape) / 3.0,
        mean_curvature_residual: minimality.value / (3.0 * metric.detg * gauss.d),
        minimality,
        lb,
        flags,
    };
    let finite = report.k.is_finite()
        && report.mean_curvature.is_finite()
        && report.lb.general.is_finite();
    if !finite {
        return Err(GeometryError::NonFinite);
    }
    Ok(report)
}
