use serde::Serialize;

use super::gauss::GaussMapData;
use super::{Frame, RuledHypersurface, SurfaceKind};
use crate::error::GeometryError;
use crate::linalg::{adjugate3, det3, scale3, Mat3};
use crate::tolerance;

/// First fundamental form at a point.
///
/// With a = ⟨φx,φx⟩, b = ⟨β,φx⟩, c = ⟨γ,φx⟩, e = ⟨β,γ⟩:
///
/// ```text
///     | a  b  c |
/// g = | b  σ  e |      σ = +1 (type-1), −1 (type-2), ⟨β,β⟩ / ⟨γ,γ⟩ otherwise
///     | c  e  σ |
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetricData {
    pub g: Mat3,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub e: f64,
    /// Direct 3×3 determinant of `g`.
    pub detg: f64,
    /// −b² + 2cbe − c² − ae² + a (type-1) or b² + 2cbe + c² − ae² + a (type-2).
    pub detg_closed: Option<f64>,
    /// Actual ⟨β,β⟩ and ⟨γ,γ⟩ at the point.
    pub beta_sq: f64,
    pub gamma_sq: f64,
}

impl MetricData {
    pub fn from_frame(f: &Frame, kind: SurfaceKind) -> Self {
        let (px, b_, c_) = (f.phi_x, f.beta(), f.gamma());
        let a = px.dot(&px);
        let b = b_.dot(&px);
        let c = c_.dot(&px);
        let e = b_.dot(&c_);
        let beta_sq = b_.quad();
        let gamma_sq = c_.quad();
        let (g22, g33) = match kind.director_square() {
            Some(s) => (s, s),
            None => (beta_sq, gamma_sq),
        };
        let g = [[a, b, c], [b, g22, e], [c, e, g33]];
        let detg_closed = match kind {
            SurfaceKind::Type1 => Some(-b * b + 2.0 * c * b * e - c * c - a * e * e + a),
            SurfaceKind::Type2 => Some(b * b + 2.0 * c * b * e + c * c - a * e * e + a),
            SurfaceKind::Unconstrained => None,
        };
        MetricData {
            g,
            a,
            b,
            c,
            e,
            detg: det3(&g),
            detg_closed,
            beta_sq,
            gamma_sq,
        }
    }

    pub fn is_singular(&self) -> bool {
        self.detg.abs() <= tolerance::SINGULAR_METRIC
    }
}

pub fn first_form(
    h: &RuledHypersurface,
    x: f64,
    y: f64,
    z: f64,
) -> Result<MetricData, GeometryError> {
    Ok(MetricData::from_frame(&h.frame(x, y, z)?, h.kind))
}

/// [gᶦʲ] from the kind's closed-form adjugate divided by det g; the general
/// adjugate for unconstrained hypersurfaces.
pub fn inverse_metric(m: &MetricData, kind: SurfaceKind) -> Result<Mat3, GeometryError> {
    if m.is_singular() {
        return Err(GeometryError::SingularMetric { det: m.detg });
    }
    let (a, b, c, e) = (m.a, m.b, m.c, m.e);
    let adj = match kind {
        SurfaceKind::Type1 => [
            [1.0 - e * e, c * e - b, b * e - c],
            [c * e - b, a - c * c, b * c - a * e],
            [b * e - c, b * c - a * e, a - b * b],
        ],
        SurfaceKind::Type2 => [
            [1.0 - e * e, c * e + b, b * e + c],
            [c * e + b, -a - c * c, b * c - a * e],
            [b * e + c, b * c - a * e, -a - b * b],
        ],
        SurfaceKind::Unconstrained => adjugate3(&m.g),
    };
    Ok(scale3(&adj, 1.0 / m.detg))
}

/// h with h₁₁ = ⟨φxx,G⟩, h₁₂ = h₂₁ = ⟨β′,G⟩, h₁₃ = h₃₁ = ⟨γ′,G⟩, zero elsewhere.
pub fn second_form_from(f: &Frame, gauss: &GaussMapData) -> Mat3 {
    let g = &gauss.g;
    let h11 = f.phi_xx.dot(g);
    let h12 = f.phi_xy.dot(g);
    let h13 = f.phi_xz.dot(g);
    [[h11, h12, h13], [h12, 0.0, 0.0], [h13, 0.0, 0.0]]
}

pub fn second_form(
    h: &RuledHypersurface,
    x: f64,
    y: f64,
    z: f64,
) -> Result<Mat3, GeometryError> {
    let f = h.frame(x, y, z)?;
    let gauss = GaussMapData::from_frame(&f)?;
    Ok(second_form_from(&f, &gauss))
}
