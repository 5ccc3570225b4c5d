//! Laplace–Beltrami operator of φ with respect to its first fundamental form,
//!
//! ```text
//! Δf = |G|^{-1/2} Σᵢ ∂ᵢ( |G|^{1/2} gᶦʲ ∂ⱼf ),   G = det g
//! ```
//!
//! With Yₖ = Σⱼ adj(g)ₖⱼ ∂ⱼφ this reduces to Σₖ (∂ₖYₖ·G − ½·Yₖ·∂ₖG) / G²,
//! which holds for either sign of G. The outer derivatives are analytic:
//! ∂ₖ g_ij = ⟨∂ₖφᵢ, φⱼ⟩ + ⟨φᵢ, ∂ₖφⱼ⟩ from the jet frame.

use serde::Serialize;

use super::forms::MetricData;
use super::{Frame, RuledHypersurface, SurfaceKind};
use crate::error::GeometryError;
use crate::linalg::{adjugate3, adjugate3_derivative, Mat3};
use crate::lorentz::Vec4;
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaplaceBeltrami {
    /// Divergence-form evaluation on the full metric.
    pub general: Vec4,
    /// Orthogonal-director closed form (type-1 Q = a − b² − c², type-2
    /// Q = a + b² + c²), with the ½ from differentiating Q^{-1/2}.
    pub closed_form: Option<Vec4>,
    /// The same closed form with Pₖ entering at full weight over √Q·Q^{3/2};
    /// undefined for Q ≤ 0.
    pub closed_form_as_printed: Option<Vec4>,
}

/// ∂ₖ g for k = x, y, z. Constrained kinds keep g₂₂ and g₃₃ fixed.
pub(crate) fn metric_derivatives(f: &Frame, kind: SurfaceKind) -> [Mat3; 3] {
    let t = f.tangents();
    std::array::from_fn(|k| {
        let mut d = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                d[i][j] = f.second(k, i).dot(&t[j]) + t[i].dot(&f.second(k, j));
            }
        }
        if kind.director_square().is_some() {
            d[1][1] = 0.0;
            d[2][2] = 0.0;
        }
        d
    })
}

pub(crate) fn general_path(f: &Frame, m: &MetricData, dg: &[Mat3; 3]) -> Vec4 {
    let t = f.tangents();
    let det = m.detg;
    let adj = adjugate3(&m.g);
    let mut out = Vec4::ZERO;
    for k in 0..3 {
        let dadj = adjugate3_derivative(&m.g, &dg[k]);
        // Jacobi: ∂ₖ det g = tr(adj g · ∂ₖ g)
        let mut ddet = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                ddet += adj[j][i] * dg[k][i][j];
            }
        }
        let mut y = Vec4::ZERO;
        let mut dy = Vec4::ZERO;
        for j in 0..3 {
            y += adj[k][j] * t[j];
            dy += dadj[k][j] * t[j] + adj[k][j] * f.second(k, j);
        }
        out += (det * dy - 0.5 * ddet * y) / (det * det);
    }
    out
}

/// Returns (corrected, as printed) closed forms for orthogonal directors.
fn closed_forms(
    f: &Frame,
    m: &MetricData,
    dg: &[Mat3; 3],
    kind: SurfaceKind,
) -> (Option<Vec4>, Option<Vec4>) {
    // s = −1 for type-1, +1 for type-2
    let s = match kind {
        SurfaceKind::Type1 => -1.0,
        SurfaceKind::Type2 => 1.0,
        SurfaceKind::Unconstrained => return (None, None),
    };
    if m.e.abs() > tolerance::ORTHOGONAL_DIRECTORS {
        return (None, None);
    }
    let (a, b, c) = (m.a, m.b, m.c);
    let ak = |k: usize| dg[k][0][0];
    let bk = |k: usize| dg[k][0][1];
    let ck = |k: usize| dg[k][0][2];
    let (px, beta, gamma) = (f.phi_x, f.beta(), f.gamma());
    let (dbeta, dgamma) = (f.phi_xy, f.phi_xz);

    let q = a + s * (b * b + c * c);
    if q.abs() <= tolerance::SINGULAR_METRIC {
        return (None, None);
    }
    let p: [f64; 3] = std::array::from_fn(|k| ak(k) + 2.0 * s * (b * bk(k) + c * ck(k)));

    let x1 = px + s * (b * beta + c * gamma);
    let dx1 = f.phi_xx + s * (bk(0) * beta + b * dbeta + ck(0) * gamma + c * dgamma);
    let x2 = s * b * px + (-s * a - c * c) * beta + b * c * gamma;
    let dx2 = s * b * dbeta + (-s * ak(1) - 2.0 * c * ck(1)) * beta + (bk(1) * c + b * ck(1)) * gamma;
    let x3 = s * c * px + b * c * beta + (-s * a - b * b) * gamma;
    let dx3 = s * c * dgamma + (bk(2) * c + b * ck(2)) * beta + (-s * ak(2) - 2.0 * b * bk(2)) * gamma;

    let terms = [(x1, dx1), (x2, dx2), (x3, dx3)];
    let mut corrected = Vec4::ZERO;
    for (k, (x, dx)) in terms.iter().enumerate() {
        corrected += (q * *dx - 0.5 * p[k] * *x) / (q * q);
    }
    let printed = (q > 0.0).then(|| {
        let mut acc = Vec4::ZERO;
        for (k, (x, dx)) in terms.iter().enumerate() {
            acc += (q * *dx - p[k] * *x) / q.powf(1.5);
        }
        acc / q.sqrt()
    });
    (Some(corrected), printed)
}

pub(crate) fn laplace_from_frame(
    f: &Frame,
    m: &MetricData,
    kind: SurfaceKind,
) -> Result<LaplaceBeltrami, GeometryError> {
    if m.is_singular() {
        return Err(GeometryError::SingularMetric { det: m.detg });
    }
    let dg = metric_derivatives(f, kind);
    let (closed_form, closed_form_as_printed) = closed_forms(f, m, &dg, kind);
    Ok(LaplaceBeltrami {
        general: general_path(f, m, &dg),
        closed_form,
        closed_form_as_printed,
    })
}

pub fn laplace_beltrami(
    h: &RuledHypersurface,
    x: f64,
    y: f64,
    z: f64,
) -> Result<LaplaceBeltrami, GeometryError> {
    let f = h.frame(x, y, z)?;
    let m = MetricData::from_frame(&f, h.kind);
    laplace_from_frame(&f, &m, h.kind)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{make_ruled, SurfaceKind};
    use super::*;

    #[test]
    fn affine_examples_have_zero_laplacian() {
        for h in [example1(), hyperplane()] {
            let lb = laplace_beltrami(&h, 0.3, -0.6, 0.2).unwrap();
            assert!(lb.general.max_abs() < 1e-12);
            assert!(lb.closed_form.unwrap().max_abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_agrees_with_general_path() {
        let h = make_ruled(
            spec(["sin(t)", "t^2", "cos(t)", "t^3/3"]),
            spec(["0", "cos(t^2)", "sin(t^2)", "0"]),
            spec(["sinh(t/2)", "0", "0", "cosh(t/2)"]),
            SurfaceKind::Type1,
            UNIT_BOX,
            true,
        )
        .unwrap();
        let lb = laplace_beltrami(&h, 0.4, 0.3, -0.2).unwrap();
        let closed = lb.closed_form.unwrap();
        assert!((lb.general - closed).max_abs() < 1e-8, "{lb:?}");
        assert!(lb.general.max_abs() > 1e-3);
    }

    #[test]
    fn no_closed_form_for_skew_directors() {
        let h = make_ruled(
            spec(["t", "0", "0", "0"]),
            spec(["0", "1", "0", "0"]),
            spec(["0", "cos(1)", "sin(1)", "0"]),
            SurfaceKind::Type1,
            UNIT_BOX,
            true,
        )
        .unwrap();
        let lb = laplace_beltrami(&h, 0.0, 0.0, 0.0).unwrap();
        assert!(lb.closed_form.is_none());
    }
}
