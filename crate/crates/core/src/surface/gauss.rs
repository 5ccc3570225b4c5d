use serde::Serialize;

use super::{Frame, RuledHypersurface};
use crate::error::GeometryError;
use crate::lorentz::{cross4, CausalCharacter, Vec4};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussMapData {
    /// φx × φy × φz before normalisation.
    pub n_raw: Vec4,
    /// Unit normal N_raw / D.
    pub g: Vec4,
    /// √|⟨N_raw, N_raw⟩|.
    pub d: f64,
    pub normal_character: CausalCharacter,
}

impl GaussMapData {
    pub fn from_frame(f: &Frame) -> Result<Self, GeometryError> {
        let n_raw = cross4(&f.phi_x, &f.phi_y, &f.phi_z);
        let q = n_raw.quad();
        let d = q.abs().sqrt();
        let euclid = n_raw.euclid_dot(&n_raw);
        if d <= tolerance::DEGENERATE_NORMAL || q.abs() <= tolerance::LIGHTLIKE_RELATIVE * euclid
        {
            return Err(GeometryError::DegenerateNormal {
                x: f.x,
                y: f.y,
                z: f.z,
                norm: d,
            });
        }
        Ok(GaussMapData {
            n_raw,
            g: n_raw / d,
            d,
            normal_character: n_raw.character(),
        })
    }

    /// ⟨G, G⟩ = ±1.
    pub fn sign(&self) -> f64 {
        self.g.quad().signum()
    }
}

pub fn gauss_map(
    h: &RuledHypersurface,
    x: f64,
    y: f64,
    z: f64,
) -> Result<GaussMapData, GeometryError> {
    GaussMapData::from_frame(&h.frame(x, y, z)?)
}

/// Normal components G₁…G₄ exactly as printed in the closed-form Gauss map
/// theorem, in terms of E_ij = γᵢ(φx)ⱼ and the entries of β (1-based indices
/// in the formulas map to slots 0…3).
pub fn printed_gauss_components(phi_x: &Vec4, beta: &Vec4, gamma: &Vec4) -> Vec4 {
    let e = |i: usize, j: usize| gamma[i - 1] * phi_x[j - 1];
    let b = |i: usize| beta[i - 1];
    Vec4::new(
        b(2) * (e(4, 3) - e(3, 4)) + b(3) * (e(2, 4) - e(4, 2)) + b(4) * (e(3, 2) - e(2, 3)),
        b(1) * (e(4, 3) - e(3, 4)) + b(3) * (e(1, 4) - e(4, 1)) + b(4) * (e(3, 1) - e(1, 3)),
        b(1) * (e(2, 4) - e(4, 2)) + b(2) * (e(4, 1) - e(1, 4)) + b(4) * (e(1, 2) - e(2, 1)),
        b(1) * (e(3, 2) - e(2, 3)) + b(2) * (e(1, 3) - e(3, 1)) + b(3) * (e(2, 1) - e(1, 2)),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentVerdict {
    Match,
    SignFlipped,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaussComponentComparison {
    /// 1-based component label G₁…G₄.
    pub component: usize,
    pub verdict: ComponentVerdict,
    /// Largest |printed − cross product| seen, relative to the frame scale.
    pub max_deviation: f64,
    pub samples: usize,
}

/// Compares each printed component against the cross product on the given
/// frames.
pub fn compare_printed_gauss_components(
    frames: &[(Vec4, Vec4, Vec4)],
) -> [GaussComponentComparison; 4] {
    std::array::from_fn(|k| {
        let mut same = 0.0_f64;
        let mut flipped = 0.0_f64;
        for (px, b, c) in frames {
            let printed = printed_gauss_components(px, b, c)[k];
            let exact = cross4(px, b, c)[k];
            let scale = px.max_abs().max(1.0) * b.max_abs().max(1.0) * c.max_abs().max(1.0);
            same = same.max((printed - exact).abs() / scale);
            flipped = flipped.max((printed + exact).abs() / scale);
        }
        let tol = tolerance::CONSISTENCY_RELATIVE;
        let verdict = if same <= tol {
            ComponentVerdict::Match
        } else if flipped <= tol {
            ComponentVerdict::SignFlipped
        } else {
            ComponentVerdict::Mismatch
        };
        GaussComponentComparison {
            component: k + 1,
            verdict,
            max_deviation: same,
            samples: frames.len(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn hyperplane_normal() {
        let h = hyperplane();
        let g = gauss_map(&h, 0.2, 0.5, -0.4).unwrap();
        assert_eq!(g.g, Vec4::new(0.0, 0.0, 0.0, -1.0));
        assert_eq!(g.normal_character, CausalCharacter::Spacelike);
    }

    #[test]
    fn normal_is_orthogonal_to_frame() {
        let h = example1();
        let f = h.frame(0.3, -0.2, 0.9).unwrap();
        let g = GaussMapData::from_frame(&f).unwrap();
        for t in f.tangents() {
            assert!(g.g.dot(&t).abs() < 1e-12);
        }
        assert!((g.g.quad().abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equal_directors_are_degenerate() {
        let beta = ["0", "cos(t)", "sin(t)", "0"];
        let h = super::super::make_ruled(
            spec(["t", "t^2", "0", "1"]),
            spec(beta),
            spec(beta),
            super::super::SurfaceKind::Type1,
            UNIT_BOX,
            true,
        )
        .unwrap();
        assert!(matches!(
            gauss_map(&h, 0.1, 0.2, 0.3),
            Err(GeometryError::DegenerateNormal { .. })
        ));
    }

    #[test]
    fn lightlike_normal_is_degenerate() {
        // tangents spanning a lightlike hyperplane: N ∝ (1, 1, 0, 0)
        let f = Frame {
            x: 0.0,
            y: 0.0,
            z: 0.0,
            point: Vec4::ZERO,
            phi_x: Vec4::new(1.0, 1.0, 0.0, 0.0),
            phi_y: Vec4::new(0.0, 0.0, 1.0, 0.0),
            phi_z: Vec4::new(0.0, 0.0, 0.0, 1.0),
            phi_xx: Vec4::ZERO,
            phi_xy: Vec4::ZERO,
            phi_xz: Vec4::ZERO,
        };
        assert!(matches!(
            GaussMapData::from_frame(&f),
            Err(GeometryError::DegenerateNormal { .. })
        ));
    }

    #[test]
    fn printed_components_on_a_frame() {
        let px = Vec4::new(0.3, -1.0, 2.0, 0.5);
        let b = Vec4::new(1.2, 0.1, -0.7, 0.4);
        let c = Vec4::new(-0.2, 0.9, 0.3, 1.1);
        let r = compare_printed_gauss_components(&[(px, b, c)]);
        assert!(r.iter().all(|c| c.verdict == ComponentVerdict::Match));
    }
}
