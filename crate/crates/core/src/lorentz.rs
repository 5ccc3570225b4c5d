//! Vector algebra on Minkowski 4-space R⁴₁ with signature (−,+,+,+).
//!
//! Slot 0 is the timelike coordinate. The ternary cross product is the
//! formal determinant with first row (−e₁, e₂, e₃, e₄), so that for every w
//!
//! ```text
//! ⟨x × y × z, w⟩ = det[w; x; y; z]
//! ```

use std::ops::{Add, AddAssign, Div, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::linalg::{det3, Mat3};
use crate::tolerance;

/// Diagonal of the Minkowski metric.
pub const METRIC: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vec4(pub [f64; 4]);

impl Vec4 {
    pub const ZERO: Vec4 = Vec4([0.0; 4]);

    pub const fn new(c0: f64, c1: f64, c2: f64, c3: f64) -> Self {
        Vec4([c0, c1, c2, c3])
    }

    /// Checked constructor; rejects NaN and infinities.
    pub fn try_new(c: [f64; 4]) -> Result<Self, GeometryError> {
        if c.iter().all(|v| v.is_finite()) {
            Ok(Vec4(c))
        } else {
            Err(GeometryError::NonFinite)
        }
    }

    /// Unit vector along slot `k`.
    pub fn basis(k: usize) -> Self {
        let mut c = [0.0; 4];
        c[k] = 1.0;
        Vec4(c)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    /// Pseudo-scalar product −x₀y₀ + x₁y₁ + x₂y₂ + x₃y₃.
    pub fn dot(&self, other: &Vec4) -> f64 {
        lorentz_dot(self, other)
    }

    pub fn euclid_dot(&self, other: &Vec4) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    /// ⟨x, x⟩.
    pub fn quad(&self) -> f64 {
        self.dot(self)
    }

    /// √|⟨x, x⟩|.
    pub fn norm(&self) -> f64 {
        self.quad().abs().sqrt()
    }

    pub fn euclid_norm(&self) -> f64 {
        self.euclid_dot(self).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    pub fn character(&self) -> CausalCharacter {
        if self.0.iter().all(|v| *v == 0.0) {
            return CausalCharacter::Zero;
        }
        let q = self.quad();
        if q > 0.0 {
            CausalCharacter::Spacelike
        } else if q < 0.0 {
            CausalCharacter::Timelike
        } else {
            CausalCharacter::Lightlike
        }
    }

    pub fn in_model_space(&self, space: ModelSpace) -> bool {
        let q = self.quad();
        let tol = tolerance::MEMBERSHIP;
        match space {
            ModelSpace::Hyperbolic3 => (q + 1.0).abs() <= tol && self.0[0] > 0.0,
            ModelSpace::DeSitter3 => (q - 1.0).abs() <= tol,
            ModelSpace::LightCone => q.abs() <= tol && self.0[0] != 0.0,
        }
    }
}

pub fn lorentz_dot(x: &Vec4, y: &Vec4) -> f64 {
    -x.0[0] * y.0[0] + x.0[1] * y.0[1] + x.0[2] * y.0[2] + x.0[3] * y.0[3]
}

/// Ternary vector product x × y × z of R⁴₁.
///
/// Cofactor expansion along the symbolic row (−e₁, e₂, e₃, e₄): slot k gets
/// `row_sign(k) · (−1)^k · minor_k`, with row_sign = (−1, 1, 1, 1).
pub fn cross4(x: &Vec4, y: &Vec4, z: &Vec4) -> Vec4 {
    let mut out = [0.0; 4];
    for (k, slot) in out.iter_mut().enumerate() {
        let cols: [usize; 3] = match k {
            0 => [1, 2, 3],
            1 => [0, 2, 3],
            2 => [0, 1, 3],
            _ => [0, 1, 2],
        };
        let minor: Mat3 = [
            cols.map(|c| x.0[c]),
            cols.map(|c| y.0[c]),
            cols.map(|c| z.0[c]),
        ];
        let cofactor = if k % 2 == 0 { det3(&minor) } else { -det3(&minor) };
        *slot = METRIC[k] * cofactor;
    }
    Vec4(out)
}

/// Gram matrix of pairwise Lorentzian products.
pub fn gram(x: &Vec4, y: &Vec4, z: &Vec4) -> Mat3 {
    let v = [x, y, z];
    let mut g = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            g[i][j] = v[i].dot(v[j]);
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CausalCharacter {
    Spacelike,
    Timelike,
    Lightlike,
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModelSpace {
    /// H³₊(−1): ⟨x,x⟩ = −1, x₀ > 0.
    Hyperbolic3,
    /// S³₁: ⟨x,x⟩ = 1.
    DeSitter3,
    /// LC: ⟨x,x⟩ = 0, x₀ ≠ 0.
    LightCone,
}

impl ModelSpace {
    pub const ALL: [ModelSpace; 3] = [
        ModelSpace::Hyperbolic3,
        ModelSpace::DeSitter3,
        ModelSpace::LightCone,
    ];
}

#[derive(Debug, Clone, PartialEq)]
pub struct Characterization {
    pub norm: f64,
    pub character: CausalCharacter,
    pub memberships: Vec<ModelSpace>,
}

pub fn characterize(x: &Vec4) -> Characterization {
    Characterization {
        norm: x.norm(),
        character: x.character(),
        memberships: ModelSpace::ALL
            .into_iter()
            .filter(|s| x.in_model_space(*s))
            .collect(),
    }
}

impl Index<usize> for Vec4 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vec4 {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

impl Add for Vec4 {
    type Output = Vec4;
    fn add(self, rhs: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl AddAssign for Vec4 {
    fn add_assign(&mut self, rhs: Vec4) {
        *self = *self + rhs;
    }
}

impl Sub for Vec4 {
    type Output = Vec4;
    fn sub(self, rhs: Vec4) -> Vec4 {
        Vec4(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl SubAssign for Vec4 {
    fn sub_assign(&mut self, rhs: Vec4) {
        *self = *self - rhs;
    }
}

impl Neg for Vec4 {
    type Output = Vec4;
    fn neg(self) -> Vec4 {
        Vec4(self.0.map(|v| -v))
    }
}

impl Mul<f64> for Vec4 {
    type Output = Vec4;
    fn mul(self, s: f64) -> Vec4 {
        Vec4(self.0.map(|v| v * s))
    }
}

impl Mul<Vec4> for f64 {
    type Output = Vec4;
    fn mul(self, v: Vec4) -> Vec4 {
        v * self
    }
}

impl Div<f64> for Vec4 {
    type Output = Vec4;
    fn div(self, s: f64) -> Vec4 {
        Vec4(self.0.map(|v| v / s))
    }
}
