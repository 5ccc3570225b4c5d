//! Dual numbers a + εa* (ε² = 0) and dual 4-vectors.
//!
//! Evaluating an expression over `Dual::variable(t)` yields f(t) + εf′(t),
//! which is forward-mode differentiation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::DomainError;
use crate::jet::Scalar;
use crate::lorentz::{cross4, Vec4};
use crate::tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Dual {
    pub re: f64,
    pub eps: f64,
}

impl Dual {
    pub const EPSILON: Dual = Dual { re: 0.0, eps: 1.0 };

    pub const fn new(re: f64, eps: f64) -> Self {
        Self { re, eps }
    }

    fn chain(self, v: f64, dv: f64) -> Self {
        Dual::new(v, dv * self.eps)
    }
}

impl fmt::Display for Dual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.re, self.eps)
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, r: Dual) -> Dual {
        Dual::new(self.re + r.re, self.eps + r.eps)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, r: Dual) -> Dual {
        Dual::new(self.re - r.re, self.eps - r.eps)
    }
}

impl Mul for Dual {
    type Output = Dual;
    /// AB = ab + ε(a*b + ab*).
    fn mul(self, r: Dual) -> Dual {
        Dual::new(self.re * r.re, self.eps * r.re + self.re * r.eps)
    }
}

impl Mul<f64> for Dual {
    type Output = Dual;
    fn mul(self, s: f64) -> Dual {
        Dual::new(self.re * s, self.eps * s)
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.re, -self.eps)
    }
}

impl Scalar for Dual {
    fn constant(v: f64) -> Self {
        Dual::new(v, 0.0)
    }
    fn variable(t: f64) -> Self {
        Dual::new(t, 1.0)
    }
    fn value(&self) -> f64 {
        self.re
    }
    fn try_div(self, r: Self) -> Result<Self, DomainError> {
        if r.re == 0.0 {
            return Err(DomainError::new("div", r.re));
        }
        let q = self.re / r.re;
        Ok(Dual::new(q, (self.eps - q * r.eps) / r.re))
    }
    fn sin(self) -> Self {
        self.chain(self.re.sin(), self.re.cos())
    }
    fn cos(self) -> Self {
        self.chain(self.re.cos(), -self.re.sin())
    }
    fn sinh(self) -> Self {
        self.chain(self.re.sinh(), self.re.cosh())
    }
    fn cosh(self) -> Self {
        self.chain(self.re.cosh(), self.re.sinh())
    }
    fn exp(self) -> Self {
        let e = self.re.exp();
        self.chain(e, e)
    }
    fn try_sqrt(self) -> Result<Self, DomainError> {
        if self.re < 0.0 || (self.re == 0.0 && self.eps != 0.0) {
            return Err(DomainError::new("sqrt", self.re));
        }
        let r = self.re.sqrt();
        if self.eps == 0.0 {
            return Ok(Dual::new(r, 0.0));
        }
        Ok(self.chain(r, 0.5 / r))
    }
    fn try_ln(self) -> Result<Self, DomainError> {
        if self.re <= 0.0 {
            return Err(DomainError::new("log", self.re));
        }
        Ok(self.chain(self.re.ln(), 1.0 / self.re))
    }
    fn try_powi(self, n: i32) -> Result<Self, DomainError> {
        match n {
            0 => Ok(Dual::constant(1.0)),
            1 => Ok(self),
            _ => {
                if n < 0 && self.re == 0.0 {
                    return Err(DomainError::new("pow", self.re));
                }
                Ok(self.chain(self.re.powi(n), f64::from(n) * self.re.powi(n - 1)))
            }
        }
    }
    fn try_powf(self, p: f64) -> Result<Self, DomainError> {
        let x = self.re;
        if x < 0.0 || (x == 0.0 && p < 0.0) {
            return Err(DomainError::new("pow", x));
        }
        if self.eps == 0.0 {
            return Ok(Dual::new(x.powf(p), 0.0));
        }
        let dv = p * x.powf(p - 1.0);
        if !dv.is_finite() {
            return Err(DomainError::new("pow", x));
        }
        Ok(self.chain(x.powf(p), dv))
    }
}

/// Which quadratic form the dual scalar product and norm use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DualNorm {
    /// Minkowski product; |a|² is |⟨a,a⟩|.
    #[default]
    Lorentz,
    /// Euclidean product on R⁴.
    Euclid,
}

impl DualNorm {
    pub fn dot(self, a: &Vec4, b: &Vec4) -> f64 {
        match self {
            DualNorm::Lorentz => a.dot(b),
            DualNorm::Euclid => a.euclid_dot(b),
        }
    }

    /// |a|² in this convention.
    pub fn square(self, a: &Vec4) -> f64 {
        match self {
            DualNorm::Lorentz => a.quad().abs(),
            DualNorm::Euclid => a.euclid_dot(a),
        }
    }
}

impl std::str::FromStr for DualNorm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lorentz" => Ok(DualNorm::Lorentz),
            "euclid" => Ok(DualNorm::Euclid),
            other => Err(format!("unknown dual norm `{other}` (expected lorentz or euclid)")),
        }
    }
}

/// Ã = a + εa*.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DualVec4 {
    pub re: Vec4,
    pub eps: Vec4,
}

impl DualVec4 {
    pub const fn new(re: Vec4, eps: Vec4) -> Self {
        Self { re, eps }
    }

    /// ⟨Ã,B̃⟩ = ⟨a,b⟩ + ε(⟨a,b*⟩ + ⟨a*,b⟩).
    pub fn dot(&self, other: &DualVec4, mode: DualNorm) -> Dual {
        Dual::new(
            mode.dot(&self.re, &other.re),
            mode.dot(&self.re, &other.eps) + mode.dot(&self.eps, &other.re),
        )
    }

    /// Ã × B̃ × I = a×b×I + ε(a×b*×I + a*×b×I), always with the Minkowski
    /// ternary product.
    pub fn cross(&self, other: &DualVec4, i: &Vec4) -> DualVec4 {
        DualVec4::new(
            cross4(&self.re, &other.re, i),
            cross4(&self.re, &other.eps, i) + cross4(&self.eps, &other.re, i),
        )
    }

    /// N = |a|² + 2ε⟨a,a*⟩.
    pub fn norm(&self, mode: DualNorm) -> Dual {
        Dual::new(mode.square(&self.re), 2.0 * mode.dot(&self.re, &self.eps))
    }

    /// Membership of the unit dual sphere.
    pub fn is_unit(&self, mode: DualNorm) -> bool {
        let n = self.norm(mode);
        (n.re - 1.0).abs() <= tolerance::MEMBERSHIP && n.eps.abs() <= tolerance::MEMBERSHIP
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualVectorAlgebra {
    pub dot: Dual,
    pub cross: DualVec4,
    pub norm_a: Dual,
    pub is_unit: bool,
}

pub fn dual_vector_algebra(
    a: &DualVec4,
    b: &DualVec4,
    i: &Vec4,
    mode: DualNorm,
) -> DualVectorAlgebra {
    DualVectorAlgebra {
        dot: a.dot(b, mode),
        cross: a.cross(b, i),
        norm_a: a.norm(mode),
        is_unit: a.is_unit(mode),
    }
}
