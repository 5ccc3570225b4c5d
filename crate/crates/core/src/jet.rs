//! Second-order jets (f, f′, f″) and the numeric trait shared by every type
//! the expression evaluator can run over.

use std::ops::{Add, Mul, Neg, Sub};

use crate::dsl::Expr;
use crate::error::DomainError;

/// Number types the curve language evaluates over: plain values, dual numbers
/// (first derivatives) and jets (first and second derivatives).
pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn constant(v: f64) -> Self;
    /// The independent variable seeded at `t`.
    fn variable(t: f64) -> Self;
    fn value(&self) -> f64;

    fn try_div(self, rhs: Self) -> Result<Self, DomainError>;
    fn sin(self) -> Self;
    fn cos(self) -> Self;
    fn sinh(self) -> Self;
    fn cosh(self) -> Self;
    fn exp(self) -> Self;
    fn try_sqrt(self) -> Result<Self, DomainError>;
    fn try_ln(self) -> Result<Self, DomainError>;
    fn try_powi(self, n: i32) -> Result<Self, DomainError>;
    fn try_powf(self, p: f64) -> Result<Self, DomainError>;
}

impl Scalar for f64 {
    fn constant(v: f64) -> Self {
        v
    }
    fn variable(t: f64) -> Self {
        t
    }
    fn value(&self) -> f64 {
        *self
    }
    fn try_div(self, rhs: Self) -> Result<Self, DomainError> {
        if rhs == 0.0 {
            return Err(DomainError::new("div", rhs));
        }
        Ok(self / rhs)
    }
    fn sin(self) -> Self {
        f64::sin(self)
    }
    fn cos(self) -> Self {
        f64::cos(self)
    }
    fn sinh(self) -> Self {
        f64::sinh(self)
    }
    fn cosh(self) -> Self {
        f64::cosh(self)
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn try_sqrt(self) -> Result<Self, DomainError> {
        if self < 0.0 {
            return Err(DomainError::new("sqrt", self));
        }
        Ok(self.sqrt())
    }
    fn try_ln(self) -> Result<Self, DomainError> {
        if self <= 0.0 {
            return Err(DomainError::new("log", self));
        }
        Ok(self.ln())
    }
    fn try_powi(self, n: i32) -> Result<Self, DomainError> {
        if n < 0 && self == 0.0 {
            return Err(DomainError::new("pow", self));
        }
        Ok(self.powi(n))
    }
    fn try_powf(self, p: f64) -> Result<Self, DomainError> {
        if self < 0.0 || (self == 0.0 && p < 0.0) {
            return Err(DomainError::new("pow", self));
        }
        Ok(self.powf(p))
    }
}

/// Value with first and second derivative at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Jet2 {
    pub f: f64,
    pub d1: f64,
    pub d2: f64,
}

impl Jet2 {
    pub const fn new(f: f64, d1: f64, d2: f64) -> Self {
        Self { f, d1, d2 }
    }

    fn is_constant(&self) -> bool {
        self.d1 == 0.0 && self.d2 == 0.0
    }

    /// Composition φ∘self given φ(f), φ′(f), φ″(f).
    fn compose(self, v: f64, dv: f64, ddv: f64) -> Self {
        Jet2 {
            f: v,
            d1: dv * self.d1,
            d2: ddv * self.d1 * self.d1 + dv * self.d2,
        }
    }

    /// Composition where φ′ or φ″ may blow up at the current value; such
    /// points are a domain error unless self is locally constant.
    fn compose_guarded(
        self,
        name: &'static str,
        v: f64,
        dv: impl FnOnce() -> f64,
        ddv: impl FnOnce() -> f64,
    ) -> Result<Self, DomainError> {
        if self.is_constant() {
            return Ok(Jet2::new(v, 0.0, 0.0));
        }
        let (dv, ddv) = (dv(), ddv());
        if !(dv.is_finite() && ddv.is_finite()) {
            return Err(DomainError::new(name, self.f));
        }
        Ok(self.compose(v, dv, ddv))
    }
}

impl Add for Jet2 {
    type Output = Jet2;
    fn add(self, r: Jet2) -> Jet2 {
        Jet2::new(self.f + r.f, self.d1 + r.d1, self.d2 + r.d2)
    }
}

impl Sub for Jet2 {
    type Output = Jet2;
    fn sub(self, r: Jet2) -> Jet2 {
        Jet2::new(self.f - r.f, self.d1 - r.d1, self.d2 - r.d2)
    }
}

impl Mul for Jet2 {
    type Output = Jet2;
    fn mul(self, r: Jet2) -> Jet2 {
        Jet2::new(
            self.f * r.f,
            self.d1 * r.f + self.f * r.d1,
            self.d2 * r.f + 2.0 * self.d1 * r.d1 + self.f * r.d2,
        )
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2::new(-self.f, -self.d1, -self.d2)
    }
}

impl Scalar for Jet2 {
    fn constant(v: f64) -> Self {
        Jet2::new(v, 0.0, 0.0)
    }
    fn variable(t: f64) -> Self {
        Jet2::new(t, 1.0, 0.0)
    }
    fn value(&self) -> f64 {
        self.f
    }
    fn try_div(self, r: Self) -> Result<Self, DomainError> {
        if r.f == 0.0 {
            return Err(DomainError::new("div", r.f));
        }
        let q = self.f / r.f;
        let q1 = (self.d1 - q * r.d1) / r.f;
        let q2 = (self.d2 - 2.0 * q1 * r.d1 - q * r.d2) / r.f;
        Ok(Jet2::new(q, q1, q2))
    }
    fn sin(self) -> Self {
        let (s, c) = self.f.sin_cos();
        self.compose(s, c, -s)
    }
    fn cos(self) -> Self {
        let (s, c) = self.f.sin_cos();
        self.compose(c, -s, -c)
    }
    fn sinh(self) -> Self {
        let (s, c) = (self.f.sinh(), self.f.cosh());
        self.compose(s, c, s)
    }
    fn cosh(self) -> Self {
        let (s, c) = (self.f.sinh(), self.f.cosh());
        self.compose(c, s, c)
    }
    fn exp(self) -> Self {
        let e = self.f.exp();
        self.compose(e, e, e)
    }
    fn try_sqrt(self) -> Result<Self, DomainError> {
        if self.f < 0.0 {
            return Err(DomainError::new("sqrt", self.f));
        }
        let r = self.f.sqrt();
        self.compose_guarded("sqrt", r, || 0.5 / r, || -0.25 / (r * self.f))
    }
    fn try_ln(self) -> Result<Self, DomainError> {
        if self.f <= 0.0 {
            return Err(DomainError::new("log", self.f));
        }
        Ok(self.compose(self.f.ln(), 1.0 / self.f, -1.0 / (self.f * self.f)))
    }
    fn try_powi(self, n: i32) -> Result<Self, DomainError> {
        match n {
            0 => Ok(Jet2::constant(1.0)),
            1 => Ok(self),
            _ => {
                if n < 0 && self.f == 0.0 {
                    return Err(DomainError::new("pow", self.f));
                }
                let nf = f64::from(n);
                Ok(self.compose(
                    self.f.powi(n),
                    nf * self.f.powi(n - 1),
                    nf * (nf - 1.0) * self.f.powi(n - 2),
                ))
            }
        }
    }
    fn try_powf(self, p: f64) -> Result<Self, DomainError> {
        if self.f < 0.0 || (self.f == 0.0 && p < 0.0) {
            return Err(DomainError::new("pow", self.f));
        }
        let x = self.f;
        self.compose_guarded(
            "pow",
            x.powf(p),
            || p * x.powf(p - 1.0),
            || p * (p - 1.0) * x.powf(p - 2.0),
        )
    }
}

/// Evaluates an expression of t as a jet at `t`.
pub fn jet_chain(expr: &Expr, t: f64) -> Result<Jet2, DomainError> {
    expr.eval::<Jet2>(t)
}
