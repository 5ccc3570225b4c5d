use std::fmt;

use crate::error::DomainError;
use crate::jet::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Sinh,
    Cosh,
    Exp,
    Sqrt,
    Log,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Exp => "exp",
            Func::Sqrt => "sqrt",
            Func::Log => "log",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "sinh" => Func::Sinh,
            "cosh" => Func::Cosh,
            "exp" => Func::Exp,
            "sqrt" => Func::Sqrt,
            "log" => Func::Log,
            _ => return None,
        })
    }

    fn apply<N: Scalar>(self, x: N) -> Result<N, DomainError> {
        match self {
            Func::Sin => Ok(x.sin()),
            Func::Cos => Ok(x.cos()),
            Func::Sinh => Ok(x.sinh()),
            Func::Cosh => Ok(x.cosh()),
            Func::Exp => Ok(x.exp()),
            Func::Sqrt => x.try_sqrt(),
            Func::Log => x.try_ln(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedConst {
    Pi,
    E,
}

impl NamedConst {
    pub fn value(self) -> f64 {
        match self {
            NamedConst::Pi => std::f64::consts::PI,
            NamedConst::E => std::f64::consts::E,
        }
    }
}

/// Literal exponent of `^`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exponent {
    Int(i32),
    /// numerator / denominator, denominator ≥ 2
    Ratio(i32, i32),
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Exponent::Int(n) if n < 0 => write!(f, "({n})"),
            Exponent::Int(n) => write!(f, "{n}"),
            Exponent::Ratio(p, q) => write!(f, "({p}/{q})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(f64),
    Named(NamedConst),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
    Call(Func, Box<Expr>),
}

impl Expr {
    pub fn eval<N: Scalar>(&self, t: f64) -> Result<N, DomainError> {
        self.eval_at(N::variable(t))
    }

    fn eval_at<N: Scalar>(&self, t: N) -> Result<N, DomainError> {
        Ok(match self {
            Expr::Const(v) => N::constant(*v),
            Expr::Named(c) => N::constant(c.value()),
            Expr::Var => t,
            Expr::Neg(a) => -a.eval_at(t)?,
            Expr::Add(a, b) => a.eval_at(t)? + b.eval_at(t)?,
            Expr::Sub(a, b) => a.eval_at(t)? - b.eval_at(t)?,
            Expr::Mul(a, b) => a.eval_at(t)? * b.eval_at(t)?,
            Expr::Div(a, b) => a.eval_at(t)?.try_div(b.eval_at(t)?)?,
            Expr::Pow(a, Exponent::Int(n)) => a.eval_at(t)?.try_powi(*n)?,
            Expr::Pow(a, Exponent::Ratio(p, q)) => {
                a.eval_at(t)?.try_powf(f64::from(*p) / f64::from(*q))?
            }
            Expr::Call(f, a) => f.apply(a.eval_at(t)?)?,
        })
    }
}

/// Fully parenthesised form that reparses to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(v) => write!(f, "{v:?}"),
            Expr::Named(NamedConst::Pi) => f.write_str("pi"),
            Expr::Named(NamedConst::E) => f.write_str("e"),
            Expr::Var => f.write_str("t"),
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, n) => write!(f, "({a}^{n})"),
            Expr::Call(func, a) => write!(f, "{}({a})", func.name()),
        }
    }
}
