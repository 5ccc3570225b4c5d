//! A one-variable expression language for curve components.
//!
//! Grammar, loosest to tightest binding:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)*
//! exponent:= ['-'] integer | '(' ['-'] integer ['/' integer] ')'
//! primary := number | 't' | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'
//! func    := sin | cos | sinh | cosh | exp | sqrt | log
//! ```
//!
//! Angles are radians. Exponents are literals so every power has a closed-form
//! derivative.

mod ast;
mod curve;
mod parser;

pub use ast::{Exponent, Expr, Func, NamedConst};
pub use curve::{
    curve_eval, linspace, validate_director, Curve, CurveJet, CurveParseError, CurveSpec,
    DirectorReport,
};
pub use parser::{parse_expr, ParseError};
