//! Geometry of 2-ruled hypersurfaces in Minkowski 4-space.
//!
//! The crate is organised bottom-up:
//!
//! - [`lorentz`]: vectors of R⁴₁ with the signature (−,+,+,+) product and the
//!   ternary cross product.
//! - [`octonion`]: octonion multiplication generated from the index rules, and
//!   the star product of particular octonions.
//! - [`dual`] and [`jet`]: dual numbers, dual 4-vectors, and second-order jets
//!   used for exact derivatives of curve expressions.
//! - [`dsl`]: a small expression language for curve components.
//! - [`surface`]: construction of φ(x,y,z) = α(x) + yβ(x) + zγ(x) and its Gauss
//!   map, fundamental forms, curvatures and Laplace–Beltrami operator.
//! - [`construct`]: hypersurfaces built from particular octonions and from
//!   curves on the unit dual sphere.
//! - [`testkit`]: random instances and finite-difference oracles for tests.
//! - [`discrepancy`]: machine-readable records of computed values that differ
//!   from a published claim.

pub mod construct;
pub mod discrepancy;
pub mod dsl;
pub mod dual;
pub mod error;
pub mod jet;
pub mod linalg;
pub mod lorentz;
pub mod octonion;
pub mod surface;
pub mod testkit;
pub mod tolerance;

pub use error::{DomainError, GeometryError};
pub use lorentz::{CausalCharacter, ModelSpace, Vec4};
