//! Named tolerances. Every threshold used by validation and consistency
//! checks lives here.

/// Membership tests on quadratic forms (model spaces, unit checks).
pub const MEMBERSHIP: f64 = 1e-9;

/// Director-curve validation and hypothesis checks.
pub const CONSTRUCTION: f64 = 1e-9;

/// A Gauss map is undefined when the cross-product norm falls to this level.
pub const DEGENERATE_NORMAL: f64 = 1e-12;

/// Relative level at which ⟨N,N⟩ is treated as lightlike against the
/// Euclidean size of N.
pub const LIGHTLIKE_RELATIVE: f64 = 1e-12;

/// Metric determinants below this magnitude are singular.
pub const SINGULAR_METRIC: f64 = 1e-12;

/// Relative agreement between two algebraic routes to the same quantity.
pub const CONSISTENCY_RELATIVE: f64 = 1e-10;

/// Orthogonality |e| below which the orthogonal-director corollaries apply.
pub const ORTHOGONAL_DIRECTORS: f64 = 1e-9;

/// Mean curvature below which a point counts as minimal.
pub const MINIMAL: f64 = 1e-9;

/// Flatness bound on |K|.
pub const FLAT: f64 = 1e-9;

/// Step and relative bound for first-derivative finite-difference oracles.
pub const FD_STEP: f64 = 1e-5;
pub const FD_FIRST_RELATIVE: f64 = 1e-6;

/// Base step (Richardson pair h, h/2) and absolute bound for the nested
/// Laplace–Beltrami oracle.
pub const FD_LB_STEP: f64 = 1e-3;
pub const FD_LB_ABSOLUTE: f64 = 1e-4;

/// Relative error with a zero-safe denominator.
pub fn relative_error(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
