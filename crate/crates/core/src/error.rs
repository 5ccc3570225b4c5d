use thiserror::Error;

/// An elementary function was evaluated outside its domain.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("domain error: {function} at {value}")]
pub struct DomainError {
    pub function: &'static str,
    pub value: f64,
}

impl DomainError {
    pub fn new(function: &'static str, value: f64) -> Self {
        Self { function, value }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error(transparent)]
    Domain(#[from] DomainError),

    #[error("degenerate normal at ({x}, {y}, {z}): |N| = {norm:e}")]
    DegenerateNormal { x: f64, y: f64, z: f64, norm: f64 },

    #[error("singular metric: det g = {det:e}")]
    SingularMetric { det: f64 },

    #[error("director constraint violated: {0}")]
    DirectorConstraintViolated(String),

    #[error("I must satisfy |<I,I>| = 1, got <I,I> = {0}")]
    NonUnitI(f64),

    #[error("non-finite vector component")]
    NonFinite,
}
