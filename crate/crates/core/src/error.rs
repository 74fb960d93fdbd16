use thiserror::Error;

/// Errors raised by the geometry kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate lattice: basis matrix is singular")]
    DegenerateLattice,
    #[error("vector ({0}, {1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(i128),
    #[error("integer overflow")]
    Overflow,
    #[error("degenerate hull: points do not span the plane")]
    DegenerateHull,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
    #[error("polygon is not free of lattice points")]
    NotLatticeFree,
    #[error("invalid slope: edge {edge} violates {condition}")]
    InvalidSlope {
        edge: usize,
        condition: &'static str,
    },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("classification failure: {0}")]
    ClassificationFailure(&'static str),
    #[error("invalid invariant factors (delta = {delta}, n = {n})")]
    InvalidFactors { delta: i64, n: i64 },
    #[error("no extremal polygon exists when nu = {0}")]
    NoExtremalPolygon(i64),
    #[error("internal contradiction: {0}")]
    Contradiction(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
