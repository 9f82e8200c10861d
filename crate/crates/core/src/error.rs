use thiserror::Error;

/// Errors produced by the geometry, triangulation and polynomial routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("point set does not span the plane: {0}")]
    Dimension(String),

    #[error("coordinate {0} exceeds the lattice coordinate limit")]
    CoordinateLimit(i64),

    #[error("invalid triangulation: {}", .0.join("; "))]
    InvalidTriangulation(Vec<String>),

    /// The dual graph has an odd cycle; carries the triangle indices of one.
    #[error("triangulation is not foldable (odd dual cycle through triangles {0:?})")]
    NotFoldable(Vec<usize>),

    #[error("triangulation is not dense: {0}")]
    NotDense(String),

    #[error("polygon has {count} lattice points, enumeration limit is {limit}")]
    TooLarge { count: usize, limit: usize },

    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(String),

    #[error("non-generic system: {0}")]
    NonGeneric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
