use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vector must have at least one entry")]
    EmptyVector,

    #[error("all coefficients are zero; the gradient vanishes")]
    ZeroGradient,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension {0} exceeds the supported maximum of {max}", max = crate::linear::MAX_DIMENSION)]
    DimensionTooLarge(usize),

    #[error("non-finite value in input")]
    NonFinite,

    #[error("radius must be positive, got {0}")]
    NonpositiveRadius(f64),

    #[error("cannot normalize the zero vector")]
    ZeroVector,

    #[error("entry {index} is not positive ({value})")]
    NonpositiveEntry { index: usize, value: f64 },

    #[error("product level {0} is not supported; reduce to a unit product first")]
    UnsupportedLevel(f64),

    #[error("leading coefficient of the cubic is zero")]
    DegenerateLeadingCoefficient,

    #[error("no point of the surface xyz = 1 above base point ({x}, {y})")]
    NoSurfacePoint { x: f64, y: f64 },

    #[error("matrix is not symmetric (off-diagonal entries {0} and {1})")]
    AsymmetricInput(f64, f64),

    #[error("dimension {0} is not supported here")]
    UnsupportedDimension(usize),

    #[error("box half-width must be at least 1, got {0}")]
    InvalidBox(f64),

    #[error("at least {min} samples required, got {got}")]
    TooFewSamples { min: usize, got: usize },
}
