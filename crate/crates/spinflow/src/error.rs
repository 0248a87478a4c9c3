//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpinError {
    #[error("dimension {0} outside supported range 1..=10")]
    UnsupportedDimension(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("frame index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("restriction requires odd ambient dimension, got {0}")]
    EvenDimension(usize),

    #[error("operation requires even dimension, got {0}")]
    OddDimension(usize),

    #[error("zero spinor rejected")]
    ZeroSpinor,

    #[error(
        "Jacobi identity violated: worst triple (e{i}, e{j}, e{k}) with residual {residual:.3e}"
    )]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: f64,
    },

    #[error("matrix is not an almost-complex structure (J²=-Id / orthogonality residual {0:.3e})")]
    InvalidAlmostComplex(f64),

    #[error("flow is not Riemannian (h|_Q symmetric part {0:.3e})")]
    NonRiemannianFlow(f64),

    #[error("spinor is not an eigenvector of the squared Dirac operator (residual {0:.3e})")]
    NotAnEigenspinor(f64),

    #[error("Ricci tensor does not fit the eta-Einstein pattern (residual {0:.3e})")]
    NotEtaEinstein(f64),

    #[error("spec parse error: {0}")]
    SpecParse(String),

    #[error("spec schema violation: {0}")]
    SpecSchema(String),

    #[error("spec semantic violation: {0}")]
    SpecSemantic(String),

    #[error("unknown format '{0}' (expected text or json)")]
    UnknownFormat(String),

    #[error("unknown manifold '{0}'; run `spinflow catalog` for the built-in list")]
    UnknownManifold(String),
}

pub type Result<T> = std::result::Result<T, SpinError>;
