use thiserror::Error;

/// Errors raised while building or validating algebraic objects.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },

    #[error("table has no two-sided identity element")]
    NoIdentity,

    #[error("element {0} has no two-sided inverse")]
    MissingInverse(usize),

    #[error("closure exceeded the bound of {0} elements")]
    ClosureBound(usize),

    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("homomorphism residual {residual:e} exceeds tolerance {tol:e}")]
    NotHomomorphism { residual: f64, tol: f64 },

    #[error("representation is reducible (commutant dimension {0})")]
    Reducible(usize),

    #[error("0-cochain is not invariant (residual {0:e})")]
    NotInvariant(f64),

    #[error("cochain is not a cocycle: Leibniz residual {0:e}")]
    NotCocycle(f64),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
