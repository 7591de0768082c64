use thiserror::Error;

/// Which side of a tensor inverse could not be found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InverseFailure {
    /// No `u` with `t ∘ u = 1⊗1`.
    NoRightInverse,
    /// A right inverse exists but none of them is also a left inverse.
    OneSided,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("invalid algebra definition: {0}")]
    InvalidAlgebra(String),

    #[error("expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("quaternion parameters must satisfy a*b != 0")]
    DegenerateParams,

    #[error("operation is only defined for the built-in algebras")]
    UnsupportedAlgebra,

    #[error("element has zero norm")]
    ZeroNorm,

    #[error("rotation argument must have zero scalar part")]
    NotPureVector,

    #[error("tensor product needs at least one factor")]
    EmptyFactorList,

    #[error("tensor is singular: {0:?}")]
    SingularTensor(InverseFailure),

    #[error("linear map is not in the image of the standard representation (rank {rank_b} vs augmented {rank_augmented})")]
    NotRepresentable { rank_b: usize, rank_augmented: usize },

    #[error("algebra has no unit")]
    NoUnit,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("system is singular (rank {rank} < {size})")]
    SingularSystem { rank: usize, size: usize },

    #[error("minor with rows {rows:?} and columns {cols:?} is singular")]
    MinorSingular { rows: Vec<usize>, cols: Vec<usize> },

    #[error("entry ({row}, {col}) is not invertible")]
    NonInvertibleEntry { row: usize, col: usize },

    #[error("substitution check failed for equation {equation}")]
    SubstitutionCheckFailed { equation: usize },

    #[error("additive map is singular")]
    SingularMap,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
