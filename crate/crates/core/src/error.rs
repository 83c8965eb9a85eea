use thiserror::Error;

use crate::verdict::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("structure constants are not anticommutative at (e{}, e{})", .0 + 1, .1 + 1)]
    NotAnticommutative(usize, usize),

    #[error("twist map is degenerate")]
    DegenerateTwist,

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(Violation),

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("a rational eigenvalue is required but none exists ({0})")]
    FieldExtensionNeeded(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("not a representation: {0}")]
    NotARepresentation(Violation),

    #[error("representation is not multiplicative: {0}")]
    NotMultiplicative(Violation),

    #[error("representations are over different algebras")]
    BaseMismatch,

    #[error("not an alpha-derivation: {0}")]
    NotADerivation(Violation),

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("no distinguishing representation found within tensor bound {0}")]
    SearchExhausted(usize),

    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),

    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),

    #[error("twist does not satisfy the polynomial {0}")]
    PolynomialNotSatisfied(String),

    #[error("nilindex {nilindex} exceeds the class bound {class}")]
    NilindexExceeded { nilindex: usize, class: usize },

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}: bracket of {left} and {right} declared twice")]
    AntisymmetryConflict {
        line: usize,
        left: String,
        right: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI's JSON output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Singular => "singular",
            Error::DimensionMismatch(_) => "dimension-mismatch",
            Error::NotAnticommutative(..) => "not-anticommutative",
            Error::DegenerateTwist => "degenerate-twist",
            Error::NotAHomomorphism(_) => "not-a-homomorphism",
            Error::NotAnIdeal => "not-an-ideal",
            Error::NotNilpotent => "not-nilpotent",
            Error::FieldExtensionNeeded(_) => "field-extension-needed",
            Error::PreconditionFailed(_) => "precondition-failed",
            Error::NotARepresentation(_) => "not-a-representation",
            Error::NotMultiplicative(_) => "not-multiplicative",
            Error::BaseMismatch => "base-mismatch",
            Error::NotADerivation(_) => "not-a-derivation",
            Error::InvalidGrading(_) => "invalid-grading",
            Error::SearchExhausted(_) => "search-exhausted",
            Error::SizeLimitExceeded(_) => "size-limit-exceeded",
            Error::NotInvariant(_) => "not-invariant",
            Error::PolynomialNotSatisfied(_) => "polynomial-not-satisfied",
            Error::NilindexExceeded { .. } => "nilindex-exceeded",
            Error::Parse { .. } => "parse-error",
            Error::AntisymmetryConflict { .. } => "antisymmetry-conflict",
            Error::Io(_) => "io",
        }
    }
}
