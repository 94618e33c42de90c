use thiserror::Error;

/// Errors raised by the algebra kernels and the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("polynomials live in rings of different sizes ({left} vs {right})")]
    RingMismatch { left: usize, right: usize },
    #[error("input must be a nonzero, nonconstant polynomial")]
    ZeroOrConstantInput,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not weighted homogeneous; occurring weighted degrees {degrees:?}")]
    NotHomogeneous { degrees: Vec<i64> },
    #[error("input is not homogeneous for the requested grading")]
    NotHomogeneousInput,
    #[error("divisor equation is not weighted homogeneous for positive weights")]
    NotWeightedHomogeneous,
    #[error("weighted degree is zero")]
    ZeroDegree,
    #[error("all variable weights must be positive")]
    NonPositiveWeights,
    #[error("divisor is not reduced (squarefree)")]
    NonReduced,
    #[error("divisor is not free at the origin: {0}")]
    NotFree(String),
    #[error("divisor is not a linear free divisor")]
    NotLinear,
    #[error("computation budget exhausted")]
    Timeout,
    #[error("shape error: {0}")]
    Shape(String),
    #[error("graded slice exceeds the safety bound: {0}")]
    SliceTooLarge(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Parse(#[from] crate::poly::ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable identifier used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::RingMismatch { .. } => "RingMismatch",
            Error::ZeroOrConstantInput => "ZeroOrConstantInput",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotHomogeneous { .. } => "NotHomogeneous",
            Error::NotHomogeneousInput => "NotHomogeneousInput",
            Error::NotWeightedHomogeneous => "NotWeightedHomogeneous",
            Error::ZeroDegree => "ZeroDegree",
            Error::NonPositiveWeights => "NonPositiveWeights",
            Error::NonReduced => "NonReduced",
            Error::NotFree(_) => "NotFree",
            Error::NotLinear => "NotLinear",
            Error::Timeout => "Timeout",
            Error::Shape(_) => "Shape",
            Error::SliceTooLarge(_) => "SliceTooLarge",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::Precondition(_) => "Precondition",
            Error::Parse(_) => "Parse",
        }
    }
}
