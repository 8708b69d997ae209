use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
#[non_exhaustive]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order exceeds the supported maximum 2^20")]
    FieldTooLarge,
    #[error("no built-in modulus for GF({p}^{m}); supply an irreducible polynomial")]
    MissingModulus { p: u64, m: usize },
    #[error("modulus must be monic of degree {expected} with coefficients below the characteristic")]
    BadModulus { expected: usize },
    #[error("modulus is reducible: divisible by {factor}")]
    ReducibleModulus { factor: String },
    #[error("elements belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{0} is not a power of the field characteristic")]
    NotCharPower(u64),
    #[error("invalid group: {0}")]
    Group(String),
    #[error("values belong to different ambient spaces")]
    AmbientMismatch,
    #[error("field order {order} is not {q}^2; the Hermitian form needs GF(q^2)")]
    HermitianOrder { q: u64, order: u64 },
    #[error("field order {0} is not a square; Hermitian mode needs GF(q^2)")]
    NonSquareOrder(u64),
    #[error("target vector is not in the sum of the subspaces")]
    NotInSum,
    #[error("subspaces intersect nontrivially; the decomposition is not unique")]
    NontrivialIntersection,
    #[error("enumeration of {needed} elements exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("the zero code has no nonzero codeword")]
    ZeroCode,
    #[error("the codes do not form a linear complementary pair")]
    NotLcp,
    #[error("both codes must be right ideals")]
    NotRightIdeals,
    #[error("both codes must be two-sided ideals")]
    NotTwoSided,
    #[error("split of unity failed verification: {0}")]
    SplitInvalid(String),
    #[error("the split idempotent is not central")]
    SplitNotCentral,
    #[error("pair verification failed: {0}")]
    PairVerificationFailed(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable code, one per error class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "E_NOT_PRIME",
            Error::BadDegree => "E_BAD_DEGREE",
            Error::NotPrimePower(_) => "E_NOT_PRIME_POWER",
            Error::FieldTooLarge => "E_FIELD_TOO_LARGE",
            Error::MissingModulus { .. } => "E_MISSING_MODULUS",
            Error::BadModulus { .. } => "E_BAD_MODULUS",
            Error::ReducibleModulus { .. } => "E_REDUCIBLE_MODULUS",
            Error::MixedFields => "E_MIXED_FIELDS",
            Error::ZeroInverse => "E_ZERO_INVERSE",
            Error::NotCharPower(_) => "E_NOT_CHAR_POWER",
            Error::Group(_) => "E_GROUP",
            Error::AmbientMismatch => "E_AMBIENT_MISMATCH",
            Error::HermitianOrder { .. } => "E_HERMITIAN_ORDER",
            Error::NonSquareOrder(_) => "E_NON_SQUARE_ORDER",
            Error::NotInSum => "E_NOT_IN_SUM",
            Error::NontrivialIntersection => "E_NONTRIVIAL_INTERSECTION",
            Error::BudgetExceeded { .. } => "E_BUDGET_EXCEEDED",
            Error::ZeroCode => "E_ZERO_CODE",
            Error::NotLcp => "E_NOT_LCP",
            Error::NotRightIdeals => "E_NOT_RIGHT_IDEALS",
            Error::NotTwoSided => "E_NOT_TWO_SIDED",
            Error::SplitInvalid(_) => "E_SPLIT_INVALID",
            Error::SplitNotCentral => "E_SPLIT_NOT_CENTRAL",
            Error::PairVerificationFailed(_) => "E_VERIFICATION_FAILED",
            Error::Parse { .. } => "E_PARSE",
            Error::Io(_) => "E_IO",
        }
    }
}
