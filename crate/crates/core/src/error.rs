use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2")]
    ModulusTooSmall,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("value is not invertible modulo the given modulus")]
    NotInvertible,
    #[error("the Legendre symbol needs an odd modulus")]
    EvenModulus,
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("field characteristic must be odd")]
    EvenCharacteristic,
    #[error("field characteristic must be at least 3")]
    CharTooSmall,
    #[error("modulus polynomial is not monic")]
    NotMonic,
    #[error("modulus polynomial is reducible")]
    NotIrreducible,
    #[error("coefficient {0} is not reduced modulo the characteristic")]
    CoefficientOutOfRange(String),
    #[error("field order does not fit the scalar type")]
    ScalarOverflow,
    #[error("element does not belong to this field")]
    CtxMismatch,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("expected {expected} coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("gave up after {0} random trials")]
    TrialBudgetExceeded(u64),

    #[error("r does not divide q - 1")]
    RDoesNotDivide,
    #[error("operation is undefined for the zero element")]
    ZeroElement,
    #[error("r must be prime")]
    RNotPrime,
    #[error("element is not in the subgroup generated by the base")]
    NotInSubgroup,

    #[error("not a residue")]
    NotAResidue,
    #[error("composite exponent sharing a factor with q - 1 is unsupported")]
    UnsupportedExponent,
    #[error("computed root failed verification")]
    InternalVerificationFailed,

    #[error("field of order {0} exceeds the enumeration bound")]
    FieldTooLarge(String),
}
