use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field GF({p}^{t}) exceeds the size cap {cap}")]
    FieldCapExceeded { p: u64, t: u32, cap: u64 },
    #[error("enumerating {needed} messages exceeds the cap {cap}")]
    EnumCapExceeded { needed: u128, cap: u64 },
    #[error("length {n} exceeds the search cap {cap}")]
    LengthCapExceeded { n: usize, cap: usize },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("GF({size}) contains no element of order {n}")]
    NoRootOfUnity { n: u64, size: u64 },
    #[error("no embedding of GF({src_p}^{src_t}) into GF({dst_p}^{dst_t})")]
    IncompatibleFields {
        src_p: u64,
        src_t: u32,
        dst_p: u64,
        dst_t: u32,
    },
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("division by the zero polynomial")]
    ZeroPolyDivision,
    #[error("power series requires a denominator with nonzero constant term")]
    SingularSeries,
    #[error("defining set is empty")]
    EmptyDefiningSet,
    #[error("defining set contains every residue, so the code is zero")]
    FullDefiningSet,
    #[error("defining set is not closed under multiplication by {q}")]
    NotClosed { q: u64 },
    #[error("message degree {degree} does not fit dimension {k}")]
    DegreeTooLarge { degree: usize, k: usize },
    #[error("Reed-Solomon length {n_l} does not divide {q_l} - 1")]
    RsLength { q_l: u64, n_l: usize },
    #[error("invalid locator: {0}")]
    LocatorInvalid(String),
    #[error("pattern self-overlaps modulo {n}")]
    PatternCollision { n: usize },
    #[error("coverage never fails, the bound is vacuous")]
    DegenerateCoverage,
    #[error("no admissible locator candidates")]
    EmptySearchConfig,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}
