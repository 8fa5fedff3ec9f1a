use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or analyzing a code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),

    #[error("no primitive {l}-th root of unity in F_{p}: l does not divide p-1")]
    NoRootOfUnity { p: u32, l: u32 },

    #[error("{value} does not have multiplicative order {l} in F_{p}")]
    InvalidOmega { p: u32, l: u32, value: u32 },

    #[error("length factor l={l} must be positive and coprime to p={p}")]
    LengthNotCoprime { p: u32, l: u32 },

    #[error("factor {factor} does not divide x^{l}-1 over F_{p}")]
    FactorNotDividing { p: u32, l: u32, factor: String },

    #[error("generator factors are not pairwise coprime (repeated root among {0})")]
    FactorsNotCoprime(String),

    #[error("malformed factor: {0}")]
    MalformedFactor(String),

    #[error("multiplicity {mult} of factor {factor} exceeds the bound {bound}")]
    MultiplicityTooLarge { factor: String, mult: u32, bound: u32 },

    #[error("generator does not divide x^{n}-1")]
    GeneratorNotDivisor { n: usize },

    #[error("generator has degree {deg} >= n={n}: the code is zero-dimensional")]
    ZeroDimensional { n: usize, deg: usize },

    #[error("expected a vector of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("pair reads need length at least 2, got {0}")]
    TooShort(usize),

    #[error("support position {position} out of range for length {n}")]
    SupportOutOfRange { n: usize, position: usize },

    #[error("enumeration of {count} {what} exceeds the cap {cap}")]
    EnumerationTooLarge { what: &'static str, count: u128, cap: u64 },

    #[error("Singleton-type bound violated: d_p={d_p} > n-k+2={bound}")]
    SingletonViolation { d_p: usize, bound: usize },

    #[error("Hamming distance engines disagree: Castagnoli gives {castagnoli}, support search gives {support}")]
    InconsistentHammingDistance { castagnoli: usize, support: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("invalid parameters for {family}: {reason}")]
    FamilyConstraint { family: &'static str, reason: String },

    #[error("export failed: {0}")]
    Export(String),

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
