use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },

    #[error("{divisor} does not divide {modulus}")]
    NotADivisor { divisor: u64, modulus: u64 },

    #[error("orders ({m}, {n}, {l}) violate the pairwise lcm condition")]
    LcmCondition { m: u64, n: u64, l: u64 },

    #[error("invalid signature: {0}")]
    InvalidSignature(String),

    #[error("cannot parse signature {input:?}: {reason}")]
    SignatureSyntax { input: String, reason: String },

    #[error("invalid quotient parameters: {0}")]
    InvalidQuotient(String),

    #[error("index {order} does not give an integral algebraic genus for {signature}")]
    NonIntegralGenus { signature: String, order: u64 },

    #[error("inconsistent surface data: {0}")]
    InconsistentSurface(String),

    #[error("bsk map: {0}")]
    BadMap(String),

    #[error("order {order} exceeds the search bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },

    #[error("variant {variant} is undefined for N = {order}")]
    UndefinedVariant { variant: String, order: u64 },

    #[error("minimum genus {genus} at N = {order} is beyond the range where the catalog is complete")]
    CatalogInsufficient { order: u64, genus: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown {what}: {value:?}")]
    Unknown { what: &'static str, value: String },
}

pub type Result<T> = std::result::Result<T, Error>;
