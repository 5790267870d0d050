use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator `{0}` appears more than once")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("class has no invertible constant term")]
    NotAUnit,
    #[error("generator `{0}` has no image under the substitution")]
    UnmappedGenerator(String),
    #[error("monomial violates the ring truncation")]
    TruncatedMonomial,
    #[error("expected a homogeneous class of degree {expected}")]
    NotHomogeneous { expected: u32 },
    #[error("rank underflow: quotient of rank {total} by rank {sub}")]
    RankUnderflow { total: u32, sub: u32 },
    #[error("class contains exceptional symbol `{0}`")]
    ExceptionalSymbol(String),
    #[error("n = {0} is outside the supported range (need n >= 3)")]
    DimensionOutOfRange(u32),
    #[error("component index {0} is not one of 1, 2, 3")]
    BadComponent(usize),
    #[error("stage `{stage}` reintroduced the eliminated symbol `{symbol}`")]
    StageConsistency { stage: String, symbol: String },
    #[error("invalid degree range {from}..={to}")]
    InvalidRange { from: u32, to: u32 },
    #[error("n = {n} exceeds the resource cap {cap}")]
    ResourceCap { n: u32, cap: u32 },
    #[error("integrality failure: {0}")]
    Integrality(String),
    #[error("invalid form data: {0}")]
    InvalidForm(String),
    #[error("point is not in the base locus")]
    NotInBaseLocus,
    #[error("denominators did not clear: {0}")]
    NonClearing(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("Vandermonde dichotomy failed: {0}")]
    DichotomyFailure(String),
    #[error("parse error: {0}")]
    Parse(String),
}
