use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("expected {expected} exponents, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("objects live in different rings")]
    RingMismatch,
    #[error("polynomial is not homogeneous: monomial degrees {0:?}")]
    NotHomogeneous(Vec<u64>),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("automorphism is not upper triangular (not in T)")]
    NotInT,
    #[error("genericity failure, retry with new seed: {0}")]
    GenericityFailure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no avoiding form exists: {0}")]
    NoAvoidingForm(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("frobenius number undefined: weights have gcd {0}")]
    FrobeniusUndefined(u64),
    #[error("lexsegment size {k} exceeds the {available} monomials of degree {degree}")]
    SegmentTooLarge { degree: u64, k: usize, available: usize },
    #[error("monomials of mixed degrees")]
    MixedDegrees,
    #[error("did not converge after {0} rounds")]
    NoConvergence(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
