use crate::linking::TheoremViolation;

/// Crate-wide error type.
///
/// Degeneracies are errors, never tie-broken: every predicate that needs a
/// strict sign rejects a zero sign with [`Error::DegenerateInput`] so that
/// callers (in particular the sampler) can resample instead of silently
/// misclassifying a borderline configuration.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("general position violated by vertex quadruples {0:?}")]
    GeneralPosition(Vec<[u8; 4]>),

    #[error("unsupported link: {0}")]
    UnsupportedLink(String),

    #[error("no generic projection direction in the fixed schedule")]
    NoGenericDirection,

    #[error("vertex {0} is not inside the open hemisphere of the pole")]
    NotInHemisphere(u8),

    #[error("too many rejected draws for point slot {slot} ({attempts} attempts)")]
    TooManyRejects { slot: usize, attempts: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("expectation mismatch: {0}")]
    ExpectationMismatch(String),

    /// A census contradicted an invariant that holds for every straight-edge
    /// embedding. Carries the full embedding: it would be a counterexample.
    #[error("theorem violation: {0}")]
    TheoremViolation(Box<TheoremViolation>),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
