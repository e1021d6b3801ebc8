use thiserror::Error;

/// Errors produced by the library.
///
/// Guard limits are reported with the name of the guard that tripped so
/// callers can raise it (see [`crate::guards::Guards`]).
#[derive(Debug, Error)]
pub enum Error {
    #[error("guard exceeded: {what} = {actual} is over the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid polyhedron: {0}")]
    InvalidPolyhedron(String),

    #[error("not an exact covering matrix: {0}")]
    NotExactCovering(String),

    #[error("missing parameter `{0}`")]
    MissingParameter(&'static str),

    #[error("inconsistent enumerator: counts sum to {sum}, expected 2^{k}")]
    InconsistentEnumerator { sum: u64, k: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
