use thiserror::Error;

/// Errors surfaced by the operator algebra and the orbit machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parameters (p, q) must satisfy p*q != 1")]
    InvalidPQ,
    #[error("parameter map is singular at this point")]
    SingularParameter,
    #[error("operator is not invertible: eta * eta' = 0")]
    NotInvertible,
    #[error("operator coefficients must sum to 1")]
    CoefficientSum,
    #[error("degenerate triangle input")]
    DegenerateInput,
    #[error("triple collision: all three vertices coincide")]
    TripleCollision,
    #[error("side vectors are inconsistent: triples are not concentroid")]
    InconsistentSystem,
    #[error("sample grid size must be a multiple of 3")]
    GridNotDivisibleBy3,
    #[error("shape multiplier has a pole at s = rho")]
    PoleAtRho,
    #[error("invalid shape curve: {0}")]
    BadGamma(String),
    #[error("invalid gauge function: {0}")]
    BadGauge(String),
    #[error("invalid median label {0:?}: expected \"wx/yz\" with digits mod 3 and y != z")]
    InvalidLabel(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown figure {0:?}")]
    UnknownFigure(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
