use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree m={0} outside supported range 2..=16")]
    DegreeOutOfRange(u32),
    #[error("polynomial {0} is not primitive for the requested degree")]
    NotPrimitive(String),
    #[error("zero polynomial where a nonzero polynomial is required")]
    ZeroPolynomial,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("enumeration budget exceeded: need {required}, budget {budget}")]
    Budget { required: u128, budget: u128 },
    #[error("missing simulation cell (w_q={wq}, w_s={ws})")]
    MissingCell { wq: usize, ws: usize },
}

pub(crate) fn dim(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}
