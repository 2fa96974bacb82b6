use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("invalid dimension {0}: transforms need n >= 2")]
    DimensionTooSmall(usize),

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("invalid Stiefel tuple: {0}")]
    InvalidTuple(String),

    #[error("contract violation: {message} (residual {residual:e})")]
    Contract { message: String, residual: f64 },

    #[error("singular kernel: denominator {0:e} vanishes")]
    SingularKernel(f64),

    #[error("pole: {0}")]
    Pole(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn contract(message: impl Into<String>, residual: f64) -> Self {
        Error::Contract {
            message: message.into(),
            residual,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
