use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("p-adic valuation of zero is undefined")]
    UndefinedValuation,

    #[error("{value} is not divisible by {p}^{t}")]
    DivisibilityViolation { value: String, p: u32, t: u32 },

    #[error("{value} is not a {p}-adic integer (denominator divisible by {p})")]
    NotPAdicInteger { value: String, p: u32 },

    #[error("invalid modulus {p}^{e}: {reason}")]
    InvalidModulus { p: u32, e: u32, reason: &'static str },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("cache file {path}: {reason}")]
    CorruptCache { path: String, reason: String },

    #[error("cache mismatch: {0}")]
    CacheMismatch(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
