use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the set on which the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical method was configured in a way that cannot converge.
    #[error("configuration error: {0}")]
    Config(String),

    /// A grid is too coarse for the data sampled on it.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// An explicit time stepper was asked to take an unstable step.
    #[error("stability error: {0}")]
    Stability(String),

    #[error("grid specs do not match")]
    GridMismatch,

    #[error("unknown claim '{0}'")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
