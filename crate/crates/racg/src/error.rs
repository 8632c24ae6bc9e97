//! Error taxonomy shared by every module.
//!
//! Three kinds: malformed input (unknown vertices, unparsable files, bad
//! parameters), domain violations (preconditions that depend on computed
//! facts, like a reflection not lying in the requested parabolic), and
//! resource budgets (enumerations that would exceed their configured caps).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: unknown vertex names, bad parameters, parse failures.
    #[error("input error: {0}")]
    Input(String),

    /// A precondition on computed group/graph facts does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration hit its configured budget before finishing.
    #[error("resource budget exceeded: {0}")]
    Resource(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    /// Process exit code for the CLI: input errors are usage-class (2),
    /// everything else is a plain failure (1).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
