//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Configuration file / override problem; `key` is `section.name`.
    #[error("configuration error at `{key}`: {message}")]
    Config { key: String, message: String },

    /// A linear or eigenvalue solver failed or did not converge.
    #[error("solver failure: {0}")]
    Solver(String),

    /// A shifted solve hit a (near-)singular system, i.e. the shift sits on
    /// or too close to the spectrum.
    #[error("spectral collision near lambda = {lambda_re}{lambda_im:+}i: {message}")]
    SpectralCollision {
        lambda_re: f64,
        lambda_im: f64,
        message: String,
    },

    /// A time step could not be completed.
    #[error("step failed at t = {t}: {message}")]
    Step { t: f64, message: String },

    /// Energy grew past the divergence guard; the run was halted.
    #[error("blow-up suspected at t = {t}: energy grew by factor {growth:.3e}")]
    BlowUpSuspected { t: f64, growth: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn solver(msg: impl Into<String>) -> Self {
        Error::Solver(msg.into())
    }

    pub fn config(key: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Config {
            key: key.into(),
            message: msg.into(),
        }
    }

    /// Process exit code used by the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) | Error::Config { .. } => 2,
            Error::BlowUpSuspected { .. } => 4,
            _ => 3,
        }
    }
}
