use thiserror::Error;

/// Errors raised by the library. Empty solution sets are values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),

    /// A construction produced something that contradicts a structural fact
    /// it relies on (for example a vanishing bracket that must be nonzero).
    #[error("structural failure: {0}")]
    Structural(String),

    /// The Jacobi identity fails on the named basis triple.
    #[error("Jacobi identity violated on ({0}, {1}, {2})")]
    Jacobi(String, String, String),

    /// An sl2 projection was requested onto a component whose multiplicity
    /// is not one.
    #[error("highest weight {weight} has multiplicity {multiplicity}, expected 1")]
    Multiplicity { weight: i64, multiplicity: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
