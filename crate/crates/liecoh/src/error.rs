//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {degree} out of range for algebra of dimension {dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },

    #[error("subspace is not an ideal: [e_{i}, v_{j}] leaves the subspace")]
    NotAnIdeal { i: usize, j: usize },

    #[error("subspace is not closed under the bracket: [v_{i}, v_{j}] leaves it")]
    NotClosed { i: usize, j: usize },

    #[error("representations live over different algebras")]
    AlgebraMismatch,

    #[error("element does not lie in the expected ambient algebra")]
    AmbientMismatch,

    #[error("cochain is not a cocycle: d omega != 0")]
    NotACocycle,

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal assertion violated: {0}")]
    InternalAssertion(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code the CLI maps this error to: 1 for bad input, 2 for a broken
    /// internal contract.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InternalAssertion(_) => 2,
            _ => 1,
        }
    }
}
