//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Shapes or lengths of the inputs do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// A matrix that must be unitary fails the check.
    #[error("non-unitary: {0}")]
    NonUnitary(String),

    /// Two members of a supposedly commuting family do not commute.
    #[error("matrices {i} and {j} do not commute (commutator max-norm {norm:.3e})")]
    Commutation { i: usize, j: usize, norm: f64 },

    /// An iterative numerical procedure failed to reach its tolerance.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A gate-spec document could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A parsed or constructed object violates a model invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// The requested protocol is not available for this gate.
    #[error("protocol unavailable: {0}")]
    ProtocolUnavailable(String),

    /// Two internal routes that must agree disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
