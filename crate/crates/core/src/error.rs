use thiserror::Error;

/// Errors raised by the analysis toolkit.
///
/// Input and precondition failures are distinguished from `Falsification`,
/// which signals that a result implied by the theory was contradicted by a
/// computation. The latter always indicates an implementation bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("complement graph is not chordal; chordless cycle {cycle:?}")]
    NotChordal { cycle: Vec<usize> },

    #[error("condition {condition} violated at (i, j, k) = {witness:?}")]
    ConditionViolated {
        condition: &'static str,
        witness: (usize, usize, usize),
    },

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("unsupported field characteristic {0}")]
    UnsupportedField(u64),

    #[error("falsification: {0}")]
    Falsification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors caused by the caller's data rather than by the toolkit.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::LengthMismatch { .. }
                | Error::InvalidInput(_)
                | Error::NotChordal { .. }
                | Error::ConditionViolated { .. }
                | Error::UnsupportedField(_)
        )
    }
}
