use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A numerical self-check failed; the computation should be retried at a
    /// higher working precision.
    #[error("precision loss at {precision_bits} bits: {detail}; retry with a higher --precision")]
    Precision { precision_bits: u32, detail: String },

    #[error("{sectors} sectors exceeds the configured limit of {limit}")]
    Scale { sectors: usize, limit: usize },

    #[error("pairing ambiguity for weight {weight:?}: {candidates} integral candidates")]
    PairingAmbiguity { weight: Vec<u32>, candidates: usize },

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("irreducibility violation: {0}")]
    Irreducibility(String),

    #[error("search failed: {0}")]
    Search(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
