//! Command-line front end, file formats and the shipped catalog for
//! [`mirext_core`].
//!
//! Every command produces an [`envelope::Envelope`]. With `--json` the
//! envelope goes to stdout and the human-readable rendering to stderr;
//! otherwise only the rendering is printed, on stdout.

pub mod catalog_file;
pub mod cli;
pub mod envelope;
pub mod files;
pub mod reproduce;

pub use cli::run;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const CHECK_FAILURE: i32 = 1;
    pub const HYPOTHESIS: i32 = 2;
    pub const PRECISION: i32 = 3;
    /// `EX_USAGE` from sysexits.
    pub const USAGE: i32 = 64;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] mirext_core::Error),
    #[error("usage: {0}")]
    Usage(String),
    /// Unreadable or malformed input file.
    #[error("input: {0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use mirext_core::Error as E;
        match self {
            CliError::Core(E::HypothesisViolation(_) | E::Irreducibility(_)) => exit::HYPOTHESIS,
            CliError::Core(E::Precision { .. }) => exit::PRECISION,
            CliError::Core(E::InvalidArgument(_)) | CliError::Usage(_) | CliError::Input(_) => exit::USAGE,
            CliError::Core(_) => exit::CHECK_FAILURE,
        }
    }

    pub fn kind(&self) -> &'static str {
        use mirext_core::Error as E;
        match self {
            CliError::Core(E::InvalidArgument(_)) => "invalid_argument",
            CliError::Core(E::Precision { .. }) => "precision",
            CliError::Core(E::Scale { .. }) => "scale",
            CliError::Core(E::PairingAmbiguity { .. }) => "pairing_ambiguity",
            CliError::Core(E::HypothesisViolation(_)) => "hypothesis_violation",
            CliError::Core(E::Irreducibility(_)) => "irreducibility",
            CliError::Core(E::Search(_)) => "search",
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mirext_core::Error;

    #[test]
    fn exit_codes() {
        let code = |e: Error| CliError::Core(e).exit_code();
        assert_eq!(code(Error::HypothesisViolation("x".into())), exit::HYPOTHESIS);
        assert_eq!(code(Error::Irreducibility("x".into())), exit::HYPOTHESIS);
        assert_eq!(
            code(Error::Precision {
                precision_bits: 53,
                detail: "x".into()
            }),
            exit::PRECISION
        );
        assert_eq!(code(Error::InvalidArgument("x".into())), exit::USAGE);
        assert_eq!(code(Error::Search("x".into())), exit::CHECK_FAILURE);
        assert_eq!(CliError::Usage("x".into()).exit_code(), exit::USAGE);
    }
}
