use thiserror::Error;

/// Errors surfaced by the construction and verification operations.
///
/// `Usage` marks a caller mistake (mismatched scenario data, empty inputs).
/// `Capability` marks a request the supported group/space families cannot
/// answer exactly; the message names the fallback when one exists.
/// `Budget` and `Inconclusive` carry the configured cap so reports can
/// record why a sweep stopped.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("usage: {0}")]
    Usage(String),

    #[error("capability: {0}")]
    Capability(String),

    #[error("budget exceeded while {what} (limit {limit})")]
    Budget { what: String, limit: u64 },

    #[error("inconclusive after {visited} states: {what}")]
    Inconclusive { what: String, visited: u64 },

    #[error("verification failed: {check}: {witness}")]
    Verification { check: String, witness: String },

    #[error("step {step}: {source}")]
    Step {
        step: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub fn budget(what: impl Into<String>, limit: u64) -> Self {
        Error::Budget {
            what: what.into(),
            limit,
        }
    }

    pub fn verification(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Verification {
            check: check.into(),
            witness: witness.into(),
        }
    }

    /// Tag an error with the pipeline step it came from.
    pub fn in_step(self, step: &str) -> Self {
        Error::Step {
            step: step.to_string(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
