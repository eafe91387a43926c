use thiserror::Error;

/// Errors produced by machine construction, simulation and analysis.
#[derive(Debug, Error)]
pub enum Error {
    #[error("symbol {0:?} is not in the alphabet")]
    SymbolNotInAlphabet(char),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("invalid machine: {0}")]
    InvalidMachine(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("alphabet mismatch: machine uses {machine:?}, problem uses {problem:?}")]
    AlphabetMismatch { machine: String, problem: String },

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        needed: String,
        cap: String,
    },

    #[error("divergence: {0}")]
    Divergence(String),

    #[error("malformed input: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn cap(what: &'static str, needed: impl ToString, cap: impl ToString) -> Self {
        Error::ResourceCap {
            what,
            needed: needed.to_string(),
            cap: cap.to_string(),
        }
    }

    /// True for errors caused by exceeding a configured resource limit.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
