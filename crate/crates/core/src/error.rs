use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input document. `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A precondition of the called operation does not hold.
    #[error("contract violation: {0}")]
    Contract(String),

    /// The input is larger than an oracle-scale routine accepts.
    #[error("{what} exceeds the limit of {limit}{}", hint.map(|h| format!("; {h}")).unwrap_or_default())]
    Resource {
        what: &'static str,
        limit: usize,
        hint: Option<&'static str>,
    },

    /// A structural lemma about the construction failed on a concrete matching.
    #[error("falsified {lemma}: {detail}")]
    Falsified { lemma: &'static str, detail: String },

    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
