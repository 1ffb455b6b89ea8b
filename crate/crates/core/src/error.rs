use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything the library can reject.
///
/// The variants fall into two classes that the CLI maps onto distinct exit
/// statuses: scenario problems (malformed or invalid input files) and domain
/// problems (a request outside the model's feasible region).
#[derive(Debug, Error)]
pub enum Error {
    #[error("{field}: {message}")]
    Domain {
        field: &'static str,
        message: String,
    },

    #[error("invalid value for `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("scenario parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown key in scenario: {message}")]
    UnknownKey { message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(field: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            field,
            message: message.into(),
        }
    }

    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Process exit status for this error class.
    ///
    /// `2` is reserved for usage errors (emitted by the argument parser),
    /// `3` covers every scenario problem and `4` domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain { .. } => 4,
            Error::Validation { .. }
            | Error::Parse { .. }
            | Error::UnknownKey { .. }
            | Error::Io { .. } => 3,
        }
    }
}
