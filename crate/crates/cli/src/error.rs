use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] cremona_core::Error),

    #[error("entry {entry} exceeds the cap of {cap} (raise it with CREMONA_MAX_ENTRY)")]
    EntryCap { entry: u64, cap: u64 },

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }

    /// Machine-readable error code.
    pub fn code(&self) -> &'static str {
        use cremona_core::Error as E;
        match self {
            CliError::Usage(_) => "usage",
            CliError::EntryCap { .. } => "entry_cap",
            CliError::Io { .. } => "io_error",
            CliError::Internal(_) => "internal",
            CliError::Core(e) => match e {
                E::Parse { .. } | E::Shape(_) => "parse_error",
                E::Overflow(_) => "overflow",
                E::NotCremona(_) => "not_cremona",
                E::DegreeOutOfRange(..) => "degree_out_of_range",
                _ => "invalid_input",
            },
        }
    }

    /// 1 for bad input, 2 when the tool itself failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) | CliError::Core(cremona_core::Error::Overflow(_)) => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> ErrorJson {
        ErrorJson {
            error: self.code(),
            message: self.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorJson {
    pub error: &'static str,
    pub message: String,
}
