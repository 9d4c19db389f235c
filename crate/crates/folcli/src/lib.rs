//! Command-line front end for `folinv`.
//!
//! A run takes a [`JobSpec`] and produces a [`ReportDoc`]; the exit code
//! lives in the report. `0` means every check holds, `1` that some check
//! fails, `2` an input error and `3` a computation limit.

pub mod cli;
pub mod job;
pub mod report;
pub mod run;

pub use job::{ConfigOverrides, DivisorTerm, JobKind, JobSpec};
pub use report::{ReportDoc, VerdictStatus, EXIT_FAILED, EXIT_INPUT, EXIT_LIMIT, EXIT_OK};
pub use run::{run, run_with};

/// Problems with the job itself, reported with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("{field}: {message}")]
    Polynomial {
        field: String,
        source_text: String,
        offset: Option<usize>,
        message: String,
    },
    #[error("missing field {0}")]
    Missing(String),
    #[error("{field}: {message}")]
    Value { field: String, message: String },
    #[error("unknown check {0}")]
    UnknownCheck(String),
    #[error("job document: {0}")]
    Document(String),
    #[error("config file {path}: {message}")]
    Config { path: String, message: String },
}

impl InputError {
    pub(crate) fn polynomial(field: &str, src: &str, e: folinv::Error) -> Self {
        let offset = match &e {
            folinv::Error::Parse { offset, .. } => Some(*offset),
            _ => None,
        };
        InputError::Polynomial {
            field: field.to_string(),
            source_text: src.to_string(),
            offset,
            message: e.to_string(),
        }
    }

    pub fn field(&self) -> Option<&str> {
        match self {
            InputError::Polynomial { field, .. } | InputError::Value { field, .. } => Some(field),
            InputError::Missing(f) => Some(f),
            _ => None,
        }
    }

    /// The message, with the offending source and a caret under the
    /// position for parse errors.
    pub fn diagnostic(&self) -> String {
        match self {
            InputError::Polynomial {
                source_text,
                offset: Some(o),
                ..
            } => {
                let col = source_text[..(*o).min(source_text.len())].chars().count();
                format!("{self}\n  {source_text}\n  {}^", " ".repeat(col))
            }
            _ => self.to_string(),
        }
    }
}
