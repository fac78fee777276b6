use serde_json::{json, Value};
use thiserror::Error;

/// Everything the tool can fail with, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },

    /// The document is well formed but violates a law its kind requires.
    #[error("{law}: {message}")]
    Invariant {
        law: &'static str,
        message: String,
        witness: Value,
    },

    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl CliError {
    pub fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema {
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn invariant(law: &'static str, message: impl Into<String>, witness: Value) -> Self {
        CliError::Invariant {
            law,
            message: message.into(),
            witness,
        }
    }

    /// 1 for law violations, 2 for everything that stops a check from running.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invariant { .. } => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CliError::Io { path, message } => json!({"error": "io", "path": path, "message": message}),
            CliError::Syntax {
                line,
                column,
                message,
            } => json!({"error": "syntax", "line": line, "column": column, "message": message}),
            CliError::Schema { path, message } => json!({"error": "schema", "path": path, "message": message}),
            CliError::Invariant {
                law,
                message,
                witness,
            } => json!({"error": "invariant", "law": law, "message": message, "witness": witness}),
            CliError::Usage(message) => json!({"error": "usage", "message": message}),
        }
    }
}
