use thiserror::Error;

/// Errors surfaced by the engine. Programmer contract violations
/// (mismatched dimensions, d^2 != 0 inputs) panic instead.
#[derive(Debug, Error)]
pub enum KhError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid diagram: {0}")]
    Invalid(String),

    #[error("crossing count {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl KhError {
    /// Process exit code per the CLI contract: 1 validation, 2 resource cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            KhError::CapExceeded { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, KhError>;
