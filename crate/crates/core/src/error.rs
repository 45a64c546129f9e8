use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty node")]
    EmptyNode,

    #[error("empty dataset")]
    EmptyDataset,

    #[error("dataset has no observed events")]
    NoEvents,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("non-finite weight from censoring model at t={time}")]
    NonFiniteWeight { time: f64 },

    #[error("contaminated hazard undefined beyond tau")]
    OracleDenominator,

    #[error("csv error at line {line}: {msg}")]
    Csv { line: u64, msg: String },

    #[error("model version mismatch: expected {expected}, found {found}")]
    VersionMismatch { expected: u32, found: u32 },

    #[error("invalid model document: {0}")]
    InvalidModel(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable process exit code for the CLI, one per error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidConfig(_) => 2,
            Error::Io(_) => 3,
            Error::Csv { .. } | Error::InvalidInput(_) => 4,
            Error::EmptyNode | Error::EmptyDataset | Error::NoEvents => 5,
            Error::DimensionMismatch { .. } => 6,
            Error::VersionMismatch { .. } => 7,
            Error::InvalidModel(_) | Error::Json(_) => 8,
            Error::NonFiniteWeight { .. } | Error::OracleDenominator => 9,
        }
    }
}
