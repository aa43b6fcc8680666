//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Structurally broken input file (header, encoding, emptiness).
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Station files with mismatched station identity were merged.
    #[error("station mismatch: expected '{expected}', found '{found}'")]
    StationMismatch { expected: String, found: String },

    #[error("empty input: {0}")]
    EmptyInput(String),

    /// Instant outside the supported ephemeris range (1950-2100).
    #[error("date out of supported range: {0}")]
    Date(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Forward cache does not belong to the parameters passed to backward.
    #[error("stale forward cache: {0}")]
    Cache(String),

    #[error("non-finite gradient encountered ({0})")]
    NonFiniteGradient(String),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    /// Training aborted after repeated non-finite gradients.
    #[error("training diverged: {0}")]
    Diverged(String),

    /// A feature channel has no observed values in the training split.
    #[error("channel unusable: {0}")]
    ChannelUnusable(String),

    /// A feature with zero scale cannot be normalized.
    #[error("degenerate feature '{0}': zero scale")]
    DegenerateFeature(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("requested year {0} absent from table")]
    MissingYear(i32),

    #[error("checkpoint checksum mismatch or truncated file")]
    Checksum,

    #[error("checkpoint version mismatch: found {found}, supported {supported}")]
    Version { found: u32, supported: u32 },

    /// Inference input does not match the model's feature schema.
    #[error("schema mismatch: {0}")]
    Schema(String),

    #[error("report error: missing checkpoints for sites: {0:?}")]
    Report(Vec<String>),

    #[error("configuration error for key '{key}': {message}")]
    Config { key: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn config(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            key: key.into(),
            message: message.into(),
        }
    }
}
