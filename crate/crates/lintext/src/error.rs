//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("corpus line {line}: {message}")]
    CorpusFormat { line: usize, message: String },

    #[error("corpus line {line}: missing required field `{field}`")]
    MissingField { line: usize, field: String },

    #[error("duplicate document id `{0}`")]
    DuplicateId(String),

    #[error("unknown document id `{0}`")]
    UnknownDocId(String),

    #[error("dictionary `{0}` contains no terms")]
    EmptyDictionary(String),

    #[error("negative count for document id `{0}`")]
    NegativeCount(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vocabulary n-gram mode mismatch: vocabulary is {vocab}, request is {requested}")]
    NgramMismatch { vocab: String, requested: String },

    #[error("{what} did not converge within {cap} iterations")]
    NonConvergence { what: String, cap: usize },

    #[error("covariance matrix is singular: {0}")]
    SingularCovariance(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("invalid experiment spec: {0}")]
    InvalidSpec(String),

    #[error("fold {fold}: {source}")]
    Fold {
        fold: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Annotate an error with the fold index it occurred in.
    pub(crate) fn in_fold(self, fold: usize) -> Self {
        Error::Fold {
            fold,
            source: Box::new(self),
        }
    }
}
