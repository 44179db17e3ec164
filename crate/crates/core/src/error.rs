use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid splitting type {entries:?}: entries must be weakly increasing")]
    NotIncreasing { entries: Vec<i64> },

    #[error("invalid partition {parts:?}: parts must be weakly decreasing and nonnegative")]
    NotPartition { parts: Vec<i64> },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: i64, right: i64 },

    #[error("{op}: precondition violated: {reason}")]
    Precondition { op: &'static str, reason: String },

    #[error("{op}: no splitting type satisfies the constraints ({reason})")]
    Infeasible { op: &'static str, reason: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn pre(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Precondition {
            op,
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
