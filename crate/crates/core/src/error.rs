use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("a multipartition needs at least one component")]
    EmptyMultipartition,

    #[error("rank mismatch: {left} components vs {right} components")]
    RankMismatch { left: usize, right: usize },

    #[error("size mismatch: |λ| = {left} vs |μ| = {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("p = {p} does not divide r = {r}")]
    NotDivisor { p: usize, r: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("cannot parse rational {0:?} (expected \"a/b\" or an integer)")]
    ParseRational(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
