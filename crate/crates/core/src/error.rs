use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("negative entry {0} in partition input")]
    NegativeEntry(i64),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("cyclic factor order must be at least 1, got {0}")]
    InvalidOrder(i64),

    #[error("group order overflows 64 bits")]
    OrderOverflow,

    #[error("integer overflow during matrix reduction")]
    MatrixOverflow,

    #[error("relations define an infinite group (free rank {0})")]
    InfiniteGroup(usize),

    #[error("matrix has {len} entries, expected {rows}x{cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("operation needs a nontrivial group")]
    TrivialGroup,

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("table pattern and decomposition search disagree for {group}: {detail}")]
    Inconsistent { group: String, detail: String },

    #[error("explicit-group oracle refuses order {order}: limit is {limit}")]
    OracleRefused { order: u64, limit: u64 },

    #[error("oracle limit {0} exceeds the hard maximum of 512")]
    OracleLimitTooLarge(u64),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("element is not in the group")]
    ElementOutOfRange,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
