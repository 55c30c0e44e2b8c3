use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    Empty,

    /// `position` is 0-based into the offending text.
    #[error("unexpected character {found:?} at position {position}")]
    Parse { position: usize, found: char },

    #[error("invalid run length {value:?} at position {position}")]
    BadRunLength { position: usize, value: String },

    #[error("sign values must be -1 or +1, got {0}")]
    BadSign(i64),

    #[error("run lengths must be positive (run {index} is zero)")]
    ZeroRun { index: usize },

    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("missing parameter {0}")]
    MissingParameter(&'static str),

    #[error("requires odd length, got n = {0}")]
    EvenLength(usize),

    #[error("requires balanced RLE")]
    NotBalanced,

    #[error("requires p > 1")]
    PTooSmall,

    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),

    #[error("unknown search mode {0:?}, expected full or skew")]
    UnknownMode(String),

    #[error("{what}: n = {n} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid range: min_n = {min} > max_n = {max}")]
    EmptyRange { min: usize, max: usize },

    /// An identity that must hold for every input failed. Always a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: i64, lo: i64, hi: i64) -> Result<()> {
    if value < lo || value > hi {
        return Err(Error::OutOfRange { what, value, lo, hi });
    }
    Ok(())
}
