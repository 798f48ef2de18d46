use alloc::string::String;

use crate::kernel::Ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported prime field F_{0}: need a prime p >= 5")]
    BadRing(u32),
    #[error("unknown ring `{0}` (expected q or f<p>)")]
    UnknownRing(String),
    #[error("cannot read `{text}` as an element of {ring}")]
    BadScalar { text: String, ring: Ring },
    #[error("ring {ring} does not invert 2..={n}")]
    NotInvertible { ring: Ring, n: u32 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("method not applicable: {0}")]
    Method(String),
    #[error("rank deficient representative")]
    RankDeficient,
    #[error("arguments are not transversal")]
    NotTransversal,
    #[error("enumeration of {size} items exceeds the limit {limit}")]
    TooLarge { size: u128, limit: u64 },
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::Invalid(msg.into())
}

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}
