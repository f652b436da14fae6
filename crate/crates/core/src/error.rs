use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry {index} maps to {value}, outside codomain of size {cod}")]
    OutOfRange {
        index: usize,
        value: usize,
        cod: usize,
    },
    #[error("table has length {len}, domain has size {dom}")]
    TableLength { len: usize, dom: usize },
    #[error("labels: {0}")]
    Labels(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("{what} of size {size} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("hom matrix entry ({row}, {col}) = {value}: {reason}")]
    IllDefinedHom {
        row: usize,
        col: usize,
        value: i64,
        reason: String,
    },
    #[error("invalid Chu space: {0}")]
    InvalidChuSpace(String),
    #[error("carrier of size {0} violates the standing assumption |X| >= 2")]
    CarrierTooSmall(usize),
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("invalid universe: {0}")]
    InvalidUniverse(String),
}
