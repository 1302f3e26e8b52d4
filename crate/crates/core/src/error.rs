use crate::partitions::{GrassmannianSpec, Partition};
use thiserror::Error;

/// Errors shared by all operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0} in {1}")]
    InvalidPartition(Partition, GrassmannianSpec),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("invalid Grassmannian G({k},{n})")]
    InvalidSpec { k: u32, n: u32 },
    #[error("space mismatch: {0} vs {1}")]
    SpaceMismatch(GrassmannianSpec, GrassmannianSpec),
    #[error("product spec mismatch: {0}")]
    SpecMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("class is not homogeneous")]
    NotHomogeneous,
    #[error("zero class")]
    ZeroClass,
    #[error("target {to} not reachable from {from}")]
    Unreachable {
        from: GrassmannianSpec,
        to: GrassmannianSpec,
    },
    #[error("not strictly decreasing: {0}")]
    NotStrict(String),
    #[error("exponent out of range: {0}")]
    ExponentOutOfRange(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
