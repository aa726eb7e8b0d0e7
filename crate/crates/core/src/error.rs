use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a partition needs at least one positive part")]
    Empty,
    #[error("negative part {0}")]
    NegativePart(i64),
    #[error("parts must be weakly decreasing, found {prev} followed by {next}")]
    Increasing { prev: i64, next: i64 },
    #[error("part {0} does not fit in 32 bits")]
    PartTooLarge(i64),
    #[error("cannot parse {0:?} as a partition")]
    Parse(String),
    #[error("partitions of different weights: {0} and {1}")]
    WeightMismatch(u32, u32),
    #[error("column {column} out of range 1..={max}")]
    ColumnOutOfRange { column: usize, max: usize },
    #[error("adding a grain at column {0} does not give a partition")]
    NotAPartition(usize),
    #[error("weight must be at least {min}, got {got}")]
    WeightTooSmall { min: u32, got: u32 },
    #[error("{what} is limited to n <= {limit} (got {n}); pass --force to override")]
    SizeGuard {
        what: &'static str,
        limit: u32,
        n: u32,
    },
    #[error("{0} is not join-irreducible")]
    NotIrreducible(Partition),
    #[error("layer construction produced {0} twice")]
    Overlap(Partition),
    #[error("partition count overflows 128 bits at n = {0}")]
    CountOverflow(u32),
    #[error("unknown object {0}")]
    UnknownObject(Partition),
    #[error("unknown attribute {0}")]
    UnknownAttribute(Partition),
    #[error("duplicate {kind} {name}")]
    Duplicate { kind: &'static str, name: Partition },
    #[error("concepts belong to different contexts")]
    ContextMismatch,
    #[error("malformed context, line {line}: {msg}")]
    ContextFormat { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
