use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("partition {partition} has length greater than r = {r}")]
    LengthExceedsTruncation { partition: Partition, r: usize },

    #[error("truncation mismatch: B_{left} vs B_{right}")]
    TruncationMismatch { left: usize, right: usize },

    #[error("series truncated at order {order} cannot supply order {needed}")]
    TruncationExhausted { order: usize, needed: usize },

    #[error("series is not in the kernel of the order-{r} operator (first failure at t^{order})")]
    NotInKernel { r: usize, order: usize },

    #[error("expected a charge-{expected} wedge, found charge {found}")]
    WrongCharge { expected: i64, found: i64 },

    #[error("h-index bound M = {bound} is too small, need at least {needed}")]
    InsufficientIndexBound { needed: usize, bound: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
