use thiserror::Error;

use crate::diagram::{Cell, Partition};

/// Failure of the box-addition procedure `Y[j_1, ..., j_N]`.
///
/// `step` is the 1-based position in the row sequence at which the diagram
/// stopped being a Young diagram, `row` the row that was requested there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("adding a box at row {row} (step {step}) does not give a Young diagram")]
pub struct BoxFailure {
    pub step: usize,
    pub row: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("row lengths {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("cell coordinates are 1-based, got ({row},{col})")]
    InvalidCell { row: usize, col: usize },
    #[error("cell {0} is not in the shape")]
    CellNotInShape(Cell),
    #[error("sequence is not a permutation of the cell set: {0}")]
    NotAPermutation(String),
    #[error("order is not admissible: {first} must come before {second}")]
    NotAdmissible { first: Cell, second: Cell },
    #[error("mapping is not a bijection: {0}")]
    NotBijective(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("entry {entry} occurs twice in column {col}")]
    RepeatedInColumn { entry: usize, col: usize },
    #[error("invalid entry: {0}")]
    InvalidEntry(String),
    #[error("{shape} is not an ({m},{n})-hook diagram")]
    NotHook { shape: Partition, m: usize, n: usize },
    #[error("invalid order spec {0:?}")]
    InvalidOrderSpec(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error(transparent)]
    Box(#[from] BoxFailure),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
