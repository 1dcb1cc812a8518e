use thiserror::Error;

use crate::diagram::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MhrgError {
    #[error("invalid board {m}x{n}: need 1 <= m <= n")]
    InvalidBoard { m: usize, n: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid index set: {0}")]
    InvalidIndexSet(String),

    #[error("invalid diagonal expression: {0}")]
    InvalidDiagonal(String),

    #[error("box {0} is not in the diagram")]
    NotInDiagram(Cell),

    #[error("box {0} is outside the board")]
    OutsideBoard(Cell),

    #[error("the empty diagram is the ending position and has no options")]
    EndingPosition,

    #[error("position {0} is not a game position of this board")]
    UnknownPosition(String),

    #[error("board {m}x{n} has {positions} partitions, above the limit of {limit}")]
    GuardrailExceeded {
        m: usize,
        n: usize,
        positions: u128,
        limit: u128,
    },

    #[error("inconsistent embedding: {0}")]
    InvalidEmbedding(String),

    #[error("malformed game graph: {0}")]
    MalformedGraph(String),
}

pub type Result<T> = std::result::Result<T, MhrgError>;
