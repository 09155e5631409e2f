use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input array is empty")]
    EmptyInput,
    #[error("arithmetic overflow in sum computation")]
    Overflow,
    #[error("k = {k} is out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("index ({row}, {col}) is outside the {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("array is not sorted in non-increasing order")]
    NotSorted,
    #[error("requested {requested} cells from a band holding {available}")]
    NotEnoughCells { requested: usize, available: usize },
    #[error("bands are not adjacent and cannot be joined")]
    NotAdjacent,
    #[error("prune-and-search exceeded its depth limit of {0}")]
    RecursionLimit(usize),
    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
}
