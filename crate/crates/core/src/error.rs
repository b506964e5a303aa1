use crate::tableau::{Cell, Shape};

/// Everything that can go wrong while building or transforming the
/// combinatorial objects in this crate. Positions are reported 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("value {value} at position {index} is outside 1..={n}")]
    ValueOutOfRange { index: usize, value: i64, n: usize },
    #[error("duplicate value {value} at position {index}")]
    DuplicateValue { index: usize, value: usize },
    #[error("size {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("cannot parse permutation: {0}")]
    Parse(String),
    #[error("rank {rank} is out of range for n = {n} (n! = {total})")]
    RankOutOfRange { n: usize, rank: u64, total: u64 },

    #[error("row {row} has length {len}, longer than the row above it")]
    NotAPartition { row: usize, len: usize },
    #[error("row {row} is empty")]
    EmptyRow { row: usize },
    #[error("entry {value} at {cell} is not in 1..={n}")]
    EntryOutOfRange { value: usize, cell: Cell, n: usize },
    #[error("entry at {cell} is zero")]
    ZeroEntry { cell: Cell },
    #[error("duplicate entry {value} at {cell}")]
    DuplicateEntry { value: usize, cell: Cell },
    #[error("row order violated at {cell}")]
    RowOrder { cell: Cell },
    #[error("column order violated at {cell}")]
    ColumnOrder { cell: Cell },
    #[error("invalid tableau input: {0}")]
    TableauSyntax(String),

    #[error("{value} is already present in the tableau")]
    AlreadyPresent { value: usize },
    #[error("insertion tableau has shape {p} but recording tableau has shape {q}")]
    ShapeMismatch { p: Shape, q: Shape },

    #[error("{cell} is not a valid hole for a slide")]
    InvalidHole { cell: Cell },
    #[error("tableau is empty")]
    EmptyTableau,

    #[error("invalid parameters a = {a}, b = {b} for a map into S_{target}")]
    InvalidPhiParameters { a: usize, b: usize, target: usize },
    #[error("permutation of size {len} is too small, need at least {min}")]
    TooSmall { len: usize, min: usize },

    #[error("n = {n} is outside the configured range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },
    #[error("n = {n} is too large to list members (cap is {cap}); counting is still allowed")]
    ListTooLarge { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
