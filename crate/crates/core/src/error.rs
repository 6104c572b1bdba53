use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at row {row}, column {column}: {message}")]
    Parse {
        /// 1-based row, 0 when the error concerns the whole input.
        row: usize,
        /// 1-based column, 0 when the error concerns a whole row.
        column: usize,
        message: String,
    },

    #[error("wrong shape: {0}")]
    Shape(String),

    #[error("not equidegree: row sums are {0}, {1}, {2}")]
    NotEquidegree(u64, u64, u64),

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("matrix is not in reduced form (column minima {0:?})")]
    NotReduced([u64; 3]),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("entry {0} exceeds the geometry limit of {1}")]
    EntryTooLarge(u64, u64),

    #[error("non-dominant map: determinant is zero")]
    NonDominant,

    #[error("point {0} is not a vertex of the polyhedron")]
    NotAVertex(String),

    #[error("cell {0} is not simplicial (order {1}, expected 4)")]
    NotSimplicial(String, usize),

    #[error("expected {expected} points in dimension {dimension}, got {got}")]
    PointCount {
        expected: usize,
        dimension: usize,
        got: usize,
    },

    #[error("invalid cell: {0}")]
    InvalidCell(String),

    #[error("not a Cremona transformation: {0}")]
    NotCremona(String),

    #[error("degree {0} out of range: {1}")]
    DegreeOutOfRange(u64, String),
}

pub type Result<T> = std::result::Result<T, Error>;
