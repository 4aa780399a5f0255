use thiserror::Error;

/// Errors raised by graded-core constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradedError {
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("matrix has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },

    #[error("entry ({domain}, {codomain}) is nonzero outside the degree block of a degree {degree} map")]
    DegreeBlock {
        domain: usize,
        codomain: usize,
        degree: i64,
    },

    #[error("degree arithmetic overflowed")]
    DegreeOverflow,

    #[error("matrix is singular")]
    Singular,

    #[error("basis change row {row} mixes basis vectors of different degrees")]
    InhomogeneousRow { row: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
}
