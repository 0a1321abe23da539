use thiserror::Error;

/// Why a matrix is not a valid CNF matrix or decomposition.
///
/// Indices carried by the variants are zero-based; the messages print them
/// one-based, which is how clauses, variables, pairs and elements are
/// numbered in files and on the command line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("matrix has no rows or no columns")]
    Empty,
    #[error("row {} has length {found}, expected {expected}", .row + 1)]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry ({}, {}) is {value}, expected one of -1, 0, 1", .row + 1, .col + 1)]
    BadEntry { row: usize, col: usize, value: i64 },
    #[error("clause {} is empty", .0 + 1)]
    EmptyClause(usize),
    #[error("variable {} occurs in no clause", .0 + 1)]
    UnusedVariable(usize),
    #[error("component matrices differ in shape: {0}")]
    ShapeMismatch(String),
    #[error("entry ({}, {}) is {value}, expected 0 or 1", .row + 1, .col + 1)]
    BadBit { row: usize, col: usize, value: i64 },
    #[error("element {} lies in both components of pair {}", .element + 1, .pair + 1)]
    Overlap { pair: usize, element: usize },
    #[error("both components of pair {} are empty", .0 + 1)]
    EmptyPair(usize),
    #[error("element {} belongs to no component", .0 + 1)]
    UncoveredElement(usize),
}
