//! Elementary-operation accounting.
//!
//! Four categories are counted: assignments to a variable or array cell,
//! additions and subtractions, comparisons, and literal recognitions. Every
//! loop iteration is charged one addition (advancing the index) and one
//! comparison (testing the bound).
//!
//! Conventions shared by every instrumented routine:
//!
//! * A literal recognition decodes one slot of the input into the literal it
//!   holds: for a CNF cell the variable, clause and polarity; for a
//!   decomposition slot `(pair i, element j)` whether `e_j` sits in `M_i^0`,
//!   `M_i^1` or neither.
//! * Output buffers are allocated zeroed; only cells written with a non-zero
//!   value are charged an assignment.
//! * Loops over a full matrix walk its slots as one flat sequence.
//! * A whole-row test on a packed row (is it empty, where is its lowest set
//!   or free bit) costs one iteration and one comparison per 64-bit word;
//!   combining two rows word by word adds one assignment per word. Rows of
//!   at most 64 elements are a single word and carry no loop control.
//! * Trace generation views each pair as a selected and a non-selected
//!   component under the working tuple. A pair flip leaves that view intact
//!   and costs one assignment, the tuple bit.

use std::fmt;
use std::ops::AddAssign;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    pub assignments: u64,
    pub additions: u64,
    pub comparisons: u64,
    pub recognitions: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn total(&self) -> u64 {
        self.assignments + self.additions + self.comparisons + self.recognitions
    }

    #[inline]
    pub fn assign(&mut self, k: u64) {
        self.assignments += k;
    }

    #[inline]
    pub fn add(&mut self, k: u64) {
        self.additions += k;
    }

    #[inline]
    pub fn compare(&mut self, k: u64) {
        self.comparisons += k;
    }

    #[inline]
    pub fn recognize(&mut self, k: u64) {
        self.recognitions += k;
    }

    /// One pass of loop control: increment plus bound test.
    #[inline]
    pub fn iteration(&mut self) {
        self.additions += 1;
        self.comparisons += 1;
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: Self) {
        self.assignments += rhs.assignments;
        self.additions += rhs.additions;
        self.comparisons += rhs.comparisons;
        self.recognitions += rhs.recognitions;
    }
}

impl fmt::Display for OpCounter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (assign {}, add {}, compare {}, recognize {})",
            self.total(),
            self.assignments,
            self.additions,
            self.comparisons,
            self.recognitions
        )
    }
}
