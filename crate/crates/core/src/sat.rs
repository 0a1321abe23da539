//! Exhaustive evaluation and satisfiability for small functions.
//!
//! This is the ground truth the rest of the crate is checked against, so it
//! stays deliberately simple: every assignment in ascending numeric order,
//! clauses as pairs of bitmasks.

use thiserror::Error;

use crate::cnf::CnfMatrix;
use crate::tuple::BoolTuple;

/// Default bound on `n` for exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 24;

/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "SPECCOVER_MAX_N";

const HARD_MAX_N: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("assignment has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("functions have shapes {0:?} and {1:?}")]
    DimensionMismatch((usize, usize), (usize, usize)),
    #[error("{0} variables exceed the enumeration limit of {1}")]
    TooLarge(usize, usize),
}

/// The enumeration limit in effect: [`MAX_N_ENV`] if set and parseable,
/// otherwise [`DEFAULT_MAX_N`]. Never above 63.
pub fn max_n() -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
        .min(HARD_MAX_N)
}

/// Whether `t` satisfies every clause of `f`.
///
/// ```
/// use speccover::{sat, BoolTuple, CnfMatrix};
///
/// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
/// assert!(sat::evaluate(&f, &BoolTuple::from([0, 1])).unwrap());
/// assert!(!sat::evaluate(&f, &BoolTuple::from([1, 0])).unwrap());
/// ```
pub fn evaluate(f: &CnfMatrix, t: &BoolTuple) -> Result<bool, SatError> {
    if t.len() != f.n() {
        return Err(SatError::LengthMismatch {
            expected: f.n(),
            found: t.len(),
        });
    }
    Ok(f.clauses().all(|clause| {
        clause
            .iter()
            .zip(t.iter())
            .any(|(&c, v)| (c == 1 && v) || (c == -1 && !v))
    }))
}

/// Clauses as `(positive, negative)` masks; variable `i` is bit `n - 1 - i`
/// so that mask order agrees with tuple order.
struct Masks {
    n: usize,
    clauses: Vec<(u64, u64)>,
}

impl Masks {
    fn new(f: &CnfMatrix) -> Self {
        let n = f.n();
        let clauses = f
            .clauses()
            .map(|clause| {
                clause.iter().enumerate().fold((0, 0), |(p, q), (i, &c)| {
                    let bit = 1u64 << (n - 1 - i);
                    match c {
                        1 => (p | bit, q),
                        -1 => (p, q | bit),
                        _ => (p, q),
                    }
                })
            })
            .collect();
        Masks { n, clauses }
    }

    #[inline]
    fn satisfied(&self, a: u64) -> bool {
        self.clauses.iter().all(|&(p, q)| p & a != 0 || q & !a != 0)
    }

    fn count(&self) -> u64 {
        1u64 << self.n
    }
}

fn guard(n: usize) -> Result<(), SatError> {
    let limit = max_n();
    if n > limit {
        return Err(SatError::TooLarge(n, limit));
    }
    Ok(())
}

/// All satisfying assignments, ascending.
pub fn satisfying_assignments(f: &CnfMatrix) -> Result<Vec<BoolTuple>, SatError> {
    guard(f.n())?;
    let masks = Masks::new(f);
    Ok((0..masks.count())
        .filter(|&a| masks.satisfied(a))
        .map(|a| BoolTuple::from_index(f.n(), a))
        .collect())
}

/// The smallest satisfying assignment, if any.
pub fn first_satisfying(f: &CnfMatrix) -> Result<Option<BoolTuple>, SatError> {
    guard(f.n())?;
    let masks = Masks::new(f);
    Ok((0..masks.count())
        .find(|&a| masks.satisfied(a))
        .map(|a| BoolTuple::from_index(f.n(), a)))
}

pub fn is_satisfiable(f: &CnfMatrix) -> Result<bool, SatError> {
    first_satisfying(f).map(|t| t.is_some())
}

/// The smallest assignment satisfying both `f` and `h`.
pub fn common_satisfying(f: &CnfMatrix, h: &CnfMatrix) -> Result<Option<BoolTuple>, SatError> {
    if f.n() != h.n() {
        return Err(SatError::DimensionMismatch((f.m(), f.n()), (h.m(), h.n())));
    }
    guard(f.n())?;
    let (a, b) = (Masks::new(f), Masks::new(h));
    Ok((0..a.count())
        .find(|&x| a.satisfied(x) && b.satisfied(x))
        .map(|x| BoolTuple::from_index(f.n(), x)))
}
