use std::fmt;

use crate::error::ValidationError;

/// An `m × n` matrix over `{-1, 0, +1}` describing a CNF function.
///
/// Row `i` is clause `c_i`, column `j` is variable `x_j`: `+1` means the
/// clause contains `x_j`, `-1` means it contains `¬x_j`, `0` neither. A
/// single cell cannot hold both polarities, so tautological clauses are not
/// representable. No row and no column is all zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CnfMatrix {
    n: usize,
    m: usize,
    cells: Vec<i8>,
}

impl CnfMatrix {
    /// Validates a matrix given as clause rows.
    ///
    /// ```
    /// use speccover::{CnfMatrix, ValidationError};
    ///
    /// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
    /// assert_eq!((f.m(), f.n()), (2, 2));
    /// assert_eq!(
    ///     CnfMatrix::new(&[[1, 0], [0, 0]]),
    ///     Err(ValidationError::EmptyClause(1)),
    /// );
    /// ```
    pub fn new<R, T>(rows: &[R]) -> Result<Self, ValidationError>
    where
        R: AsRef<[T]>,
        T: Copy + Into<i64>,
    {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        if m == 0 || n == 0 {
            return Err(ValidationError::Empty);
        }
        let mut cells = Vec::with_capacity(m * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(ValidationError::Ragged {
                    row: i,
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                let v: i64 = v.into();
                if !(-1..=1).contains(&v) {
                    return Err(ValidationError::BadEntry {
                        row: i,
                        col: j,
                        value: v,
                    });
                }
                cells.push(v as i8);
            }
        }
        Self::from_cells(n, m, cells)
    }

    /// Validates a flat row-major buffer of `m * n` cells.
    pub fn from_cells(n: usize, m: usize, cells: Vec<i8>) -> Result<Self, ValidationError> {
        if m == 0 || n == 0 {
            return Err(ValidationError::Empty);
        }
        assert_eq!(cells.len(), n * m, "cell buffer does not match n * m");
        if let Some(k) = cells.iter().position(|c| !(-1..=1).contains(c)) {
            return Err(ValidationError::BadEntry {
                row: k / n,
                col: k % n,
                value: cells[k] as i64,
            });
        }
        if let Some(i) = (0..m).find(|&i| cells[i * n..(i + 1) * n].iter().all(|&c| c == 0)) {
            return Err(ValidationError::EmptyClause(i));
        }
        if let Some(j) = (0..n).find(|&j| (0..m).all(|i| cells[i * n + j] == 0)) {
            return Err(ValidationError::UnusedVariable(j));
        }
        Ok(CnfMatrix { n, m, cells })
    }

    pub(crate) fn from_cells_unchecked(n: usize, m: usize, cells: Vec<i8>) -> Self {
        debug_assert!(Self::from_cells(n, m, cells.clone()).is_ok());
        CnfMatrix { n, m, cells }
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of clauses.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, clause: usize, var: usize) -> i8 {
        self.cells[clause * self.n + var]
    }

    pub fn clause(&self, clause: usize) -> &[i8] {
        &self.cells[clause * self.n..(clause + 1) * self.n]
    }

    pub fn clauses(&self) -> impl Iterator<Item = &[i8]> + '_ {
        self.cells.chunks_exact(self.n)
    }

    pub fn cells(&self) -> &[i8] {
        &self.cells
    }

    pub fn to_rows(&self) -> Vec<Vec<i8>> {
        self.clauses().map(<[i8]>::to_vec).collect()
    }

    /// Literals of a clause as signed 1-based variable numbers, ascending by
    /// variable.
    pub fn signed_literals(&self, clause: usize) -> impl Iterator<Item = i64> + '_ {
        self.clause(clause)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| c as i64 * (j as i64 + 1))
    }
}

impl fmt::Debug for CnfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.clauses()).finish()
    }
}

/// Renders as a conjunction of clauses, e.g. `(x1 ∨ x2) ∧ (¬x1 ∨ x2)`.
impl fmt::Display for CnfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, clause) in self.clauses().enumerate() {
            if i > 0 {
                f.write_str(" ∧ ")?;
            }
            f.write_str("(")?;
            let mut first = true;
            for (j, &c) in clause.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                if !first {
                    f.write_str(" ∨ ")?;
                }
                first = false;
                if c < 0 {
                    f.write_str("¬")?;
                }
                write!(f, "x{}", j + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_two_clause_example() {
        let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
        assert_eq!(f.to_rows(), vec![vec![1, 1], vec![-1, 1]]);
        assert_eq!(f.to_string(), "(x1 ∨ x2) ∧ (¬x1 ∨ x2)");
    }

    #[test]
    fn names_offending_row_and_column() {
        // second clause / second variable, zero-based
        assert_eq!(
            CnfMatrix::new(&[[1, 0], [0, 0]]),
            Err(ValidationError::EmptyClause(1))
        );
        assert_eq!(
            CnfMatrix::new(&[[1, 0], [-1, 0]]),
            Err(ValidationError::UnusedVariable(1))
        );
        assert_eq!(
            CnfMatrix::new(&[[1, 2]]),
            Err(ValidationError::BadEntry {
                row: 0,
                col: 1,
                value: 2
            })
        );
        assert_eq!(
            CnfMatrix::new(&[vec![1, 1], vec![1]]),
            Err(ValidationError::Ragged {
                row: 1,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(CnfMatrix::new::<[i32; 0], i32>(&[]), Err(ValidationError::Empty));
    }

    #[test]
    fn error_messages_are_one_based() {
        assert_eq!(
            ValidationError::EmptyClause(1).to_string(),
            "clause 2 is empty"
        );
    }

    #[test]
    fn signed_literals_ascend() {
        let f = CnfMatrix::new(&[[-1, 0, 1], [0, 1, 0]]).unwrap();
        assert_eq!(f.signed_literals(0).collect::<Vec<_>>(), vec![-1, 3]);
        assert_eq!(f.signed_literals(1).collect::<Vec<_>>(), vec![2]);
    }
}
