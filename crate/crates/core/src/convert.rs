//! Conversion between CNF matrices and decompositions.
//!
//! Clause `c_j` becomes element `e_j`; variable `x_i` becomes pair `i`, with
//! `M_i^0` holding the clauses that contain `¬x_i` and `M_i^1` those that
//! contain `x_i`. Both directions are total on validated inputs and are
//! mutual inverses.

use crate::bits::BitMatrix;
use crate::cnf::CnfMatrix;
use crate::decomposition::Decomposition;
use crate::ops::OpCounter;

/// The decomposition of the clause set generated by `f`.
///
/// ```
/// use speccover::{convert, CnfMatrix};
///
/// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
/// let d = convert::cnf_to_decomposition(&f);
/// assert_eq!(d.to_matrices(), (vec![vec![0, 1], vec![0, 0]], vec![vec![1, 0], vec![1, 1]]));
/// ```
pub fn cnf_to_decomposition(f: &CnfMatrix) -> Decomposition {
    cnf_to_decomposition_counted(f, &mut OpCounter::new())
}

pub fn cnf_to_decomposition_counted(f: &CnfMatrix, ops: &mut OpCounter) -> Decomposition {
    let (n, m) = (f.n(), f.m());
    let mut sm0 = BitMatrix::new(n, m);
    let mut sm1 = BitMatrix::new(n, m);
    for (k, &cell) in f.cells().iter().enumerate() {
        ops.iteration();
        ops.recognize(1);
        let (clause, var) = (k / n, k % n);
        match cell {
            1 => {
                sm1.set(var, clause, true);
                ops.assign(1);
            }
            -1 => {
                sm0.set(var, clause, true);
                ops.assign(1);
            }
            _ => {}
        }
    }
    Decomposition::from_bits_unchecked(sm0, sm1)
}

/// The CNF function generated by `d`: clause `j` collects `x_i^α` for every
/// component `M_i^α` containing `e_j`.
pub fn decomposition_to_cnf(d: &Decomposition) -> CnfMatrix {
    decomposition_to_cnf_counted(d, &mut OpCounter::new())
}

pub fn decomposition_to_cnf_counted(d: &Decomposition, ops: &mut OpCounter) -> CnfMatrix {
    let (n, m) = (d.n(), d.m());
    let mut cells = vec![0i8; n * m];
    for pair in 0..n {
        for element in 0..m {
            ops.iteration();
            ops.recognize(1);
            if let Some(side) = d.side_of(pair, element) {
                cells[element * n + pair] = if side { 1 } else { -1 };
                ops.assign(1);
            }
        }
    }
    CnfMatrix::from_cells_unchecked(n, m, cells)
}
