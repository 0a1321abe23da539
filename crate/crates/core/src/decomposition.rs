use std::fmt;

use thiserror::Error;

use crate::bits::{self, BitMatrix};
use crate::error::ValidationError;
use crate::tuple::BoolTuple;

/// The ground set `S = {e_1, …, e_m}`; elements are identified by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Universe {
    m: usize,
}

impl Universe {
    pub fn new(m: usize) -> Result<Self, ValidationError> {
        if m == 0 {
            return Err(ValidationError::Empty);
        }
        Ok(Universe { m })
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.m
    }
}

/// A special decomposition: `n` ordered pairs `(M_i^0, M_i^1)` of subsets
/// of an `m`-element set, stored as the two `n × m` membership matrices.
///
/// Invariants, checked on construction:
///
/// 1. the components of each pair are disjoint,
/// 2. no pair has both components empty,
/// 3. every element lies in some component.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    sm0: BitMatrix,
    sm1: BitMatrix,
}

impl Decomposition {
    /// Validates a pair of 0/1 matrices given as rows.
    ///
    /// ```
    /// use speccover::{Decomposition, ValidationError};
    ///
    /// let d = Decomposition::new(&[[0, 1], [0, 0]], &[[1, 0], [1, 1]]).unwrap();
    /// assert_eq!((d.n(), d.m()), (2, 2));
    /// assert_eq!(
    ///     Decomposition::new(&[[1]], &[[1]]),
    ///     Err(ValidationError::Overlap { pair: 0, element: 0 }),
    /// );
    /// ```
    pub fn new<R, T>(sm0: &[R], sm1: &[R]) -> Result<Self, ValidationError>
    where
        R: AsRef<[T]>,
        T: Copy + Into<i64>,
    {
        let a = bit_matrix(sm0)?;
        let b = bit_matrix(sm1)?;
        Self::from_bits(a, b)
    }

    pub fn from_bits(sm0: BitMatrix, sm1: BitMatrix) -> Result<Self, ValidationError> {
        if sm0.rows() != sm1.rows() || sm0.cols() != sm1.cols() {
            return Err(ValidationError::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                sm0.rows(),
                sm0.cols(),
                sm1.rows(),
                sm1.cols()
            )));
        }
        let (n, m) = (sm0.rows(), sm0.cols());
        if n == 0 || m == 0 {
            return Err(ValidationError::Empty);
        }
        for i in 0..n {
            let (r0, r1) = (sm0.row(i), sm1.row(i));
            for (k, (a, b)) in r0.iter().zip(r1).enumerate() {
                let both = a & b;
                if both != 0 {
                    return Err(ValidationError::Overlap {
                        pair: i,
                        element: k * 64 + both.trailing_zeros() as usize,
                    });
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| sm0.row_is_zero(i) && sm1.row_is_zero(i)) {
            return Err(ValidationError::EmptyPair(i));
        }
        let union = union_rows(&sm0, &sm1, 0..n);
        if let Some(j) = bits::first_zero(&union, m) {
            return Err(ValidationError::UncoveredElement(j));
        }
        Ok(Decomposition { sm0, sm1 })
    }

    pub(crate) fn from_bits_unchecked(sm0: BitMatrix, sm1: BitMatrix) -> Self {
        let d = Decomposition { sm0, sm1 };
        debug_assert_eq!(d.check(), Ok(()));
        d
    }

    /// Re-runs the invariant checks on the current contents.
    pub fn check(&self) -> Result<(), ValidationError> {
        Self::from_bits(self.sm0.clone(), self.sm1.clone()).map(|_| ())
    }

    /// Number of pairs.
    pub fn n(&self) -> usize {
        self.sm0.rows()
    }

    /// Number of elements.
    pub fn m(&self) -> usize {
        self.sm0.cols()
    }

    pub fn universe(&self) -> Universe {
        Universe { m: self.m() }
    }

    pub fn sm0(&self) -> &BitMatrix {
        &self.sm0
    }

    pub fn sm1(&self) -> &BitMatrix {
        &self.sm1
    }

    /// The matrix holding the `side` components (`false` = `M^0`).
    pub fn side(&self, side: bool) -> &BitMatrix {
        if side {
            &self.sm1
        } else {
            &self.sm0
        }
    }

    pub(crate) fn side_mut(&mut self, side: bool) -> &mut BitMatrix {
        if side {
            &mut self.sm1
        } else {
            &mut self.sm0
        }
    }

    /// Packed row of `M_pair^side`.
    pub fn component(&self, pair: usize, side: bool) -> &[u64] {
        self.side(side).row(pair)
    }

    /// Elements of `M_pair^side`, ascending.
    pub fn component_elements(&self, pair: usize, side: bool) -> Vec<usize> {
        self.side(side).row_ones(pair).collect()
    }

    pub fn contains(&self, pair: usize, side: bool, element: usize) -> bool {
        self.side(side).get(pair, element)
    }

    /// Which component of `pair` holds `element`, if any.
    pub fn side_of(&self, pair: usize, element: usize) -> Option<bool> {
        if self.sm0.get(pair, element) {
            Some(false)
        } else if self.sm1.get(pair, element) {
            Some(true)
        } else {
            None
        }
    }

    pub fn pair_is_empty(&self, pair: usize) -> bool {
        self.sm0.row_is_zero(pair) && self.sm1.row_is_zero(pair)
    }

    /// Union of the components selected by `tuple`, packed.
    pub fn selected_union(&self, tuple: &BoolTuple) -> Vec<u64> {
        let mut acc = vec![0u64; self.sm0.words_per_row()];
        for i in 0..self.n() {
            for (a, w) in acc.iter_mut().zip(self.component(i, tuple.get(i))) {
                *a |= w;
            }
        }
        acc
    }

    /// Whether the components selected by `tuple` cover every element.
    /// Panics if the tuple length differs from `n`.
    pub fn covered_by(&self, tuple: &BoolTuple) -> bool {
        assert_eq!(tuple.len(), self.n(), "tuple length must equal pair count");
        bits::is_full(&self.selected_union(tuple), self.m())
    }

    /// Whether `element` lies in some selected component other than pair
    /// `except`'s.
    pub(crate) fn covered_elsewhere(&self, tuple: &BoolTuple, element: usize, except: usize) -> bool {
        (0..self.n()).any(|i| i != except && self.contains(i, tuple.get(i), element))
    }

    pub(crate) fn set(&mut self, pair: usize, side: bool, element: usize, value: bool) {
        self.side_mut(side).set(pair, element, value);
    }

    pub(crate) fn swap_pair(&mut self, pair: usize) {
        self.sm0.swap_row_with(&mut self.sm1, pair);
    }

    pub fn to_matrices(&self) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
        (self.sm0.to_rows(), self.sm1.to_rows())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Decomposition")
            .field("sm0", &self.sm0)
            .field("sm1", &self.sm1)
            .finish()
    }
}

pub(crate) fn union_rows(
    a: &BitMatrix,
    b: &BitMatrix,
    rows: impl Iterator<Item = usize>,
) -> Vec<u64> {
    let mut acc = vec![0u64; a.words_per_row()];
    for i in rows {
        for ((x, p), q) in acc.iter_mut().zip(a.row(i)).zip(b.row(i)) {
            *x |= p | q;
        }
    }
    acc
}

fn bit_matrix<R, T>(rows: &[R]) -> Result<BitMatrix, ValidationError>
where
    R: AsRef<[T]>,
    T: Copy + Into<i64>,
{
    let cols = rows.first().map_or(0, |r| r.as_ref().len());
    let mut out = BitMatrix::new(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != cols {
            return Err(ValidationError::Ragged {
                row: i,
                expected: cols,
                found: row.len(),
            });
        }
        for (j, &v) in row.iter().enumerate() {
            match v.into() {
                0 => {}
                1 => out.set(i, j, true),
                value => return Err(ValidationError::BadBit { row: i, col: j, value }),
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("tuple has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("tuple {0} does not select a covering")]
    NotCovering(BoolTuple),
}

/// A tuple whose selected components `M_i^{t_i}` cover the whole set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoveringWitness {
    tuple: BoolTuple,
}

impl CoveringWitness {
    pub fn new(d: &Decomposition, tuple: BoolTuple) -> Result<Self, WitnessError> {
        if tuple.len() != d.n() {
            return Err(WitnessError::LengthMismatch {
                expected: d.n(),
                found: tuple.len(),
            });
        }
        if !d.covered_by(&tuple) {
            return Err(WitnessError::NotCovering(tuple));
        }
        Ok(CoveringWitness { tuple })
    }

    pub(crate) fn new_unchecked(tuple: BoolTuple) -> Self {
        CoveringWitness { tuple }
    }

    pub fn tuple(&self) -> &BoolTuple {
        &self.tuple
    }

    pub fn into_tuple(self) -> BoolTuple {
        self.tuple
    }

    /// Whether `M_pair^side` is one of the selected components.
    pub fn selects(&self, pair: usize, side: bool) -> bool {
        self.tuple.get(pair) == side
    }

    /// Elements of the covering components, in selection order.
    pub fn components<'a>(&'a self, d: &'a Decomposition) -> impl Iterator<Item = Vec<usize>> + 'a {
        (0..d.n()).map(move |i| d.component_elements(i, self.tuple.get(i)))
    }

    pub(crate) fn flip(&mut self, pair: usize) {
        self.tuple.flip(pair);
    }
}

/// Size of the input data: literal occurrences of a CNF matrix, or total
/// membership count of a decomposition. The two agree across conversion.
pub trait DataLength {
    fn data_length(&self) -> usize;
}

impl DataLength for crate::CnfMatrix {
    fn data_length(&self) -> usize {
        self.cells().iter().filter(|&&c| c != 0).count()
    }
}

impl DataLength for Decomposition {
    fn data_length(&self) -> usize {
        self.sm0.count_ones() + self.sm1.count_ones()
    }
}

pub fn data_length<T: DataLength>(x: &T) -> usize {
    x.data_length()
}
