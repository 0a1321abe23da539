//! Deciding and searching special coverings.

use thiserror::Error;

use crate::decomposition::{union_rows, CoveringWitness, Decomposition};
use crate::tuple::BoolTuple;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error("tuple has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("pair index {} out of range 1..={n}", .index + 1)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("tuple {0} is not a covering of the decomposition")]
    NotCovering(BoolTuple),
}

/// Whether the components selected by `t` cover every element.
///
/// ```
/// use speccover::{convert, covering, BoolTuple, CnfMatrix};
///
/// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
/// let d = convert::cnf_to_decomposition(&f);
/// assert!(covering::is_covering(&d, &BoolTuple::from([0, 1])).unwrap());
/// assert!(!covering::is_covering(&d, &BoolTuple::from([1, 0])).unwrap());
/// ```
pub fn is_covering(d: &Decomposition, t: &BoolTuple) -> Result<bool, CoveringError> {
    if t.len() != d.n() {
        return Err(CoveringError::LengthMismatch {
            expected: d.n(),
            found: t.len(),
        });
    }
    Ok(d.covered_by(t))
}

/// Components that every covering must contain, and whether two of them
/// clash within one pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ForcedReport {
    /// `(pair, side)` such that `M_pair^side` holds an element found in no
    /// other pair. Sorted by pair, then side.
    pub forced: Vec<(usize, bool)>,
    /// The first pair whose two components are both forced. When set, no
    /// covering exists.
    pub contradiction: Option<usize>,
}

impl ForcedReport {
    pub fn is_forced(&self, pair: usize, side: bool) -> bool {
        self.forced.contains(&(pair, side))
    }
}

/// A component is forced when it contains an element that no other pair
/// contains in either component: any covering has to pick it.
pub fn forced_subsets(d: &Decomposition) -> ForcedReport {
    let (n, m) = (d.n(), d.m());
    // occurrences[j] = number of pairs containing e_j, saturating at 2
    let mut occurrences = vec![0u8; m];
    let mut owner = vec![usize::MAX; m];
    for i in 0..n {
        for j in d.sm0().row_ones(i).chain(d.sm1().row_ones(i)) {
            occurrences[j] = (occurrences[j] + 1).min(2);
            owner[j] = i;
        }
    }
    let mut report = ForcedReport::default();
    for i in 0..n {
        let mut both = true;
        for side in [false, true] {
            let private = d
                .side(side)
                .row_ones(i)
                .any(|j| occurrences[j] == 1 && owner[j] == i);
            if private {
                report.forced.push((i, side));
            }
            both &= private;
        }
        if both && report.contradiction.is_none() {
            report.contradiction = Some(i);
        }
    }
    report
}

/// The same check as [`forced_subsets`] for a single component, computed
/// straight from the union of the other pairs.
pub fn is_forced(d: &Decomposition, pair: usize, side: bool) -> bool {
    let others = union_rows(d.sm0(), d.sm1(), (0..d.n()).filter(|&j| j != pair));
    d.component(pair, side)
        .iter()
        .zip(&others)
        .any(|(c, o)| c & !o != 0)
}

/// The numerically smallest covering tuple, or `None`.
///
/// With `prune`, forced components fix their bits before enumeration and a
/// contradiction ends the search at once. The answer is the same either
/// way, since every covering agrees with the forced bits.
pub fn find_covering(d: &Decomposition, prune: bool) -> Option<CoveringWitness> {
    search(d, prune, true).pop()
}

/// Every covering tuple, ascending.
pub fn all_coverings(d: &Decomposition, prune: bool) -> Vec<CoveringWitness> {
    search(d, prune, false)
}

/// Number of tuples a search would examine, for comparing the two modes.
pub fn search_space(d: &Decomposition, prune: bool) -> u128 {
    if !prune {
        return 1u128 << d.n().min(127);
    }
    let report = forced_subsets(d);
    if report.contradiction.is_some() {
        return 0;
    }
    1u128 << (d.n() - report.forced.len()).min(127)
}

fn search(d: &Decomposition, prune: bool, first_only: bool) -> Vec<CoveringWitness> {
    let n = d.n();
    let mut tuple = BoolTuple::zeros(n);
    let mut free: Vec<usize> = (0..n).collect();
    if prune {
        let report = forced_subsets(d);
        if report.contradiction.is_some() {
            return Vec::new();
        }
        for &(i, side) in &report.forced {
            tuple.set(i, side);
        }
        free.retain(|i| !report.forced.iter().any(|&(j, _)| j == *i));
    }
    let mut found = Vec::new();
    loop {
        if d.covered_by(&tuple) {
            found.push(CoveringWitness::new_unchecked(tuple.clone()));
            if first_only {
                return found;
            }
        }
        // odometer over the free positions, last position least significant
        let mut carry = true;
        for &i in free.iter().rev() {
            let bit = tuple.get(i);
            tuple.set(i, !bit);
            if !bit {
                carry = false;
                break;
            }
        }
        if carry {
            return found;
        }
    }
}

/// Swaps the two components of every listed pair. Duplicate indices count
/// once.
///
/// ```
/// use speccover::{covering, Decomposition};
///
/// let d = Decomposition::new(&[[0, 1], [0, 0]], &[[1, 0], [1, 1]]).unwrap();
/// let e = covering::i_transform(&d, &[0]).unwrap();
/// assert_eq!(e.to_matrices(), (vec![vec![1, 0], vec![0, 0]], vec![vec![0, 1], vec![1, 1]]));
/// ```
pub fn i_transform(d: &Decomposition, pairs: &[usize]) -> Result<Decomposition, CoveringError> {
    let n = d.n();
    let mut marked = vec![false; n];
    for &i in pairs {
        if i >= n {
            return Err(CoveringError::IndexOutOfRange { index: i, n });
        }
        marked[i] = true;
    }
    let mut out = d.clone();
    for (i, _) in marked.iter().enumerate().filter(|(_, &m)| m) {
        out.swap_pair(i);
    }
    Ok(out)
}

/// Rearranges `d` so that the covering `w` consists only of `target`-side
/// components: every pair where `w` picks the other side is swapped.
pub fn normalize_covering(
    d: &Decomposition,
    w: &CoveringWitness,
    target: bool,
) -> Result<(Decomposition, CoveringWitness), CoveringError> {
    let t = w.tuple();
    if t.len() != d.n() {
        return Err(CoveringError::LengthMismatch {
            expected: d.n(),
            found: t.len(),
        });
    }
    if !d.covered_by(t) {
        return Err(CoveringError::NotCovering(t.clone()));
    }
    let flips: Vec<usize> = (0..d.n()).filter(|&i| t.get(i) != target).collect();
    let out = i_transform(d, &flips)?;
    let witness = CoveringWitness::new_unchecked(BoolTuple::constant(d.n(), target));
    debug_assert!(out.covered_by(witness.tuple()));
    Ok((out, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::cnf_to_decomposition;
    use crate::CnfMatrix;

    fn d_of<const N: usize>(rows: &[[i32; N]]) -> Decomposition {
        cnf_to_decomposition(&CnfMatrix::new(rows).unwrap())
    }

    fn tuple(w: &Option<CoveringWitness>) -> Option<BoolTuple> {
        w.as_ref().map(|w| w.tuple().clone())
    }

    #[test]
    fn is_covering_examples() {
        let d = d_of(&[[1, 1], [-1, 1]]);
        assert!(is_covering(&d, &BoolTuple::from([0, 1])).unwrap());
        assert!(!is_covering(&d, &BoolTuple::from([1, 0])).unwrap());
        let all0 = Decomposition::new(&[[1, 1], [1, 1]], &[[0, 0], [0, 0]]).unwrap();
        assert!(is_covering(&all0, &BoolTuple::zeros(2)).unwrap());
        assert!(matches!(
            is_covering(&d, &BoolTuple::zeros(3)),
            Err(CoveringError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn find_covering_examples() {
        for prune in [false, true] {
            assert_eq!(
                tuple(&find_covering(&d_of(&[[1, 1], [-1, 1]]), prune)),
                Some(BoolTuple::from([0, 1]))
            );
            assert_eq!(tuple(&find_covering(&d_of(&[[1], [-1]]), prune)), None);
            assert_eq!(
                tuple(&find_covering(&d_of(&[[1, 0], [0, 1]]), prune)),
                Some(BoolTuple::from([1, 1]))
            );
        }
    }

    #[test]
    fn forced_examples() {
        let r = forced_subsets(&d_of(&[[1, 0], [0, 1]]));
        assert_eq!(r.forced, vec![(0, true), (1, true)]);
        assert_eq!(r.contradiction, None);

        let r = forced_subsets(&d_of(&[[1], [-1]]));
        assert_eq!(r.forced, vec![(0, false), (0, true)]);
        assert_eq!(r.contradiction, Some(0));

        // every clause mentions both variables
        let r = forced_subsets(&d_of(&[[1, 1], [-1, 1], [1, -1]]));
        assert!(r.forced.is_empty());
        assert_eq!(r.contradiction, None);
    }

    #[test]
    fn forced_agrees_with_union_form() {
        let d = d_of(&[[1, 0, 0], [-1, 1, 0], [0, 0, -1], [0, 1, 1]]);
        let r = forced_subsets(&d);
        for i in 0..d.n() {
            for side in [false, true] {
                assert_eq!(r.is_forced(i, side), is_forced(&d, i, side));
            }
        }
    }

    #[test]
    fn pruning_shrinks_search_space() {
        let d = d_of(&[[1, 0], [0, 1]]);
        assert_eq!(search_space(&d, false), 4);
        assert_eq!(search_space(&d, true), 1);
        assert_eq!(search_space(&d_of(&[[1], [-1]]), true), 0);
    }

    #[test]
    fn all_coverings_ascending() {
        let d = d_of(&[[1, 1], [-1, 1]]);
        let all: Vec<_> = all_coverings(&d, false).into_iter().map(|w| w.into_tuple()).collect();
        assert_eq!(all, vec![BoolTuple::from([0, 1]), BoolTuple::from([1, 1])]);
        let pruned: Vec<_> = all_coverings(&d, true).into_iter().map(|w| w.into_tuple()).collect();
        assert_eq!(all, pruned);
    }

    #[test]
    fn i_transform_examples() {
        let d = d_of(&[[1, 1], [-1, 1]]);
        let e = i_transform(&d, &[0]).unwrap();
        assert_eq!(
            e.to_matrices(),
            (vec![vec![1, 0], vec![0, 0]], vec![vec![0, 1], vec![1, 1]])
        );
        assert_eq!(i_transform(&d, &[]).unwrap(), d);
        assert_eq!(i_transform(&e, &[0]).unwrap(), d);
        assert_eq!(i_transform(&d, &[0, 0]).unwrap(), e);
        assert_eq!(
            i_transform(&d, &[2]),
            Err(CoveringError::IndexOutOfRange { index: 2, n: 2 })
        );
    }

    #[test]
    fn normalize_examples() {
        let d = d_of(&[[1, 1], [-1, 1]]);
        let w = CoveringWitness::new(&d, BoolTuple::from([0, 1])).unwrap();

        let (e, w0) = normalize_covering(&d, &w, false).unwrap();
        assert_eq!(e, i_transform(&d, &[1]).unwrap());
        assert_eq!(w0.tuple(), &BoolTuple::from([0, 0]));
        assert!(is_covering(&e, w0.tuple()).unwrap());

        let (e, w1) = normalize_covering(&d, &w, true).unwrap();
        assert_eq!(e, i_transform(&d, &[0]).unwrap());
        assert_eq!(w1.tuple(), &BoolTuple::from([1, 1]));
        assert!(is_covering(&e, w1.tuple()).unwrap());

        let constant = CoveringWitness::new(&e, BoolTuple::from([1, 1])).unwrap();
        let (same, _) = normalize_covering(&e, &constant, true).unwrap();
        assert_eq!(same, e);

        let bogus = CoveringWitness::new_unchecked(BoolTuple::from([1, 0]));
        assert!(matches!(
            normalize_covering(&d, &bogus, false),
            Err(CoveringError::NotCovering(_))
        ));
    }
}
