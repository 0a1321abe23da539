use std::fmt;

use thiserror::Error;

use crate::decomposition::{CoveringWitness, Decomposition};

/// One admissible or extended-admissible rewrite of a decomposition.
///
/// `side` fields pick a component of a pair (`false` = `M^0`, `true` =
/// `M^1`). All indices are zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChangeOp {
    /// Drop `element` from the non-selected component `M_pair^side`.
    RemoveElem {
        pair: usize,
        side: bool,
        element: usize,
    },
    /// Put `element`, which lies in neither component of `pair`, into
    /// `M_pair^side`.
    AddElem {
        pair: usize,
        side: bool,
        element: usize,
    },
    /// Take `element` out of one selected component and put it into another.
    /// When the target already holds it this is a removal.
    MoveElem {
        from_pair: usize,
        from_side: bool,
        to_pair: usize,
        to_side: bool,
        element: usize,
    },
    /// Swap the components of `pair`; the working tuple flips bit `pair`.
    FlipPair { pair: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StepCounts {
    pub removes: usize,
    pub adds: usize,
    pub moves: usize,
    pub flips: usize,
}

impl StepCounts {
    pub fn of(steps: &[ChangeOp]) -> Self {
        let mut c = StepCounts::default();
        for op in steps {
            match op {
                ChangeOp::RemoveElem { .. } => c.removes += 1,
                ChangeOp::AddElem { .. } => c.adds += 1,
                ChangeOp::MoveElem { .. } => c.moves += 1,
                ChangeOp::FlipPair { .. } => c.flips += 1,
            }
        }
        c
    }

    pub fn total(&self) -> usize {
        self.removes + self.adds + self.moves + self.flips
    }
}

impl fmt::Display for ChangeOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = |s: bool| s as u8;
        match *self {
            ChangeOp::RemoveElem {
                pair,
                side,
                element,
            } => write!(f, "RM {} {} {}", pair + 1, b(side), element + 1),
            ChangeOp::AddElem {
                pair,
                side,
                element,
            } => write!(f, "ADD {} {} {}", pair + 1, b(side), element + 1),
            ChangeOp::MoveElem {
                from_pair,
                from_side,
                to_pair,
                to_side,
                element,
            } => write!(
                f,
                "MV {} {} {} {} {}",
                from_pair + 1,
                b(from_side),
                to_pair + 1,
                b(to_side),
                element + 1
            ),
            ChangeOp::FlipPair { pair } => write!(f, "FLIP {}", pair + 1),
        }
    }
}

/// A violated admissibility condition. Indices are zero-based; messages are
/// one-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChangeError {
    #[error("tuple has length {found}, expected {expected}")]
    WitnessLength { expected: usize, found: usize },
    #[error("the working tuple does not cover the decomposition")]
    NotCovering,
    #[error("pair {} out of range 1..={n}", .pair + 1)]
    PairOutOfRange { pair: usize, n: usize },
    #[error("element {} out of range 1..={m}", .element + 1)]
    ElementOutOfRange { element: usize, m: usize },
    #[error("element {} is not in M_{}^{}", .element + 1, .pair + 1, *.side as u8)]
    NotMember {
        pair: usize,
        side: bool,
        element: usize,
    },
    #[error("M_{}^{} is selected by the covering and cannot lose elements by removal", .pair + 1, *.side as u8)]
    SelectedComponent { pair: usize, side: bool },
    #[error("M_{}^{} is not selected by the covering", .pair + 1, *.side as u8)]
    NotSelected { pair: usize, side: bool },
    #[error("pair {} would have both components empty", .pair + 1)]
    PairWouldBeEmpty { pair: usize },
    #[error("element {} would no longer be covered", .element + 1)]
    WouldUncover { element: usize },
    #[error("element {} already lies in pair {}", .element + 1, .pair + 1)]
    AlreadyInPair { pair: usize, element: usize },
    #[error("element {} lies in the opposite component M_{}^{}", .element + 1, .pair + 1, *.side as u8)]
    InOppositeComponent {
        pair: usize,
        side: bool,
        element: usize,
    },
}

/// Applies `op` to copies of `d` and `w`.
///
/// ```
/// use speccover::{convert, transform::{apply_change, ChangeOp}, BoolTuple, CnfMatrix, CoveringWitness};
///
/// // (x1 ∨ x2) ∧ (¬x1 ∨ x2), covering (0, 1)
/// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
/// let d = convert::cnf_to_decomposition(&f);
/// let w = CoveringWitness::new(&d, BoolTuple::from([0, 1])).unwrap();
/// let op = ChangeOp::RemoveElem { pair: 0, side: true, element: 0 };
/// let (d2, _) = apply_change(&d, &w, op).unwrap();
/// assert_eq!(convert::decomposition_to_cnf(&d2).to_rows(), vec![vec![0, 1], vec![-1, 1]]);
/// ```
pub fn apply_change(
    d: &Decomposition,
    w: &CoveringWitness,
    op: ChangeOp,
) -> Result<(Decomposition, CoveringWitness), ChangeError> {
    let (mut d, mut w) = (d.clone(), w.clone());
    apply_in_place(&mut d, &mut w, op)?;
    Ok((d, w))
}

/// Checks the preconditions of `op` against the current state, then applies
/// it. On error nothing is modified.
pub fn apply_in_place(
    d: &mut Decomposition,
    w: &mut CoveringWitness,
    op: ChangeOp,
) -> Result<(), ChangeError> {
    let t = w.tuple();
    if t.len() != d.n() {
        return Err(ChangeError::WitnessLength {
            expected: d.n(),
            found: t.len(),
        });
    }
    if !d.covered_by(t) {
        return Err(ChangeError::NotCovering);
    }
    check(d, w, op)?;
    match op {
        ChangeOp::RemoveElem {
            pair,
            side,
            element,
        } => d.set(pair, side, element, false),
        ChangeOp::AddElem {
            pair,
            side,
            element,
        } => d.set(pair, side, element, true),
        ChangeOp::MoveElem {
            from_pair,
            from_side,
            to_pair,
            to_side,
            element,
        } => {
            d.set(from_pair, from_side, element, false);
            d.set(to_pair, to_side, element, true);
        }
        ChangeOp::FlipPair { pair } => {
            d.swap_pair(pair);
            w.flip(pair);
        }
    }
    Ok(())
}

fn check(d: &Decomposition, w: &CoveringWitness, op: ChangeOp) -> Result<(), ChangeError> {
    let (n, m) = (d.n(), d.m());
    let pair_ok = |pair: usize| {
        if pair < n {
            Ok(())
        } else {
            Err(ChangeError::PairOutOfRange { pair, n })
        }
    };
    let element_ok = |element: usize| {
        if element < m {
            Ok(())
        } else {
            Err(ChangeError::ElementOutOfRange { element, m })
        }
    };
    // would the pair still hold something once `element` leaves `side`?
    let survives = |pair: usize, side: bool| {
        d.side(side).row_count_ones(pair) > 1 || !d.side(!side).row_is_zero(pair)
    };

    match op {
        ChangeOp::RemoveElem {
            pair,
            side,
            element,
        } => {
            pair_ok(pair)?;
            element_ok(element)?;
            if !d.contains(pair, side, element) {
                return Err(ChangeError::NotMember {
                    pair,
                    side,
                    element,
                });
            }
            if w.selects(pair, side) {
                return Err(ChangeError::SelectedComponent { pair, side });
            }
            if !survives(pair, side) {
                return Err(ChangeError::PairWouldBeEmpty { pair });
            }
            if !d.covered_elsewhere(w.tuple(), element, pair) {
                return Err(ChangeError::WouldUncover { element });
            }
        }
        ChangeOp::AddElem {
            pair,
            side: _,
            element,
        } => {
            pair_ok(pair)?;
            element_ok(element)?;
            if d.side_of(pair, element).is_some() {
                return Err(ChangeError::AlreadyInPair { pair, element });
            }
        }
        ChangeOp::MoveElem {
            from_pair,
            from_side,
            to_pair,
            to_side,
            element,
        } => {
            pair_ok(from_pair)?;
            pair_ok(to_pair)?;
            element_ok(element)?;
            for (pair, side) in [(from_pair, from_side), (to_pair, to_side)] {
                if !w.selects(pair, side) {
                    return Err(ChangeError::NotSelected { pair, side });
                }
            }
            if !d.contains(from_pair, from_side, element) {
                return Err(ChangeError::NotMember {
                    pair: from_pair,
                    side: from_side,
                    element,
                });
            }
            if d.contains(to_pair, !to_side, element) {
                return Err(ChangeError::InOppositeComponent {
                    pair: to_pair,
                    side: !to_side,
                    element,
                });
            }
            if from_pair != to_pair && !survives(from_pair, from_side) {
                return Err(ChangeError::PairWouldBeEmpty { pair: from_pair });
            }
        }
        ChangeOp::FlipPair { pair } => pair_ok(pair)?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::{cnf_to_decomposition, decomposition_to_cnf};
    use crate::{BoolTuple, CnfMatrix};

    fn setup<const N: usize>(rows: &[[i32; N]], t: &[u8]) -> (Decomposition, CoveringWitness) {
        let d = cnf_to_decomposition(&CnfMatrix::new(rows).unwrap());
        let t = BoolTuple::new(t.iter().map(|&b| b == 1).collect());
        let w = CoveringWitness::new(&d, t).unwrap();
        (d, w)
    }

    fn rows(d: &Decomposition) -> Vec<Vec<i8>> {
        decomposition_to_cnf(d).to_rows()
    }

    #[test]
    fn remove_from_non_selected() {
        let (d, w) = setup(&[[1, 1], [-1, 1]], &[0, 1]);
        let op = ChangeOp::RemoveElem {
            pair: 0,
            side: true,
            element: 0,
        };
        let (d2, w2) = apply_change(&d, &w, op).unwrap();
        assert_eq!(rows(&d2), vec![vec![0, 1], vec![-1, 1]]);
        assert_eq!(w2, w);
        assert!(d2.covered_by(w2.tuple()));
    }

    #[test]
    fn add_fresh_element() {
        let (d, w) = setup(&[[1, 0], [0, 1]], &[1, 1]);
        let op = ChangeOp::AddElem {
            pair: 0,
            side: true,
            element: 1,
        };
        let (d2, _) = apply_change(&d, &w, op).unwrap();
        assert_eq!(rows(&d2), vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn move_into_holder_is_removal() {
        let (d, w) = setup(&[[1, 1], [-1, 1]], &[0, 1]);
        let op = ChangeOp::MoveElem {
            from_pair: 0,
            from_side: false,
            to_pair: 1,
            to_side: true,
            element: 1,
        };
        let (d2, _) = apply_change(&d, &w, op).unwrap();
        assert_eq!(rows(&d2), vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn flip_swaps_literals_and_tuple() {
        let (d, w) = setup(&[[1, 1], [-1, 1]], &[0, 1]);
        let (d2, w2) = apply_change(&d, &w, ChangeOp::FlipPair { pair: 0 }).unwrap();
        assert_eq!(rows(&d2), vec![vec![-1, 1], vec![1, 1]]);
        assert_eq!(w2.tuple(), &BoolTuple::from([1, 1]));
        assert!(d2.covered_by(w2.tuple()));
    }

    #[test]
    fn each_violated_condition_is_named() {
        let (d, w) = setup(&[[1, 1], [-1, 1]], &[0, 1]);
        let cases = [
            (
                ChangeOp::RemoveElem {
                    pair: 1,
                    side: true,
                    element: 0,
                },
                ChangeError::SelectedComponent {
                    pair: 1,
                    side: true,
                },
            ),
            (
                ChangeOp::RemoveElem {
                    pair: 0,
                    side: true,
                    element: 1,
                },
                ChangeError::NotMember {
                    pair: 0,
                    side: true,
                    element: 1,
                },
            ),
            (
                ChangeOp::AddElem {
                    pair: 1,
                    side: false,
                    element: 0,
                },
                ChangeError::AlreadyInPair {
                    pair: 1,
                    element: 0,
                },
            ),
            (
                ChangeOp::MoveElem {
                    from_pair: 0,
                    from_side: true,
                    to_pair: 1,
                    to_side: true,
                    element: 0,
                },
                ChangeError::NotSelected {
                    pair: 0,
                    side: true,
                },
            ),
            (
                ChangeOp::MoveElem {
                    from_pair: 1,
                    from_side: true,
                    to_pair: 0,
                    to_side: false,
                    element: 0,
                },
                ChangeError::InOppositeComponent {
                    pair: 0,
                    side: true,
                    element: 0,
                },
            ),
            (
                ChangeOp::FlipPair { pair: 2 },
                ChangeError::PairOutOfRange { pair: 2, n: 2 },
            ),
            (
                ChangeOp::AddElem {
                    pair: 0,
                    side: false,
                    element: 5,
                },
                ChangeError::ElementOutOfRange { element: 5, m: 2 },
            ),
        ];
        for (op, err) in cases {
            assert_eq!(apply_change(&d, &w, op), Err(err), "{op}");
        }
    }

    #[test]
    fn remove_cannot_empty_a_pair() {
        // (x1 ∨ x2) ∧ (x2): pair 1 = (∅, {c1}); with x1 = 0 its only element
        // sits in the non-selected component
        let (d, w) = setup(&[[1, 1], [0, 1]], &[0, 1]);
        let op = ChangeOp::RemoveElem {
            pair: 0,
            side: true,
            element: 0,
        };
        assert_eq!(
            apply_change(&d, &w, op),
            Err(ChangeError::PairWouldBeEmpty { pair: 0 })
        );
    }

    #[test]
    fn move_cannot_empty_source_pair() {
        // (x1 ∨ x2), tuple (1, 1): moving c1 out of M_1^1 empties pair 1
        let (d, w) = setup(&[[1, 1]], &[1, 1]);
        let op = ChangeOp::MoveElem {
            from_pair: 0,
            from_side: true,
            to_pair: 1,
            to_side: true,
            element: 0,
        };
        assert_eq!(
            apply_change(&d, &w, op),
            Err(ChangeError::PairWouldBeEmpty { pair: 0 })
        );
    }

    #[test]
    fn rejects_witness_that_does_not_cover() {
        let (d, _) = setup(&[[1, 1], [-1, 1]], &[0, 1]);
        let bad = CoveringWitness::new_unchecked(BoolTuple::from([1, 0]));
        assert_eq!(
            apply_change(&d, &bad, ChangeOp::FlipPair { pair: 0 }),
            Err(ChangeError::NotCovering)
        );
    }

    #[test]
    fn display_is_one_based() {
        let op = ChangeOp::MoveElem {
            from_pair: 0,
            from_side: false,
            to_pair: 1,
            to_side: true,
            element: 1,
        };
        assert_eq!(op.to_string(), "MV 1 0 2 1 2");
    }
}
