use thiserror::Error;

use crate::bits;
use crate::cnf::CnfMatrix;
use crate::convert::cnf_to_decomposition;
use crate::decomposition::{CoveringWitness, Decomposition};
use crate::ops::OpCounter;
use crate::sat::{self, SatError};
use crate::tuple::BoolTuple;

use super::change::{apply_in_place, ChangeError, ChangeOp};
use super::trace::Trace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("functions have shapes {f:?} and {h:?} (variables, clauses)")]
    DimensionMismatch { f: (usize, usize), h: (usize, usize) },
    #[error("tuple has length {found}, expected {expected}")]
    TupleLength { expected: usize, found: usize },
    #[error("{0} does not satisfy the source function")]
    SourceNotSatisfied(BoolTuple),
    #[error("{0} does not satisfy the target function")]
    TargetNotSatisfied(BoolTuple),
    /// With a single element no pair can change while staying admissible.
    #[error("pair {} cannot change: with one element every change is blocked", .pair + 1)]
    FrozenPair { pair: usize },
    #[error("internal error: step {} ({op}) rejected: {source}", .index + 1)]
    Inadmissible {
        index: usize,
        op: ChangeOp,
        source: ChangeError,
    },
}

/// A trace of admissible changes turning `f` into `h`, where `sigma`
/// satisfies both.
///
/// ```
/// use speccover::{transform, BoolTuple, CnfMatrix};
///
/// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
/// let h = CnfMatrix::new(&[[0, 1], [-1, 1]]).unwrap();
/// let sigma = BoolTuple::from([0, 1]);
/// let trace = transform::generate_trace(&f, &h, &sigma).unwrap();
/// assert_eq!(transform::replay(&f, &trace).unwrap(), h);
/// ```
pub fn generate_trace(
    f: &CnfMatrix,
    h: &CnfMatrix,
    sigma: &BoolTuple,
) -> Result<Trace, GenerateError> {
    check_shapes(f, h)?;
    check_tuple(f, sigma)?;
    if !eval(f, sigma) {
        return Err(GenerateError::SourceNotSatisfied(sigma.clone()));
    }
    if !eval(h, sigma) {
        return Err(GenerateError::TargetNotSatisfied(sigma.clone()));
    }
    let mut b = Builder::new(f, sigma);
    b.phases(&cnf_to_decomposition(h))?;
    Ok(b.finish(sigma.clone()))
}

/// A trace turning `f` (satisfied by `sigma`) into `h` (satisfied by
/// `delta`). Pairs where the tuples differ are flipped first.
///
/// ```
/// use speccover::{transform, BoolTuple, CnfMatrix};
///
/// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
/// let h = CnfMatrix::new(&[[-1, 1], [1, 1]]).unwrap();
/// let trace = transform::generate_trace_extended(
///     &f, &BoolTuple::from([0, 1]), &h, &BoolTuple::from([1, 1])).unwrap();
/// assert_eq!(trace.counts().flips, 1);
/// assert_eq!(transform::replay(&f, &trace).unwrap(), h);
/// ```
pub fn generate_trace_extended(
    f: &CnfMatrix,
    sigma: &BoolTuple,
    h: &CnfMatrix,
    delta: &BoolTuple,
) -> Result<Trace, GenerateError> {
    check_shapes(f, h)?;
    check_tuple(f, sigma)?;
    check_tuple(h, delta)?;
    if !eval(f, sigma) {
        return Err(GenerateError::SourceNotSatisfied(sigma.clone()));
    }
    if !eval(h, delta) {
        return Err(GenerateError::TargetNotSatisfied(delta.clone()));
    }
    let mut b = Builder::new(f, sigma);
    for i in 0..f.n() {
        b.ops.iteration();
        b.ops.compare(1);
        if sigma.get(i) != delta.get(i) {
            // rows are kept relative to the working tuple, so only its bit changes
            b.write(ChangeOp::FlipPair { pair: i })?;
        }
    }
    b.phases(&cnf_to_decomposition(h))?;
    Ok(b.finish(sigma.clone()))
}

/// Whether `sigma` satisfies both `f` and `h`, i.e. whether the two lie in
/// the same equivalence class for `sigma`.
pub fn same_class(f: &CnfMatrix, h: &CnfMatrix, sigma: &BoolTuple) -> Result<bool, SatError> {
    if (f.n(), f.m()) != (h.n(), h.m()) {
        return Err(SatError::DimensionMismatch((f.m(), f.n()), (h.m(), h.n())));
    }
    Ok(sat::evaluate(f, sigma)? && sat::evaluate(h, sigma)?)
}

fn check_shapes(f: &CnfMatrix, h: &CnfMatrix) -> Result<(), GenerateError> {
    if (f.n(), f.m()) != (h.n(), h.m()) {
        return Err(GenerateError::DimensionMismatch {
            f: (f.n(), f.m()),
            h: (h.n(), h.m()),
        });
    }
    Ok(())
}

fn check_tuple(f: &CnfMatrix, t: &BoolTuple) -> Result<(), GenerateError> {
    if t.len() != f.n() {
        return Err(GenerateError::TupleLength {
            expected: f.n(),
            found: t.len(),
        });
    }
    Ok(())
}

fn eval(f: &CnfMatrix, t: &BoolTuple) -> bool {
    sat::evaluate(f, t).unwrap_or(false)
}

struct Builder {
    d: Decomposition,
    w: CoveringWitness,
    steps: Vec<ChangeOp>,
    ops: OpCounter,
}

impl Builder {
    fn new(f: &CnfMatrix, sigma: &BoolTuple) -> Self {
        Builder {
            d: cnf_to_decomposition(f),
            w: CoveringWitness::new_unchecked(sigma.clone()),
            steps: Vec::new(),
            ops: OpCounter::new(),
        }
    }

    fn finish(self, sigma: BoolTuple) -> Trace {
        Trace {
            n: self.d.n(),
            m: self.d.m(),
            sigma,
            steps: self.steps,
            ops: Some(self.ops),
        }
    }

    fn apply(&mut self, op: ChangeOp) -> Result<(), GenerateError> {
        apply_in_place(&mut self.d, &mut self.w, op).map_err(|source| {
            GenerateError::Inadmissible {
                index: self.steps.len(),
                op,
                source,
            }
        })?;
        self.steps.push(op);
        Ok(())
    }

    /// A slot write charged as one assignment.
    fn write(&mut self, op: ChangeOp) -> Result<(), GenerateError> {
        self.ops.assign(1);
        self.apply(op)
    }

    fn sel(&self, pair: usize) -> bool {
        self.w.tuple().get(pair)
    }

    fn words(&self) -> usize {
        self.d.sm0().words_per_row()
    }

    /// Charges a word-by-word pass over one packed row: `assign` and
    /// `compare` operations per word, plus loop control past one word.
    fn charge_row(&mut self, assign: u64, compare: u64) {
        let words = self.words();
        if words > 1 {
            for _ in 0..words {
                self.ops.iteration();
            }
        }
        self.ops.assign(assign * words as u64);
        self.ops.compare(compare * words as u64);
    }

    fn charge_row_test(&mut self) {
        self.charge_row(0, 1);
    }

    /// Lowest element in neither component of `pair`.
    fn first_free(&mut self, pair: usize) -> Option<usize> {
        self.charge_row(1, 1);
        let union: Vec<u64> = self
            .d
            .sm0()
            .row(pair)
            .iter()
            .zip(self.d.sm1().row(pair))
            .map(|(a, b)| a | b)
            .collect();
        bits::first_zero(&union, self.d.m())
    }

    /// Rewrites the current decomposition into `target` with the working
    /// tuple fixed. The target must be covered by the working tuple.
    fn phases(&mut self, target: &Decomposition) -> Result<(), GenerateError> {
        let (n, m) = (self.d.n(), self.d.m());
        if m == 1 {
            return self.frozen(target);
        }
        // owner[j]: a pair whose selected target component holds e_j
        let mut owner = vec![0usize; m];

        // clear non-selected components, fill selected ones from the target
        for i in 0..n {
            let s = self.sel(i);
            self.charge_row_test();
            if self.d.side(s).row_is_zero(i) {
                self.repair(i, s)?;
            }
            for j in 0..m {
                self.ops.iteration();
                self.ops.recognize(2);
                let here = self.d.side_of(i, j);
                let want = target.side_of(i, j);
                if here == Some(!s) {
                    self.write(ChangeOp::RemoveElem {
                        pair: i,
                        side: !s,
                        element: j,
                    })?;
                }
                if want == Some(s) {
                    owner[j] = i;
                    self.ops.assign(1);
                    if here != Some(s) {
                        self.write(ChangeOp::AddElem {
                            pair: i,
                            side: s,
                            element: j,
                        })?;
                    }
                }
            }
        }

        // drop selected extras, fill non-selected components
        for i in 0..n {
            let s = self.sel(i);
            self.charge_row_test();
            if target.side(s).row_is_zero(i) {
                self.anchor(target, i, s, &owner)?;
            }
            for j in 0..m {
                self.ops.iteration();
                self.ops.recognize(2);
                let here = self.d.side_of(i, j);
                let want = target.side_of(i, j);
                if here == Some(s) && want != Some(s) {
                    self.remove_selected(i, s, j, &owner)?;
                }
                if want == Some(!s) && here != Some(!s) {
                    self.write(ChangeOp::AddElem {
                        pair: i,
                        side: !s,
                        element: j,
                    })?;
                }
            }
        }
        Ok(())
    }

    /// Give the selected component of `pair` an element so that clearing the
    /// other component cannot empty the pair.
    fn repair(&mut self, pair: usize, s: bool) -> Result<(), GenerateError> {
        let element = match self.first_free(pair) {
            Some(e) => e,
            None => {
                self.write(ChangeOp::RemoveElem {
                    pair,
                    side: !s,
                    element: 0,
                })?;
                0
            }
        };
        self.write(ChangeOp::AddElem {
            pair,
            side: s,
            element,
        })
    }

    /// The target's selected component of `pair` is empty, so the pair must
    /// hold a non-selected element before its selected ones are removed.
    fn anchor(
        &mut self,
        target: &Decomposition,
        pair: usize,
        s: bool,
        owner: &[usize],
    ) -> Result<(), GenerateError> {
        self.charge_row_test();
        let b = target
            .side(!s)
            .row_ones(pair)
            .next()
            .expect("a valid target pair is nonempty");
        self.ops.recognize(1);
        if self.d.side_of(pair, b).is_some() {
            // b is selected here: the non-selected side is empty
            if let Some(e) = self.first_free(pair) {
                self.write(ChangeOp::AddElem {
                    pair,
                    side: s,
                    element: e,
                })?;
            }
            self.remove_selected(pair, s, b, owner)?;
        }
        self.write(ChangeOp::AddElem {
            pair,
            side: !s,
            element: b,
        })
    }

    /// Drop `element` from a selected component by moving it into another
    /// selected component that already holds it.
    fn remove_selected(
        &mut self,
        pair: usize,
        s: bool,
        element: usize,
        owner: &[usize],
    ) -> Result<(), GenerateError> {
        let k = owner[element];
        self.write(ChangeOp::MoveElem {
            from_pair: pair,
            from_side: s,
            to_pair: k,
            to_side: self.sel(k),
            element,
        })
    }

    fn frozen(&mut self, target: &Decomposition) -> Result<(), GenerateError> {
        for i in 0..self.d.n() {
            self.ops.iteration();
            self.ops.recognize(2);
            self.ops.compare(1);
            if self.d.side_of(i, 0) != target.side_of(i, 0) {
                return Err(GenerateError::FrozenPair { pair: i });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{replay, replay_with};

    fn cnf<const N: usize>(rows: &[[i32; N]]) -> CnfMatrix {
        CnfMatrix::new(rows).unwrap()
    }

    fn check(f: &CnfMatrix, h: &CnfMatrix, sigma: &BoolTuple) -> Trace {
        let trace = generate_trace(f, h, sigma).unwrap();
        let end = replay_with(f, &trace, |_, d, _| assert!(d.covered_by(sigma))).unwrap();
        assert_eq!(&end, h);
        let ops = trace.ops.unwrap().total();
        assert!(ops <= 16 * (f.n() * f.m()) as u64, "{ops}");
        trace
    }

    #[test]
    fn generation_examples() {
        let f = cnf(&[[1, 1], [-1, 1]]);
        let h = cnf(&[[0, 1], [-1, 1]]);
        check(&f, &h, &BoolTuple::from([0, 1]));
        check(&f, &f, &BoolTuple::from([0, 1]));

        let f = cnf(&[[1, 0], [1, 1]]);
        let h = cnf(&[[1, 1], [1, 0]]);
        check(&f, &h, &BoolTuple::from([1, 0]));
    }

    #[test]
    fn rejects_unsatisfied_endpoints() {
        let f = cnf(&[[1, 1], [-1, 1]]);
        let h = cnf(&[[0, 1], [-1, 1]]);
        assert_eq!(
            generate_trace(&f, &h, &BoolTuple::from([1, 0])),
            Err(GenerateError::SourceNotSatisfied(BoolTuple::from([1, 0])))
        );
        let g = cnf(&[[1, -1], [1, 1]]);
        assert_eq!(
            generate_trace(&f, &g, &BoolTuple::from([0, 1])),
            Err(GenerateError::TargetNotSatisfied(BoolTuple::from([0, 1])))
        );
        assert!(matches!(
            generate_trace(&f, &cnf(&[[1]]), &BoolTuple::from([0, 1])),
            Err(GenerateError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn single_clause_functions_are_frozen() {
        let f = cnf(&[[1, 1]]);
        let h = cnf(&[[1, -1]]);
        let t = BoolTuple::from([1, 0]);
        assert_eq!(
            generate_trace(&f, &h, &t),
            Err(GenerateError::FrozenPair { pair: 1 })
        );
        assert!(generate_trace(&f, &f, &t).unwrap().is_empty());
    }

    #[test]
    fn repairs_pairs_with_empty_selected_component() {
        // pair 1 is ({c1, c2}, ∅) and x1 = 1 selects the empty side
        let f = cnf(&[[-1, 1], [-1, 1]]);
        let h = cnf(&[[1, 1], [0, 1]]);
        let sigma = BoolTuple::from([1, 1]);
        let trace = check(&f, &h, &sigma);
        assert!(trace.counts().removes >= 1);
    }

    #[test]
    fn anchors_pairs_whose_target_selected_side_is_empty() {
        let f = cnf(&[[1, 1], [1, 1]]);
        let h = cnf(&[[-1, 1], [0, 1]]);
        check(&f, &h, &BoolTuple::from([1, 1]));
        let f = cnf(&[[1, 1], [0, 1]]);
        check(&f, &h, &BoolTuple::from([1, 1]));
    }

    #[test]
    fn extended_examples() {
        let f = cnf(&[[1, 1], [-1, 1]]);
        let h = cnf(&[[-1, 1], [1, 1]]);
        let t = generate_trace_extended(&f, &BoolTuple::from([0, 1]), &h, &BoolTuple::from([1, 1]))
            .unwrap();
        assert_eq!(t.final_tuple(), BoolTuple::from([1, 1]));
        assert_eq!(replay(&f, &t).unwrap(), h);
    }

    #[test]
    fn same_class_examples() {
        let f = cnf(&[[1, 1], [-1, 1]]);
        let h = cnf(&[[0, 1], [-1, 1]]);
        assert!(same_class(&f, &h, &BoolTuple::from([0, 1])).unwrap());
        assert!(!same_class(&f, &h, &BoolTuple::from([1, 0])).unwrap());
    }
}
