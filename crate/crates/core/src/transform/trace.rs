use thiserror::Error;

use crate::cnf::CnfMatrix;
use crate::convert::{cnf_to_decomposition, decomposition_to_cnf};
use crate::decomposition::{CoveringWitness, Decomposition};
use crate::ops::OpCounter;
use crate::tuple::BoolTuple;

use super::change::{apply_in_place, ChangeError, ChangeOp, StepCounts};

/// A sequence of changes starting from a function satisfied by `sigma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub n: usize,
    pub m: usize,
    pub sigma: BoolTuple,
    pub steps: Vec<ChangeOp>,
    /// Elementary operations spent producing the trace, when known.
    pub ops: Option<OpCounter>,
}

impl Trace {
    pub fn new(n: usize, m: usize, sigma: BoolTuple) -> Self {
        Trace {
            n,
            m,
            sigma,
            steps: Vec::new(),
            ops: None,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn counts(&self) -> StepCounts {
        StepCounts::of(&self.steps)
    }

    /// The working tuple after every flip has been applied.
    pub fn final_tuple(&self) -> BoolTuple {
        let mut t = self.sigma.clone();
        for op in &self.steps {
            if let ChangeOp::FlipPair { pair } = *op {
                if pair < t.len() {
                    t.flip(pair);
                }
            }
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("trace is for {}x{} (clauses x variables), function is {}x{}", .found.1, .found.0, .expected.1, .expected.0)]
    HeaderMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("starting tuple has length {found}, expected {expected}")]
    TupleLength { expected: usize, found: usize },
    #[error("starting tuple {0} does not satisfy the function")]
    NotSatisfied(BoolTuple),
    #[error("step {} ({op}) is not admissible: {source}", .index + 1)]
    Inadmissible {
        index: usize,
        op: ChangeOp,
        source: ChangeError,
    },
}

/// Steps through a trace one change at a time.
///
/// ```
/// use speccover::{BoolTuple, CnfMatrix};
/// use speccover::transform::{ChangeOp, Replayer};
///
/// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
/// let mut r = Replayer::new(&f, &BoolTuple::from([0, 1])).unwrap();
/// r.step(ChangeOp::FlipPair { pair: 0 }).unwrap();
/// assert_eq!(r.cnf().to_rows(), vec![vec![-1, 1], vec![1, 1]]);
/// assert_eq!(r.tuple(), &BoolTuple::from([1, 1]));
/// ```
#[derive(Debug, Clone)]
pub struct Replayer {
    d: Decomposition,
    w: CoveringWitness,
    done: usize,
}

impl Replayer {
    pub fn new(f: &CnfMatrix, sigma: &BoolTuple) -> Result<Self, ReplayError> {
        if sigma.len() != f.n() {
            return Err(ReplayError::TupleLength {
                expected: f.n(),
                found: sigma.len(),
            });
        }
        let d = cnf_to_decomposition(f);
        let w = CoveringWitness::new(&d, sigma.clone())
            .map_err(|_| ReplayError::NotSatisfied(sigma.clone()))?;
        Ok(Replayer { d, w, done: 0 })
    }

    pub fn step(&mut self, op: ChangeOp) -> Result<(), ReplayError> {
        apply_in_place(&mut self.d, &mut self.w, op).map_err(|source| ReplayError::Inadmissible {
            index: self.done,
            op,
            source,
        })?;
        self.done += 1;
        Ok(())
    }

    pub fn steps_done(&self) -> usize {
        self.done
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.d
    }

    pub fn tuple(&self) -> &BoolTuple {
        self.w.tuple()
    }

    pub fn cnf(&self) -> CnfMatrix {
        decomposition_to_cnf(&self.d)
    }
}

/// Replays `trace` from `f` and returns the final function.
pub fn replay(f: &CnfMatrix, trace: &Trace) -> Result<CnfMatrix, ReplayError> {
    replay_with(f, trace, |_, _, _| {})
}

/// Like [`replay`], calling `visit(k, d, t)` after the `k`-th step (one-based)
/// and once with `k = 0` for the start.
pub fn replay_with<F>(f: &CnfMatrix, trace: &Trace, mut visit: F) -> Result<CnfMatrix, ReplayError>
where
    F: FnMut(usize, &Decomposition, &BoolTuple),
{
    if (trace.n, trace.m) != (f.n(), f.m()) {
        return Err(ReplayError::HeaderMismatch {
            expected: (f.n(), f.m()),
            found: (trace.n, trace.m),
        });
    }
    let mut r = Replayer::new(f, &trace.sigma)?;
    visit(0, r.decomposition(), r.tuple());
    for &op in &trace.steps {
        r.step(op)?;
        visit(r.steps_done(), r.decomposition(), r.tuple());
    }
    Ok(r.cnf())
}
