//! Admissible changes of decompositions and the traces built from them.

mod change;
mod generate;
mod trace;

pub use change::{apply_change, apply_in_place, ChangeError, ChangeOp, StepCounts};
pub use generate::{generate_trace, generate_trace_extended, same_class, GenerateError};
pub use trace::{replay, replay_with, ReplayError, Replayer, Trace};
