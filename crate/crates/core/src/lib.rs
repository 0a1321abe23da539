//! Special decompositions of finite sets, their coverings, and the CNF
//! functions they encode.
//!
//! A CNF function with `n` variables and `m` clauses corresponds to a
//! decomposition of `{e_1, ..., e_m}` into `n` pairs of disjoint subsets.
//! Satisfying assignments correspond to coverings. The [`transform`] module
//! rewrites one function into another through small admissible changes that
//! keep a chosen assignment satisfying.

pub mod bits;
pub mod cnf;
pub mod convert;
pub mod covering;
pub mod decomposition;
pub mod error;
pub mod io;
pub mod ops;
pub mod sat;
pub mod transform;
pub mod tuple;

pub use cnf::CnfMatrix;
pub use decomposition::{data_length, CoveringWitness, DataLength, Decomposition, Universe, WitnessError};
pub use error::ValidationError;
pub use ops::OpCounter;
pub use tuple::BoolTuple;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/functions.md")]
    mod functions {}
    #[doc = include_str!("../../../book/src/decompositions.md")]
    mod decompositions {}
    #[doc = include_str!("../../../book/src/coverings.md")]
    mod coverings {}
    #[doc = include_str!("../../../book/src/changes.md")]
    mod changes {}
    #[doc = include_str!("../../../book/src/traces.md")]
    mod traces {}
    #[doc = include_str!("../../../book/src/extended.md")]
    mod extended {}
    #[doc = include_str!("../../../book/src/costs.md")]
    mod costs {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
