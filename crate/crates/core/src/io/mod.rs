//! Text formats and random instances.
//!
//! Three line-oriented formats are supported, each with a canonical emitter
//! that the matching parser inverts exactly:
//!
//! * DIMACS CNF (`p cnf n m`),
//! * decomposition files (`p sdec n m`),
//! * trace files (`p trace n m sigma=BITS`).
//!
//! Lines starting with `c` are comments in all three.

mod dimacs;
mod random;
mod sdec;
mod trace;

use thiserror::Error;

use crate::error::ValidationError;

pub use dimacs::{emit_dimacs, parse_dimacs};
pub use random::{
    random_decomposition, random_instance, random_satisfied_by, RandomError, MAX_ATTEMPTS,
};
pub use sdec::{emit_sdec, parse_sdec};
pub use trace::{emit_trace, parse_trace};

/// Line numbers are one-based; clause numbers are zero-based like the rest
/// of the API and printed one-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {message}")]
    Range { line: usize, message: String },
    #[error("clause {} contains a variable and its negation", .0 + 1)]
    Tautology(usize),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
}

impl ParseError {
    pub(crate) fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn range(line: usize, message: impl Into<String>) -> Self {
        ParseError::Range {
            line,
            message: message.into(),
        }
    }
}

/// Non-comment lines with their one-based numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.starts_with('c'))
}

/// Parses `p <kind> <n> <m> [rest...]` and returns `(n, m, rest)`.
pub(crate) fn parse_header<'a>(
    line: usize,
    text: &'a str,
    kind: &str,
) -> Result<(usize, usize, Vec<&'a str>), ParseError> {
    let mut words = text.split_whitespace();
    if words.next() != Some("p") || words.next() != Some(kind) {
        return Err(ParseError::syntax(line, format!("expected `p {kind} <n> <m>`")));
    }
    let mut number = |what: &str| -> Result<usize, ParseError> {
        words
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| ParseError::syntax(line, format!("missing or bad {what} in header")))
    };
    let n = number("variable count")?;
    let m = number("clause count")?;
    Ok((n, m, words.collect()))
}
