use std::fmt::Write;

use crate::transform::{ChangeOp, Trace};
use crate::tuple::BoolTuple;

use super::{content_lines, parse_header, ParseError};

/// Parses a trace file. Indices in the file are one-based.
///
/// ```
/// use speccover::io::parse_trace;
/// use speccover::transform::ChangeOp;
///
/// let t = parse_trace("p trace 2 2 sigma=01\nRM 1 1 1\n").unwrap();
/// assert_eq!(t.steps, vec![ChangeOp::RemoveElem { pair: 0, side: true, element: 0 }]);
/// ```
pub fn parse_trace(text: &str) -> Result<Trace, ParseError> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::syntax(1, "missing `p trace` header"))?;
    let (n, m, rest) = parse_header(hline, header, "trace")?;
    let sigma = match rest.as_slice() {
        [s] => s
            .strip_prefix("sigma=")
            .ok_or_else(|| ParseError::syntax(hline, "expected `sigma=<bits>`"))?
            .parse::<BoolTuple>()
            .map_err(|e| ParseError::syntax(hline, e.to_string()))?,
        _ => return Err(ParseError::syntax(hline, "expected `sigma=<bits>` after m")),
    };
    if sigma.len() != n {
        return Err(ParseError::range(
            hline,
            format!("sigma has {} bits, expected {n}", sigma.len()),
        ));
    }

    let mut trace = Trace::new(n, m, sigma);
    for (line, text) in lines {
        trace.steps.push(parse_step(line, text, n, m)?);
    }
    Ok(trace)
}

fn parse_step(line: usize, text: &str, n: usize, m: usize) -> Result<ChangeOp, ParseError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let arity = match words[0] {
        "RM" | "ADD" => 3,
        "MV" => 5,
        "FLIP" => 1,
        other => return Err(ParseError::syntax(line, format!("unknown step `{other}`"))),
    };
    if words.len() != arity + 1 {
        return Err(ParseError::syntax(
            line,
            format!("`{}` takes {arity} arguments", words[0]),
        ));
    }
    let num = |k: usize| -> Result<usize, ParseError> {
        words[k]
            .parse()
            .map_err(|_| ParseError::syntax(line, format!("bad number `{}`", words[k])))
    };
    let index = |k: usize, bound: usize, what: &str| -> Result<usize, ParseError> {
        let v = num(k)?;
        if v == 0 || v > bound {
            return Err(ParseError::range(line, format!("{what} {v} outside 1..={bound}")));
        }
        Ok(v - 1)
    };
    let side = |k: usize| -> Result<bool, ParseError> {
        match num(k)? {
            0 => Ok(false),
            1 => Ok(true),
            v => Err(ParseError::range(line, format!("side {v} is not 0 or 1"))),
        }
    };
    Ok(match words[0] {
        "RM" => ChangeOp::RemoveElem {
            pair: index(1, n, "pair")?,
            side: side(2)?,
            element: index(3, m, "element")?,
        },
        "ADD" => ChangeOp::AddElem {
            pair: index(1, n, "pair")?,
            side: side(2)?,
            element: index(3, m, "element")?,
        },
        "MV" => ChangeOp::MoveElem {
            from_pair: index(1, n, "pair")?,
            from_side: side(2)?,
            to_pair: index(3, n, "pair")?,
            to_side: side(4)?,
            element: index(5, m, "element")?,
        },
        _ => ChangeOp::FlipPair {
            pair: index(1, n, "pair")?,
        },
    })
}

/// Header plus one line per step. Operation counts are not stored.
pub fn emit_trace(trace: &Trace) -> String {
    let mut out = format!("p trace {} {} sigma={}\n", trace.n, trace.m, trace.sigma);
    for op in &trace.steps {
        writeln!(out, "{op}").unwrap();
    }
    out
}
