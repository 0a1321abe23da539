use std::fmt::Write;

use crate::cnf::CnfMatrix;

use super::{content_lines, parse_header, ParseError};

/// Parses DIMACS CNF. Clauses may span lines; duplicate literals collapse.
///
/// ```
/// use speccover::io::parse_dimacs;
///
/// let f = parse_dimacs("c example\np cnf 2 2\n1 2 0\n-1 2 0\n").unwrap();
/// assert_eq!(f.to_rows(), vec![vec![1, 1], vec![-1, 1]]);
/// ```
pub fn parse_dimacs(text: &str) -> Result<CnfMatrix, ParseError> {
    let mut lines = content_lines(text).filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| ParseError::syntax(1, "missing `p cnf` header"))?;
    let (n, m, rest) = parse_header(hline, header, "cnf")?;
    if !rest.is_empty() {
        return Err(ParseError::syntax(hline, "trailing text after header"));
    }

    let mut rows: Vec<Vec<i8>> = Vec::with_capacity(m);
    let mut current = vec![0i8; n];
    let mut open = false;
    let mut last = hline;
    for (line, text) in lines {
        if text.starts_with('%') {
            break;
        }
        last = line;
        for word in text.split_whitespace() {
            let lit: i64 = word
                .parse()
                .map_err(|_| ParseError::syntax(line, format!("bad literal `{word}`")))?;
            if lit == 0 {
                if rows.len() == m {
                    return Err(ParseError::syntax(line, format!("more than {m} clauses")));
                }
                rows.push(std::mem::replace(&mut current, vec![0; n]));
                open = false;
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > n {
                return Err(ParseError::range(
                    line,
                    format!("literal {lit} exceeds {n} variables"),
                ));
            }
            let sign = lit.signum() as i8;
            match current[var - 1] {
                0 => current[var - 1] = sign,
                s if s == sign => {}
                _ => return Err(ParseError::Tautology(rows.len())),
            }
            open = true;
        }
    }
    if open {
        return Err(ParseError::syntax(last, "last clause is not terminated by 0"));
    }
    if rows.len() != m {
        return Err(ParseError::syntax(
            last,
            format!("header announces {m} clauses, found {}", rows.len()),
        ));
    }
    Ok(CnfMatrix::new(&rows)?)
}

/// Canonical DIMACS: header, clauses in row order, literals by variable.
///
/// ```
/// use speccover::{io::emit_dimacs, CnfMatrix};
///
/// let f = CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap();
/// assert_eq!(emit_dimacs(&f), "p cnf 2 2\n1 2 0\n-1 2 0\n");
/// ```
pub fn emit_dimacs(f: &CnfMatrix) -> String {
    let mut out = format!("p cnf {} {}\n", f.n(), f.m());
    for j in 0..f.m() {
        for lit in f.signed_literals(j) {
            write!(out, "{lit} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}
