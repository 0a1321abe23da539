use crate::bits::BitMatrix;
use crate::decomposition::Decomposition;

use super::{content_lines, parse_header, ParseError};

/// Parses a decomposition file: `p sdec n m`, `n` rows of `sm0`, a blank
/// line, `n` rows of `sm1`.
///
/// ```
/// use speccover::io::parse_sdec;
///
/// let d = parse_sdec("p sdec 2 2\n01\n00\n\n10\n11\n").unwrap();
/// assert!(d.contains(0, false, 1));
/// ```
pub fn parse_sdec(text: &str) -> Result<Decomposition, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .by_ref()
        .find(|(_, l)| !l.is_empty())
        .ok_or_else(|| ParseError::syntax(1, "missing `p sdec` header"))?;
    let (n, m, rest) = parse_header(hline, header, "sdec")?;
    if !rest.is_empty() {
        return Err(ParseError::syntax(hline, "trailing text after header"));
    }

    let sm0 = read_block(&mut lines, hline, n, m)?;
    let (line, blank) = lines
        .next()
        .ok_or_else(|| ParseError::syntax(hline, "file ends before the separator line"))?;
    if !blank.is_empty() {
        return Err(ParseError::syntax(line, "expected a blank line between sm0 and sm1"));
    }
    let sm1 = read_block(&mut lines, hline, n, m)?;
    if let Some((line, _)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(ParseError::syntax(line, "unexpected text after sm1"));
    }
    Ok(Decomposition::from_bits(sm0, sm1)?)
}

fn read_block<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    hline: usize,
    n: usize,
    m: usize,
) -> Result<BitMatrix, ParseError> {
    let mut bits = BitMatrix::new(n, m);
    for i in 0..n {
        let (line, row) = lines
            .next()
            .ok_or_else(|| ParseError::syntax(hline, format!("file ends before row {}", i + 1)))?;
        let width = row.chars().count();
        if width != m {
            return Err(ParseError::syntax(
                line,
                format!("row has {width} entries, expected {m}"),
            ));
        }
        for (j, ch) in row.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits.set(i, j, true),
                _ => return Err(ParseError::syntax(line, format!("bad character `{ch}`"))),
            }
        }
    }
    Ok(bits)
}

/// ```
/// use speccover::{convert, io::emit_sdec, CnfMatrix};
///
/// let d = convert::cnf_to_decomposition(&CnfMatrix::new(&[[1, 1], [-1, 1]]).unwrap());
/// assert_eq!(emit_sdec(&d), "p sdec 2 2\n01\n00\n\n10\n11\n");
/// ```
pub fn emit_sdec(d: &Decomposition) -> String {
    let mut out = format!("p sdec {} {}\n", d.n(), d.m());
    for (k, side) in [d.sm0(), d.sm1()].into_iter().enumerate() {
        if k == 1 {
            out.push('\n');
        }
        for row in side.to_rows() {
            out.extend(row.iter().map(|&b| if b == 1 { '1' } else { '0' }));
            out.push('\n');
        }
    }
    out
}
