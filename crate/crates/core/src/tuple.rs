use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A vector of bits, used both as a variable assignment and as the
/// superscript tuple choosing one component from every pair.
///
/// Tuples are ordered numerically with the first position as the most
/// significant bit, so `(0,1) < (1,0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolTuple(Vec<bool>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleParseError {
    #[error("tuple is empty")]
    Empty,
    #[error("invalid character {0:?} in bit string")]
    BadChar(char),
}

impl BoolTuple {
    pub fn new(bits: Vec<bool>) -> Self {
        BoolTuple(bits)
    }

    pub fn zeros(n: usize) -> Self {
        BoolTuple(vec![false; n])
    }

    pub fn constant(n: usize, bit: bool) -> Self {
        BoolTuple(vec![bit; n])
    }

    /// The tuple of length `n` whose numeric value is `value`.
    pub fn from_index(n: usize, value: u64) -> Self {
        BoolTuple((0..n).map(|i| (value >> (n - 1 - i)) & 1 == 1).collect())
    }

    /// Numeric value, first position most significant. `None` beyond 64 bits.
    pub fn index(&self) -> Option<u64> {
        if self.0.len() > 64 {
            return None;
        }
        Some(self.0.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        self.0[i] = bit;
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i] = !self.0[i];
    }

    pub fn with_flipped(&self, i: usize) -> Self {
        let mut t = self.clone();
        t.flip(i);
        t
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    /// Advances to the numerically next tuple; returns `false` on wrap-around.
    pub fn increment(&mut self) -> bool {
        for bit in self.0.iter_mut().rev() {
            *bit = !*bit;
            if *bit {
                return true;
            }
        }
        false
    }

    pub fn to_bitstring(&self) -> String {
        self.0.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl FromStr for BoolTuple {
    type Err = TupleParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(TupleParseError::Empty);
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(TupleParseError::BadChar(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BoolTuple)
    }
}

impl fmt::Display for BoolTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}

impl fmt::Debug for BoolTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoolTuple({})", self.to_bitstring())
    }
}

impl From<Vec<bool>> for BoolTuple {
    fn from(bits: Vec<bool>) -> Self {
        BoolTuple(bits)
    }
}

impl<const N: usize> From<[u8; N]> for BoolTuple {
    fn from(bits: [u8; N]) -> Self {
        BoolTuple(bits.iter().map(|&b| b != 0).collect())
    }
}
