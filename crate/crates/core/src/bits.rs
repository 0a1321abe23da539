//! Row-major bit matrix with rows packed into `u64` words.
//!
//! Used for the two 0/1 matrices of a decomposition. Rows are the unit of
//! work almost everywhere (selected components, unions, swaps), so each row
//! occupies a contiguous run of words and unused high bits of the last word
//! are always zero.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    #[inline]
    fn locate(&self, row: usize, col: usize) -> (usize, u64) {
        debug_assert!(row < self.rows && col < self.cols);
        (
            row * self.words_per_row + col / WORD,
            1u64 << (col % WORD),
        )
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        let (idx, mask) = self.locate(row, col);
        self.data[idx] & mask != 0
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        let (idx, mask) = self.locate(row, col);
        if value {
            self.data[idx] |= mask;
        } else {
            self.data[idx] &= !mask;
        }
    }

    pub fn row(&self, row: usize) -> &[u64] {
        let start = row * self.words_per_row;
        &self.data[start..start + self.words_per_row]
    }

    pub fn row_mut(&mut self, row: usize) -> &mut [u64] {
        let start = row * self.words_per_row;
        &mut self.data[start..start + self.words_per_row]
    }

    pub fn row_is_zero(&self, row: usize) -> bool {
        self.row(row).iter().all(|&w| w == 0)
    }

    pub fn row_count_ones(&self, row: usize) -> usize {
        self.row(row).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Columns set in `row`, ascending.
    pub fn row_ones(&self, row: usize) -> Ones<'_> {
        Ones::new(self.row(row))
    }

    pub fn clear_row(&mut self, row: usize) {
        self.row_mut(row).fill(0);
    }

    /// Exchanges row `row` of `self` with row `row` of `other`.
    pub fn swap_row_with(&mut self, other: &mut BitMatrix, row: usize) {
        debug_assert_eq!(self.words_per_row, other.words_per_row);
        let start = row * self.words_per_row;
        let end = start + self.words_per_row;
        self.data[start..end].swap_with_slice(&mut other.data[start..end]);
    }

    pub fn from_rows<R: AsRef<[bool]>>(rows: &[R], cols: usize) -> Self {
        let mut out = BitMatrix::new(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            for (c, &bit) in row.as_ref().iter().enumerate() {
                if bit {
                    out.set(r, c, true);
                }
            }
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) as u8).collect())
            .collect()
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut list = f.debug_list();
        for r in 0..self.rows {
            let s: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            list.entry(&format_args!("{s}"));
        }
        list.finish()
    }
}

pub(crate) fn words_for(cols: usize) -> usize {
    cols.div_ceil(WORD)
}

/// Mask with the low `cols % 64` bits of the final word set (all bits when
/// the width is a whole number of words).
pub(crate) fn last_word_mask(cols: usize) -> u64 {
    match cols % WORD {
        0 => !0,
        rem => (1u64 << rem) - 1,
    }
}

/// Whether a packed row of width `cols` has every bit set.
pub(crate) fn is_full(words: &[u64], cols: usize) -> bool {
    match words.split_last() {
        None => cols == 0,
        Some((last, rest)) => {
            rest.iter().all(|&w| w == !0) && *last & last_word_mask(cols) == last_word_mask(cols)
        }
    }
}

/// Index of the lowest zero bit below `cols`, if any.
pub(crate) fn first_zero(words: &[u64], cols: usize) -> Option<usize> {
    for (k, &w) in words.iter().enumerate() {
        if w != !0 {
            let col = k * WORD + (!w).trailing_zeros() as usize;
            return (col < cols).then_some(col);
        }
    }
    None
}

pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Ones<'a> {
    fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}
