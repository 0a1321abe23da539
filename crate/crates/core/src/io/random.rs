use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bits::BitMatrix;
use crate::cnf::CnfMatrix;
use crate::decomposition::Decomposition;
use crate::sat::{self, SatError};
use crate::tuple::BoolTuple;

/// Whole-instance redraws allowed while looking for a satisfiable one.
pub const MAX_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RandomError {
    #[error("dimensions must be positive, got n = {n}, m = {m}")]
    Empty { n: usize, m: usize },
    #[error("tuple has length {found}, expected {expected}")]
    TupleLength { expected: usize, found: usize },
    #[error(transparent)]
    Sat(#[from] SatError),
    #[error("no satisfiable instance after {0} draws")]
    GaveUp(usize),
}

/// A `rows × cols` grid over `{-1, 0, 1}` with no all-zero row or column.
/// Offending rows, then columns, are redrawn until none remain.
fn draw_grid(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<i8> {
    let mut g: Vec<i8> = (0..rows * cols).map(|_| rng.gen_range(-1..=1)).collect();
    loop {
        let mut clean = true;
        for r in 0..rows {
            while g[r * cols..(r + 1) * cols].iter().all(|&v| v == 0) {
                clean = false;
                for v in &mut g[r * cols..(r + 1) * cols] {
                    *v = rng.gen_range(-1..=1);
                }
            }
        }
        for c in 0..cols {
            while (0..rows).all(|r| g[r * cols + c] == 0) {
                clean = false;
                for r in 0..rows {
                    g[r * cols + c] = rng.gen_range(-1..=1);
                }
            }
        }
        if clean {
            return g;
        }
    }
}

fn check_dims(n: usize, m: usize) -> Result<(), RandomError> {
    if n == 0 || m == 0 {
        return Err(RandomError::Empty { n, m });
    }
    Ok(())
}

/// A valid `m × n` CNF matrix, deterministic in `seed`. With
/// `require_satisfiable` the exhaustive oracle filters the draws.
///
/// ```
/// use speccover::io::random_instance;
///
/// let a = random_instance(4, 6, 7, true).unwrap();
/// assert_eq!(a, random_instance(4, 6, 7, true).unwrap());
/// assert!(speccover::sat::is_satisfiable(&a).unwrap());
/// ```
pub fn random_instance(
    n: usize,
    m: usize,
    seed: u64,
    require_satisfiable: bool,
) -> Result<CnfMatrix, RandomError> {
    check_dims(n, m)?;
    if require_satisfiable && n > sat::max_n() {
        return Err(SatError::TooLarge(n, sat::max_n()).into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let f = CnfMatrix::from_cells_unchecked(n, m, draw_grid(&mut rng, m, n));
        if !require_satisfiable || sat::is_satisfiable(&f)? {
            return Ok(f);
        }
    }
    Err(RandomError::GaveUp(MAX_ATTEMPTS))
}

/// A valid CNF matrix satisfied by `sigma`, without calling the oracle: each
/// clause `sigma` falsifies gets one cell rewritten to the literal `sigma`
/// makes true.
pub fn random_satisfied_by(
    m: usize,
    sigma: &BoolTuple,
    seed: u64,
) -> Result<CnfMatrix, RandomError> {
    let n = sigma.len();
    check_dims(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells = draw_grid(&mut rng, m, n);
    for clause in cells.chunks_mut(n) {
        let sat = clause
            .iter()
            .zip(sigma.iter())
            .any(|(&c, v)| (c == 1 && v) || (c == -1 && !v));
        if !sat {
            let i = rng.gen_range(0..n);
            clause[i] = if sigma.get(i) { 1 } else { -1 };
        }
    }
    Ok(CnfMatrix::from_cells_unchecked(n, m, cells))
}

/// A valid decomposition drawn slot by slot: each `(pair, element)` goes to
/// `M^0`, `M^1` or neither.
pub fn random_decomposition(n: usize, m: usize, seed: u64) -> Result<Decomposition, RandomError> {
    check_dims(n, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = draw_grid(&mut rng, n, m);
    let mut sm0 = BitMatrix::new(n, m);
    let mut sm1 = BitMatrix::new(n, m);
    for (k, &v) in g.iter().enumerate() {
        match v {
            -1 => sm0.set(k / m, k % m, true),
            1 => sm1.set(k / m, k % m, true),
            _ => {}
        }
    }
    Ok(Decomposition::from_bits_unchecked(sm0, sm1))
}
