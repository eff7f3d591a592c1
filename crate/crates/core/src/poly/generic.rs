//! Seeded genericity and quasi-homogeneity detection.
//!
//! Generic linear forms are drawn deterministically from a fixed pool of
//! small signed primes, so every "generic" choice in the engine is
//! reproducible from its seed and can be redrawn on demand when a
//! particular draw turns out to be non-generic.

use super::{Poly, VarContext};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRIMES: [i64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
    89, 97,
];

fn pool() -> Vec<BigRational> {
    let mut v = Vec::with_capacity(50);
    for p in PRIMES {
        v.push(BigRational::from(BigInt::from(p)));
        v.push(BigRational::from(BigInt::from(-p)));
    }
    v
}

pub(crate) fn seeded_constants(seed: u64, count: usize) -> Vec<BigRational> {
    let pool = pool();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| pool[rng.random_range(0..pool.len())].clone()).collect()
}

/// A linear form Σ cᵢ·xᵢ, remembered together with the seed that drew it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: Vec<BigRational>,
    seed: u64,
}

impl LinearForm {
    /// An explicit form; at least one coefficient must be non-zero.
    pub fn from_coefficients(coefficients: Vec<BigRational>) -> Result<LinearForm> {
        if coefficients.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroForm);
        }
        Ok(LinearForm { coefficients, seed: 0 })
    }

    /// Convenience: the coordinate form xᵢ in an `n`-variable space.
    pub fn coordinate(n: usize, i: usize) -> LinearForm {
        let mut coefficients = vec![BigRational::zero(); n];
        coefficients[i] = BigRational::one();
        LinearForm { coefficients, seed: 0 }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Index of a coefficient of largest magnitude (first such index).
    pub fn pivot(&self) -> usize {
        let mut best = 0;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.abs() > self.coefficients[best].abs() {
                best = i;
            }
        }
        best
    }

    pub fn as_poly(&self, ctx: &VarContext) -> Poly {
        assert_eq!(ctx.len(), self.coefficients.len(), "form arity mismatch");
        let mut acc = Poly::zero(ctx);
        for (i, c) in self.coefficients.iter().enumerate() {
            acc = acc.add(&Poly::var(ctx, i).scale(c));
        }
        acc
    }

    /// Solve `l = 0` for the pivot variable: the pivot index together with
    /// the replacement polynomial `−(1/c_pivot)·Σ_{i≠pivot} cᵢ·xᵢ`, written
    /// in the context with the pivot removed.  Substituting it eliminates
    /// the pivot variable from any polynomial restricted to the hyperplane.
    pub(crate) fn solve_zero(&self, ctx: &VarContext) -> (usize, Poly) {
        assert_eq!(ctx.len(), self.coefficients.len(), "form arity mismatch");
        let pivot = self.pivot();
        let small = ctx.without(pivot);
        let c_pivot = &self.coefficients[pivot];
        let mut replacement = Poly::zero(&small);
        let mut k = 0;
        for (i, c) in self.coefficients.iter().enumerate() {
            if i == pivot {
                continue;
            }
            if !c.is_zero() {
                let coeff = -(c / c_pivot);
                replacement = replacement.add(&Poly::var(&small, k).scale(&coeff));
            }
            k += 1;
        }
        (pivot, replacement)
    }
}

/// Draw a linear form on `ctx` with all coefficients non-zero, determined
/// entirely by `seed`.
pub fn generic_linear_form(ctx: &VarContext, seed: u64) -> LinearForm {
    let mut forms = generic_linear_forms(ctx, seed, 1);
    forms.pop().unwrap()
}

/// Draw `count` forms from one seeded stream.
pub fn generic_linear_forms(ctx: &VarContext, seed: u64, count: usize) -> Vec<LinearForm> {
    let pool = pool();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let coefficients = (0..ctx.len())
                .map(|_| pool[rng.random_range(0..pool.len())].clone())
                .collect();
            LinearForm { coefficients, seed }
        })
        .collect()
}

const WEIGHT_GRID: [(i64, i64); 6] = [(1, 1), (1, 2), (1, 3), (1, 4), (1, 6), (1, 12)];
const GRID_COMBO_CAP: usize = 10_000;

/// Positive rational weights making every term of `f` have weighted degree
/// 1, if such weights exist; `None` otherwise.  Variables absent from `f`
/// are unconstrained and receive weight 1.  Returns `(weights, degree)`
/// with the degree normalized to 1.
pub fn quasihomogeneous_weights(f: &Poly) -> Option<(Vec<BigRational>, BigRational)> {
    if f.is_zero() {
        return None;
    }
    let n = f.ctx().len();
    // distinct exponent rows of the linear system E·w = 1
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (m, _) in f.terms() {
        let mut row: Vec<BigRational> = m
            .exponents()
            .iter()
            .map(|&e| BigRational::from(BigInt::from(e)))
            .collect();
        row.push(BigRational::one());
        if !rows.contains(&row) {
            rows.push(row);
        }
    }

    // forward elimination with column pivoting over the n variable columns
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0;
    for col in 0..n {
        let Some(r) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = rows[rank][col].clone();
        for c in col..=n {
            let v = &rows[rank][c] / &inv;
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=n {
                    let v = &rows[r][c] - &factor * &rows[rank][c];
                    rows[r][c] = v;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    // an inconsistent row means no weight system at all
    for row in &rows[rank..] {
        if !row[n].is_zero() {
            return None;
        }
    }

    let free_cols: Vec<usize> =
        (0..n).filter(|&c| pivot_of_col[c].is_none()).collect();
    let combos = WEIGHT_GRID.len().checked_pow(free_cols.len() as u32);
    if combos.map(|c| c > GRID_COMBO_CAP).unwrap_or(true) {
        return None;
    }

    let grid: Vec<BigRational> = WEIGHT_GRID
        .iter()
        .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
        .collect();
    let mut choice = vec![0usize; free_cols.len()];
    loop {
        let mut w = vec![BigRational::zero(); n];
        for (k, &c) in free_cols.iter().enumerate() {
            w[c] = grid[choice[k]].clone();
        }
        for col in 0..n {
            if let Some(r) = pivot_of_col[col] {
                // row r reads: w[col] + Σ_{free c > col} rows[r][c]·w[c] = rows[r][n]
                let mut v = rows[r][n].clone();
                for &c in &free_cols {
                    if !rows[r][c].is_zero() {
                        v -= &rows[r][c] * &w[c];
                    }
                }
                w[col] = v;
            }
        }
        if w.iter().all(|wi| wi.is_positive()) && satisfies(f, &w) {
            return Some((w, BigRational::one()));
        }
        // advance the mixed-radix counter over grid choices
        let mut k = 0;
        loop {
            if k == choice.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < grid.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn satisfies(f: &Poly, w: &[BigRational]) -> bool {
    f.terms().iter().all(|(m, _)| {
        let deg: BigRational = m
            .exponents()
            .iter()
            .zip(w)
            .map(|(&e, wi)| BigRational::from(BigInt::from(e)) * wi)
            .sum();
        deg.is_one()
    })
}
