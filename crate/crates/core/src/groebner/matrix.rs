//! Polynomial matrices, minors, and Jacobians.

use crate::error::{Error, Result};
use crate::poly::{Poly, VarContext};
use num_rational::BigRational;
use num_traits::Zero;

/// A rectangular matrix of polynomials over one variable context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ctx: VarContext,
    nrows: usize,
    ncols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(ctx: &VarContext, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Descriptor("matrix rows have unequal lengths".into()));
            }
            for p in row {
                if p.ctx() != ctx {
                    return Err(Error::Descriptor(
                        "matrix entry from a different variable context".into(),
                    ));
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { ctx: ctx.clone(), nrows, ncols, entries })
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.ncols + j]
    }

    /// Apply `f` to every entry.
    pub fn map<F: Fn(&Poly) -> Poly>(&self, f: F) -> PolyMatrix {
        PolyMatrix {
            ctx: self.entries.first().map(|p| f(p).ctx().clone()).unwrap_or_else(|| self.ctx.clone()),
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Evaluate every entry at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Vec<Vec<BigRational>> {
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self.entry(i, j).eval(point)).collect())
            .collect()
    }

    /// Rank of the matrix of values at a rational point, by exact Gaussian
    /// elimination.
    pub fn rank_at(&self, point: &[BigRational]) -> usize {
        let mut a = self.eval(point);
        let (m, n) = (self.nrows, self.ncols);
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in (rank + 1)..m {
                if !a[r][col].is_zero() {
                    let factor = &a[r][col] / &a[rank][col];
                    for c in col..n {
                        let v = &a[r][c] - &factor * &a[rank][c];
                        a[r][c] = v;
                    }
                }
            }
            rank += 1;
            if rank == m {
                break;
            }
        }
        rank
    }

    /// Determinant of a square matrix by Laplace expansion along the first
    /// row (matrices here are small).
    pub fn determinant(&self) -> Result<Poly> {
        if self.nrows != self.ncols {
            return Err(Error::Descriptor("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (0..self.nrows).collect();
        Ok(det_rec(self, &idx, &idx))
    }
}

fn det_rec(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Poly {
    let ctx = m.ctx();
    match rows.len() {
        0 => Poly::one(ctx),
        1 => m.entry(rows[0], cols[0]).clone(),
        2 => {
            let a = m.entry(rows[0], cols[0]).mul(m.entry(rows[1], cols[1]));
            let b = m.entry(rows[0], cols[1]).mul(m.entry(rows[1], cols[0]));
            a.sub(&b)
        }
        _ => {
            let mut acc = Poly::zero(ctx);
            let sub_rows = &rows[1..];
            for (k, &c) in cols.iter().enumerate() {
                let e = m.entry(rows[0], c);
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> =
                    cols.iter().copied().filter(|&cc| cc != c).collect();
                let cofactor = det_rec(m, sub_rows, &rest);
                let signed = e.mul(&cofactor);
                if k % 2 == 0 {
                    acc = acc.add(&signed);
                } else {
                    acc = acc.sub(&signed);
                }
            }
            acc
        }
    }
}

/// All `size`×`size` minor determinants of `m`, with row and column index
/// sets enumerated in lexicographic order (rows outer).
pub fn minors(m: &PolyMatrix, size: usize) -> Result<Vec<Poly>> {
    if size == 0 || size > m.nrows().min(m.ncols()) {
        return Err(Error::OutOfRange(format!(
            "minor size {size} out of range for a {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    let row_sets = combinations(m.nrows(), size);
    let col_sets = combinations(m.ncols(), size);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rows in &row_sets {
        for cols in &col_sets {
            out.push(det_rec(m, rows, cols));
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
        }
        cur[i] += 1;
        for j in (i + 1)..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Jacobian matrix: one row per generator, one column per variable.
pub fn jacobian(ctx: &VarContext, gens: &[Poly]) -> PolyMatrix {
    let rows: Vec<Vec<Poly>> = gens
        .iter()
        .map(|g| {
            assert!(g.ctx() == ctx, "generator from a different context");
            (0..ctx.len()).map(|i| g.partial_derivative(i)).collect()
        })
        .collect();
    PolyMatrix {
        ctx: ctx.clone(),
        nrows: gens.len(),
        ncols: ctx.len(),
        entries: rows.into_iter().flatten().collect(),
    }
}
