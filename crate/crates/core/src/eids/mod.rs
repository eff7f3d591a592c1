//! Matrix presentations of determinantal singularities.
//!
//! A germ is described by an [`EidsDescriptor`]: an `m×n` polynomial matrix
//! `F` over ℂᴺ together with a rank bound `t`, presenting
//! `X = F⁻¹(Mᵗ) = V(t-minors of F)`.  This module verifies that the
//! presentation really is determinantal (the codimension is the expected
//! `(m−t+1)(n−t+1)`), stratifies `X` by the rank of `F`, measures the corank
//! of the presentation at the origin, checks that the singular set is an
//! isolated complete intersection, slices by linear forms, and builds the
//! one-parameter deformations `F + s·C` used by the polar machinery.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{
    colength, germ_dimension, ideal_sum, jacobian, minors, saturation, Ideal, PolyMatrix,
};
use crate::limits::ResourceLimits;
use crate::poly::{
    seeded_constants, LinearForm, MonomialOrder, Poly, VarContext,
};

/// A determinantal presentation: `X = F⁻¹(Mᵗ) ⊂ ℂᴺ` as a germ at the origin.
///
/// Construction checks the structural invariants once, so the analysis
/// functions can assume them: `1 ≤ t ≤ min(m,n)` and `rank F(0) ≤ t−1`, the
/// latter being exactly the condition that the origin lies on `X`.
#[derive(Debug, Clone)]
pub struct EidsDescriptor {
    ctx: VarContext,
    matrix: PolyMatrix,
    t: usize,
}

impl EidsDescriptor {
    pub fn new(ctx: &VarContext, matrix: PolyMatrix, t: usize) -> Result<EidsDescriptor> {
        if matrix.ctx() != ctx {
            return Err(Error::Descriptor(
                "matrix entries live in a different variable context".into(),
            ));
        }
        let bound = matrix.nrows().min(matrix.ncols());
        if t == 0 || t > bound {
            return Err(Error::Descriptor(format!(
                "rank bound t = {t} outside 1..={bound} for a {}×{} matrix",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let origin = vec![BigRational::zero(); ctx.len()];
        let rank0 = matrix.rank_at(&origin);
        if rank0 > t - 1 {
            return Err(Error::Descriptor(format!(
                "rank of the matrix at the origin is {rank0} ≥ t = {t}, so 0 ∉ X"
            )));
        }
        Ok(EidsDescriptor { ctx: ctx.clone(), matrix, t })
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn nrows(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.matrix.ncols()
    }

    /// Ambient dimension N.
    pub fn ambient_dim(&self) -> usize {
        self.ctx.len()
    }

    /// Codimension of the generic determinantal variety of this type,
    /// `(m−t+1)(n−t+1)`; the presentation is determinantal when the actual
    /// codimension agrees.
    pub fn expected_codim(&self) -> usize {
        (self.matrix.nrows() - self.t + 1) * (self.matrix.ncols() - self.t + 1)
    }

    /// Expected dimension `d = N − (m−t+1)(n−t+1)`.  Negative values clamp
    /// to zero (the germ is then a point or empty).
    pub fn expected_dim(&self) -> usize {
        self.ambient_dim().saturating_sub(self.expected_codim())
    }

    /// The ideal of `t`-minors defining `X`.
    pub fn defining_ideal(&self) -> Ideal {
        let gens = minors(&self.matrix, self.t).expect("t within 1..=min(m,n) by construction");
        Ideal::new(&self.ctx, gens)
    }
}

/// Everything `check_determinantal` establishes about a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCheckReport {
    /// Actual codimension equals `(m−t+1)(n−t+1)`.
    pub is_determinantal: bool,
    pub codim_expected: usize,
    pub codim_actual: usize,
    /// Isolated determinantal singularity bound: `N ≤ (m−t+2)(n−t+2)`.
    pub is_ids: bool,
    /// Strict inequality `N < (m−t+2)(n−t+2)`: the germ admits a smoothing.
    pub is_smoothable: bool,
    /// Corank of the presentation at the origin.
    pub corank: usize,
    /// `N ≤ (m−t+3)(n−t+3)`: at most three rank strata meet a neighbourhood
    /// of the origin, the regime all closed-form obstruction formulas need.
    pub three_strata_ok: bool,
    /// Whether the singular set is an isolated complete intersection;
    /// `None` when `t = 1` (no singular stratum below a hypersurface rank
    /// bound) or when the verification itself exceeded resource limits.
    pub sigma_is_icis: Option<bool>,
}

/// One rank stratum closure `F⁻¹(Mⁱ) = V(i-minors)`.
#[derive(Debug, Clone)]
pub struct StratumInfo {
    /// Rank bound of the stratum closure: points where `rank F ≤ i−1`.
    pub index: usize,
    pub ideal: Ideal,
    /// `(m−i+1)(n−i+1)`, the codimension when `F` meets the rank locus
    /// transversally.
    pub expected_codim: usize,
    /// Local dimension at the origin; `None` when the germ is empty.
    pub dim: Option<usize>,
    /// The origin does not lie on this stratum closure.
    pub is_empty: bool,
}

/// Rank stratification of `X` near the origin, listed from `X` itself
/// (`index = t`) down to the rank-zero locus (`index = 1`), so dimensions
/// decrease along the list.
#[derive(Debug, Clone)]
pub struct StratificationReport {
    pub strata: Vec<StratumInfo>,
}

/// Verify the determinantal type of the presentation: compare the actual
/// local codimension of `V(t-minors)` with the expected one and fill in the
/// arithmetic predicates (IDS bound, smoothability, three-strata bound) plus
/// the corank and, for `t ≥ 2`, whether the singular set is an ICIS.
pub fn check_determinantal(x: &EidsDescriptor, limits: &ResourceLimits) -> Result<TypeCheckReport> {
    let n = x.ambient_dim();
    let m = x.nrows();
    let nc = x.ncols();
    let t = x.t();
    let codim_expected = x.expected_codim();
    let ideal = x.defining_ideal();
    let dim = if ideal.is_zero() { n } else { germ_dimension(&ideal, limits)? };
    let codim_actual = n - dim;
    let ids_bound = (m - t + 2) * (nc - t + 2);
    let sigma_is_icis = if t >= 2 {
        match verify_sigma_icis(x, limits) {
            Ok(flag) => Some(flag),
            Err(Error::ResourceLimit(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(TypeCheckReport {
        is_determinantal: codim_actual == codim_expected,
        codim_expected,
        codim_actual,
        is_ids: n <= ids_bound,
        is_smoothable: n < ids_bound,
        corank: corank_at_origin(x),
        three_strata_ok: n <= (m - t + 3) * (nc - t + 3),
        sigma_is_icis,
    })
}

/// Corank of the presentation at the origin: `m·n` minus the rank of the
/// linearization of the entries, the `mn×N` matrix of their degree-one
/// coefficients.  Computed exactly over ℚ.
pub fn corank_at_origin(x: &EidsDescriptor) -> usize {
    let n = x.ambient_dim();
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(x.nrows() * x.ncols());
    for i in 0..x.nrows() {
        for j in 0..x.ncols() {
            let mut row = vec![BigRational::zero(); n];
            for (mono, c) in x.matrix.entry(i, j).terms() {
                if mono.degree() == 1 {
                    let v = mono
                        .exponents()
                        .iter()
                        .position(|&e| e == 1)
                        .expect("degree-one monomial has one unit exponent");
                    row[v] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    x.nrows() * x.ncols() - rational_rank(rows)
}

/// Rank of a matrix over ℚ by Gaussian elimination.
fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] / &inv;
            for c in col..ncols {
                let sub = &rows[rank][c] * &factor;
                rows[r][c] = &rows[r][c] - &sub;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// The ideal of the singular set `ΣX = F⁻¹(Mᵗ⁻¹)`, i.e. the `(t−1)`-minors.
/// For `t = 1` the rank-zero bound has no stratum below it and the singular
/// set is empty: the unit ideal.
pub fn singular_set(x: &EidsDescriptor) -> Ideal {
    if x.t() == 1 {
        return Ideal::unit(x.ctx());
    }
    let gens = minors(&x.matrix, x.t() - 1).expect("t−1 within range");
    Ideal::new(x.ctx(), gens)
}

/// Drop zero generators, exact duplicates and sign-duplicates.
pub(crate) fn dedupe_signed(gens: &[Poly]) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let neg = g.neg();
        if out.iter().any(|h| *h == *g || *h == neg) {
            continue;
        }
        out.push(g.clone());
    }
    out
}

/// Check that the singular set is an isolated complete intersection
/// singularity: the (deduplicated) generators are exactly as many as the
/// codimension of their zero germ, and the Jacobian-criterion locus — the
/// generators together with the maximal minors of their Jacobian — has
/// finite colength in the local ring.
///
/// When the origin is not on the singular set at all (a smooth point of
/// `X`), the check is vacuous and returns `true`.
pub fn verify_sigma_icis(x: &EidsDescriptor, limits: &ResourceLimits) -> Result<bool> {
    if x.t() < 2 {
        return Err(Error::OutOfRange(
            "singular-set verification needs a rank bound t ≥ 2".into(),
        ));
    }
    let sigma = singular_set(x);
    let gens = dedupe_signed(sigma.generators());
    if gens.is_empty() {
        // Zero matrix: ΣX is the whole space, not a complete intersection
        // unless there are no variables at all.
        return Ok(x.ambient_dim() == 0);
    }
    let ideal = Ideal::new(x.ctx(), gens.clone());
    let dim = match germ_dimension(&ideal, limits) {
        Ok(d) => d,
        Err(Error::IdealIsUnit) => return Ok(true),
        Err(e) => return Err(e),
    };
    let codim = x.ambient_dim() - dim;
    if gens.len() != codim {
        return Ok(false);
    }
    let jac = jacobian(x.ctx(), &gens);
    let size = codim.min(x.ambient_dim());
    let crit = ideal_sum(&ideal, &Ideal::new(x.ctx(), minors(&jac, size)?));
    Ok(colength(&crit, MonomialOrder::LocalNegDegRevLex, limits)?.is_finite())
}

/// Verify essential isolation: off the origin, `F` must meet every rank
/// stratum transversally.  For each `i = 1..=t` the non-transversality locus
/// of the rank-`(i−1)` stratum closure is where the `i`-minors vanish and
/// the Jacobian of the `i`-minors drops below the expected codimension
/// `cᵢ = (m−i+1)(n−i+1)`.  That locus must be the origin at most — except
/// that points lying on the deeper stratum `V(minors(F, i−1))` are governed
/// by the deeper stratum's own check, so when the locus has positive local
/// dimension it is first saturated by the deeper stratum's ideal.
///
/// When `cᵢ` exceeds the size of the Jacobian the rank condition is
/// unsatisfiable and the stratum closure itself must be locally contained in
/// the deeper stratum plus the origin.
pub fn verify_essential_isolation(x: &EidsDescriptor, limits: &ResourceLimits) -> Result<bool> {
    let n = x.ambient_dim();
    for i in 1..=x.t() {
        let gens = dedupe_signed(&minors(&x.matrix, i)?);
        if gens.is_empty() {
            // The i-minors vanish identically: the stratum closure is all of
            // ℂᴺ and transversality fails everywhere.
            return Ok(false);
        }
        let ci = (x.nrows() - i + 1) * (x.ncols() - i + 1);
        let ideal = Ideal::new(x.ctx(), gens.clone());
        let locus = if ci > gens.len().min(n) {
            ideal.clone()
        } else {
            let jac = jacobian(x.ctx(), &gens);
            ideal_sum(&ideal, &Ideal::new(x.ctx(), minors(&jac, ci)?))
        };
        if colength(&locus, MonomialOrder::LocalNegDegRevLex, limits)?.is_finite() {
            continue;
        }
        if i == 1 {
            return Ok(false);
        }
        let deeper = Ideal::new(x.ctx(), minors(&x.matrix, i - 1)?);
        let residual = saturation(&locus, &deeper, limits)?;
        if !colength(&residual, MonomialOrder::LocalNegDegRevLex, limits)?.is_finite() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Stratify `X` by the rank of `F`: for each `i = t, t−1, …, 1` report the
/// stratum closure `V(i-minors)` with its expected codimension and its
/// actual local dimension at the origin (`None`/empty when the origin has a
/// higher matrix rank and the germ misses it).
pub fn stratification(x: &EidsDescriptor, limits: &ResourceLimits) -> Result<StratificationReport> {
    let n = x.ambient_dim();
    let mut strata = Vec::with_capacity(x.t());
    for i in (1..=x.t()).rev() {
        let ideal = Ideal::new(x.ctx(), minors(&x.matrix, i)?);
        let expected_codim = (x.nrows() - i + 1) * (x.ncols() - i + 1);
        let (dim, is_empty) = if ideal.is_zero() {
            (Some(n), false)
        } else {
            match germ_dimension(&ideal, limits) {
                Ok(d) => (Some(d), false),
                Err(Error::IdealIsUnit) => (None, true),
                Err(e) => return Err(e),
            }
        };
        strata.push(StratumInfo { index: i, ideal, expected_codim, dim, is_empty });
    }
    Ok(StratificationReport { strata })
}

/// Slice the germ by the hyperplane `l = 0`: solve for the variable with the
/// largest-magnitude coefficient and substitute, producing a descriptor of
/// the same type `(m, n, t)` in one variable fewer.
pub fn slice(x: &EidsDescriptor, l: &LinearForm) -> Result<EidsDescriptor> {
    let n = x.ambient_dim();
    if l.len() != n {
        return Err(Error::Descriptor(format!(
            "linear form has {} coefficients, ambient space has {n} variables",
            l.len()
        )));
    }
    let (pivot, replacement) = l.solve_zero(x.ctx());
    let small = x.ctx().without(pivot);
    let mut rows = Vec::with_capacity(x.nrows());
    for i in 0..x.nrows() {
        let mut row = Vec::with_capacity(x.ncols());
        for j in 0..x.ncols() {
            row.push(x.matrix.entry(i, j).substitute(pivot, &replacement));
        }
        rows.push(row);
    }
    EidsDescriptor::new(&small, PolyMatrix::new(&small, rows)?, x.t())
}

/// A one-parameter deformation `F̃ = F + s·C` with a seeded generic constant
/// matrix `C`, in the context extended by a fresh deformation variable.
/// Setting `s = 0` recovers `F`.
pub fn essential_smoothing(x: &EidsDescriptor, seed: u64) -> Result<PolyMatrix> {
    let n = x.ambient_dim();
    let ext = x.ctx().extended(&x.ctx().fresh_name("s"));
    let positions: Vec<usize> = (0..n).collect();
    let s = Poly::var(&ext, n);
    let constants = seeded_constants(seed, x.nrows() * x.ncols());
    let mut rows = Vec::with_capacity(x.nrows());
    for i in 0..x.nrows() {
        let mut row = Vec::with_capacity(x.ncols());
        for j in 0..x.ncols() {
            let c = &constants[i * x.ncols() + j];
            let deformed = x.matrix.entry(i, j).embed(&ext, &positions).add(&s.scale(c));
            row.push(deformed);
        }
        rows.push(row);
    }
    PolyMatrix::new(&ext, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ctx(names: &[&str]) -> VarContext {
        VarContext::new(names.iter().copied()).unwrap()
    }

    fn matrix(ctx: &VarContext, rows: &[&[&str]]) -> PolyMatrix {
        let rows: Vec<Vec<Poly>> = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_poly(ctx, s).unwrap()).collect())
            .collect();
        PolyMatrix::new(ctx, rows).unwrap()
    }

    fn descriptor(names: &[&str], rows: &[&[&str]], t: usize) -> EidsDescriptor {
        let c = ctx(names);
        let m = matrix(&c, rows);
        EidsDescriptor::new(&c, m, t).unwrap()
    }

    /// The 4-fold in ℂ⁶ with an extra quadratic term: on the boundary of the
    /// IDS bound, so not smoothable.
    fn cone_c6() -> EidsDescriptor {
        descriptor(
            &["x", "y", "z", "w", "v", "u"],
            &[&["x", "y", "v"], &["z", "w", "x+u^2"]],
            2,
        )
    }

    /// The smoothable determinantal surface in ℂ⁴.
    fn surface_c4() -> EidsDescriptor {
        descriptor(&["x", "y", "z", "w"], &[&["x", "y", "z"], &["y", "z", "w"]], 2)
    }

    /// The twisted surface in ℂ⁴ whose slice by w is the three coordinate
    /// axes.
    fn twisted_c4() -> EidsDescriptor {
        descriptor(&["x", "y", "z", "w"], &[&["z", "y+w", "x"], &["w", "x", "y"]], 2)
    }

    /// The corank-one sixfold in ℂ⁸ whose singular set is a quadric cone.
    fn corank1_c8() -> EidsDescriptor {
        descriptor(
            &["x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3"],
            &[&["x1", "x2", "x3"], &["x4", "x5", "x1+y1^2-y2^2+y3^2"]],
            2,
        )
    }

    #[test]
    fn descriptor_validation() {
        let c = ctx(&["x", "y", "z", "w"]);
        let m = matrix(&c, &[&["x", "y", "z"], &["y", "z", "w"]]);
        assert!(matches!(
            EidsDescriptor::new(&c, m.clone(), 0),
            Err(Error::Descriptor(_))
        ));
        assert!(matches!(
            EidsDescriptor::new(&c, m.clone(), 3),
            Err(Error::Descriptor(_))
        ));
        // Constant full-rank offset puts the origin off the variety.
        let bad = matrix(&c, &[&["x+1", "y", "z"], &["y", "z+1", "w"]]);
        assert!(matches!(
            EidsDescriptor::new(&c, bad, 1),
            Err(Error::Descriptor(_))
        ));
        // Rank exactly t−1 at the origin is allowed: a smooth point of X.
        let smooth = matrix(&c, &[&["x+1", "y", "z"], &["y", "z", "w"]]);
        assert!(EidsDescriptor::new(&c, smooth, 2).is_ok());
    }

    #[test]
    fn check_cone_c6() {
        let x = cone_c6();
        let limits = ResourceLimits::default();
        let report = check_determinantal(&x, &limits).unwrap();
        assert_eq!(report.codim_expected, 2);
        assert_eq!(report.codim_actual, 2);
        assert!(report.is_determinantal);
        assert!(report.is_ids, "6 ≤ 6 is on the IDS boundary");
        assert!(!report.is_smoothable, "boundary case admits no smoothing");
        assert!(report.three_strata_ok);
        assert_eq!(report.corank, 1, "entry (2,3) repeats the linear term x");
        assert_eq!(report.sigma_is_icis, Some(true));
    }

    #[test]
    fn check_surface_c4() {
        let x = surface_c4();
        let limits = ResourceLimits::default();
        let report = check_determinantal(&x, &limits).unwrap();
        assert_eq!(report.codim_actual, 2);
        assert!(report.is_determinantal);
        assert!(report.is_ids);
        assert!(report.is_smoothable, "4 < 6");
        assert_eq!(report.corank, 2, "six entries span only four linear forms");
        assert_eq!(report.sigma_is_icis, Some(true));
        assert_eq!(x.expected_dim(), 2);
    }

    #[test]
    fn check_corank1_c8() {
        let x = corank1_c8();
        let limits = ResourceLimits::default();
        let report = check_determinantal(&x, &limits).unwrap();
        assert_eq!(report.codim_actual, 2);
        assert!(report.is_determinantal);
        assert!(!report.is_ids, "8 > 6: the singularity is not isolated");
        assert!(!report.is_smoothable);
        assert!(report.three_strata_ok, "8 ≤ 12");
        assert_eq!(report.corank, 1);
        assert_eq!(report.sigma_is_icis, Some(true), "quadric cone is an ICIS");
    }

    #[test]
    fn point_germ_t1() {
        // Generic 1-minors in ℂ⁶: X = {0}, codimension 6.
        let x = descriptor(
            &["x", "y", "z", "w", "v", "u"],
            &[&["x", "y", "v"], &["z", "w", "u"]],
            1,
        );
        let limits = ResourceLimits::default();
        let report = check_determinantal(&x, &limits).unwrap();
        assert_eq!(report.codim_expected, 6);
        assert_eq!(report.codim_actual, 6);
        assert!(report.is_determinantal);
        assert_eq!(report.sigma_is_icis, None);
        assert!(singular_set(&x).generators()[0].is_constant());
    }

    #[test]
    fn corank_examples() {
        assert_eq!(
            corank_at_origin(&descriptor(
                &["x", "y", "z", "w", "v", "u"],
                &[&["x", "y", "v"], &["z", "w", "u"]],
                2,
            )),
            0,
            "six independent linear entries"
        );
        assert_eq!(corank_at_origin(&corank1_c8()), 1);
        let zero = descriptor(&["x", "y"], &[&["0", "0"], &["0", "0"]], 1);
        assert_eq!(corank_at_origin(&zero), 4);
    }

    #[test]
    fn stratification_dimensions_decrease() {
        let limits = ResourceLimits::default();
        for (x, dims) in [
            (surface_c4(), vec![Some(2), Some(0)]),
            (corank1_c8(), vec![Some(6), Some(2)]),
        ] {
            let report = stratification(&x, &limits).unwrap();
            let got: Vec<Option<usize>> = report.strata.iter().map(|s| s.dim).collect();
            assert_eq!(got, dims);
            assert_eq!(report.strata[0].index, 2);
            assert_eq!(report.strata[1].index, 1);
            assert_eq!(report.strata[1].expected_codim, x.nrows() * x.ncols());
        }
    }

    #[test]
    fn stratification_empty_at_smooth_point() {
        let c = ctx(&["x", "y", "z", "w"]);
        let m = matrix(&c, &[&["x+1", "y", "z"], &["y", "z", "w"]]);
        let x = EidsDescriptor::new(&c, m, 2).unwrap();
        let limits = ResourceLimits::default();
        let report = stratification(&x, &limits).unwrap();
        // Rank at the origin is 1, so the rank-zero locus misses the origin.
        assert!(report.strata[1].is_empty);
        assert_eq!(report.strata[1].dim, None);
    }

    #[test]
    fn sigma_icis_rejects_non_complete_intersection() {
        // Hankel 3×3: the 2-minors cut the cone over the rational normal
        // quartic, codimension 3 with six distinct generators.
        let x = descriptor(
            &["x", "y", "z", "w", "v"],
            &[&["x", "y", "z"], &["y", "z", "w"], &["z", "w", "v"]],
            3,
        );
        let limits = ResourceLimits::default();
        assert_eq!(verify_sigma_icis(&x, &limits).unwrap(), false);
    }

    #[test]
    fn sigma_icis_rejects_t1() {
        let x = descriptor(&["x", "y"], &[&["x^2-y^3"]], 1);
        assert!(matches!(
            verify_sigma_icis(&x, &ResourceLimits::default()),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn essential_isolation_worked_examples() {
        let limits = ResourceLimits::default();
        assert!(verify_essential_isolation(&surface_c4(), &limits).unwrap());
        assert!(verify_essential_isolation(&twisted_c4(), &limits).unwrap());
    }

    #[test]
    fn essential_isolation_rejects_nonisolated_hypersurface() {
        let limits = ResourceLimits::default();
        // x²y is singular along two lines through the origin.
        let bad = descriptor(&["x", "y"], &[&["x^2*y"]], 1);
        assert!(!verify_essential_isolation(&bad, &limits).unwrap());
        // x² − y³ in ℂ² is an isolated hypersurface singularity.
        let cusp = descriptor(&["x", "y"], &[&["x^2-y^3"]], 1);
        assert!(verify_essential_isolation(&cusp, &limits).unwrap());
    }

    #[test]
    fn slice_twisted_by_last_coordinate() {
        let x = twisted_c4();
        let l = LinearForm::coordinate(4, 3);
        let sliced = slice(&x, &l).unwrap();
        assert_eq!(sliced.ambient_dim(), 3);
        assert_eq!(sliced.ctx().names(), ["x", "y", "z"]);
        let expect = matrix(sliced.ctx(), &[&["z", "y", "x"], &["0", "x", "y"]]);
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(sliced.matrix().entry(i, j), expect.entry(i, j));
            }
        }
    }

    #[test]
    fn slice_solves_for_largest_coefficient() {
        let x = surface_c4();
        // l = x + 2w: the pivot is w, so w ↦ −x/2.
        let l = LinearForm::from_coefficients(vec![
            BigRational::from_integer(1.into()),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::from_integer(2.into()),
        ])
        .unwrap();
        let sliced = slice(&x, &l).unwrap();
        assert_eq!(sliced.ctx().names(), ["x", "y", "z"]);
        let expect = parse_poly(sliced.ctx(), "-1/2*x").unwrap();
        assert_eq!(*sliced.matrix().entry(1, 2), expect);
    }

    #[test]
    fn slice_dimension_drops() {
        let limits = ResourceLimits::default();
        let x = cone_c6();
        let sliced = slice(&x, &crate::poly::generic_linear_form(x.ctx(), 0)).unwrap();
        let report = check_determinantal(&sliced, &limits).unwrap();
        assert_eq!(report.codim_actual, 2);
        assert_eq!(sliced.ambient_dim(), 5);
        assert!(report.is_smoothable, "5 < 6 after one slice");
    }

    #[test]
    fn smoothing_restricts_to_original() {
        let x = twisted_c4();
        let deformed = essential_smoothing(&x, 7).unwrap();
        assert_eq!(deformed.ctx().names(), ["x", "y", "z", "w", "s"]);
        let zero = Poly::zero(x.ctx());
        let mut saw_s = false;
        for i in 0..2 {
            for j in 0..3 {
                let restricted = deformed.entry(i, j).substitute(4, &zero);
                assert_eq!(restricted, *x.matrix().entry(i, j));
                saw_s = saw_s || deformed.entry(i, j).support().contains(&4);
            }
        }
        assert!(saw_s, "the deformation must actually move the matrix");
    }

    #[test]
    fn smoothing_avoids_variable_capture() {
        let x = descriptor(&["s", "y"], &[&["s^2-y^3"]], 1);
        let deformed = essential_smoothing(&x, 0).unwrap();
        assert_eq!(deformed.ctx().names(), ["s", "y", "s0"]);
    }
}
