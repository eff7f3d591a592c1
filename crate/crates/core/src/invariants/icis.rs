//! Milnor numbers of isolated complete intersection singularities.
//!
//! The engine cannot compute Betti numbers directly; it computes `μ` by the
//! Lê–Greuel recursion instead: for an ICIS `X = V(f₁,…,f_k)` of positive
//! dimension and a generic linear form `l`,
//!
//! ```text
//! μ(X) + μ(X ∩ l⁻¹(0)) = colength( (f₁,…,f_k) + maximal minors of Jac(f₁,…,f_k,l) )
//! ```
//!
//! with everything measured in the local ring at the origin.  Slicing by
//! `l` eliminates one variable, so the recursion terminates at a
//! zero-dimensional complete intersection, where `μ = colength − 1`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{colength, germ_dimension, jacobian, minors, Ideal, PolyMatrix};
use crate::invariants::GENERICITY_RETRIES;
use crate::limits::ResourceLimits;
use crate::poly::{generic_linear_form, MonomialOrder, Poly, VarContext};

/// A complete-intersection presentation: `codim` equations cutting a germ
/// of codimension `codim` at the origin.
#[derive(Debug, Clone)]
pub struct IcisPresentation {
    ctx: VarContext,
    equations: Vec<Poly>,
    codim: usize,
}

impl IcisPresentation {
    /// The equation count must match the claimed codimension and every
    /// equation must vanish at the origin; whether the germ really is an
    /// ICIS is verified when a Milnor number is requested.
    pub fn new(ctx: &VarContext, equations: Vec<Poly>, codim: usize) -> Result<IcisPresentation> {
        if equations.len() != codim {
            return Err(Error::NotIcis(format!(
                "{} equations cannot present a complete intersection of codimension {codim}",
                equations.len()
            )));
        }
        if codim == 0 || codim > ctx.len() {
            return Err(Error::NotIcis(format!(
                "codimension {codim} outside 1..={} variables",
                ctx.len()
            )));
        }
        for eq in &equations {
            assert_eq!(eq.ctx(), ctx, "equation in a foreign variable context");
            if !eq.constant_term().is_zero() {
                return Err(Error::NotIcis("an equation does not vanish at the origin".into()));
            }
        }
        Ok(IcisPresentation { ctx: ctx.clone(), equations, codim })
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn equations(&self) -> &[Poly] {
        &self.equations
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Expected dimension `N − codim`.
    pub fn dim(&self) -> usize {
        self.ctx.len() - self.codim
    }
}

/// Milnor number of an ICIS by the Lê–Greuel recursion.
///
/// Verifies the presentation first: the germ must have the claimed
/// codimension and its singular locus (Jacobian criterion) must be at most
/// the origin.  Genericity of the slicing forms is verified per level and
/// retried with incremented seeds.
pub fn milnor_icis(x: &IcisPresentation, seed: u64, limits: &ResourceLimits) -> Result<u64> {
    let ideal = Ideal::new(&x.ctx, x.equations.clone());
    let dim = match germ_dimension(&ideal, limits) {
        Ok(d) => d,
        Err(Error::IdealIsUnit) => {
            return Err(Error::NotIcis("the origin does not lie on the variety".into()))
        }
        Err(e) => return Err(e),
    };
    if dim != x.dim() {
        return Err(Error::NotIcis(format!(
            "germ dimension is {dim}, presentation claims {}",
            x.dim()
        )));
    }
    let jac = jacobian(&x.ctx, &x.equations);
    let crit = crate::groebner::ideal_sum(
        &ideal,
        &Ideal::new(&x.ctx, minors(&jac, x.codim.min(x.ctx.len()))?),
    );
    if !colength(&crit, MonomialOrder::LocalNegDegRevLex, limits)?.is_finite() {
        return Err(Error::NotIcis("the singular locus has positive dimension".into()));
    }
    milnor_rec(&x.ctx, &x.equations, seed, limits)
}

/// One level of the recursion; `equations.len()` is the codimension at
/// every level, only the variable count shrinks.
fn milnor_rec(
    ctx: &VarContext,
    equations: &[Poly],
    seed: u64,
    limits: &ResourceLimits,
) -> Result<u64> {
    let n = ctx.len();
    let k = equations.len();
    if k == n {
        // Zero-dimensional complete intersection: μ = colength − 1.
        let ideal = Ideal::new(ctx, equations.to_vec());
        return match colength(&ideal, MonomialOrder::LocalNegDegRevLex, limits)? {
            c if c.is_finite() => Ok(c.value().expect("finite").saturating_sub(1)),
            _ => Err(Error::NonIsolated("zero-dimensional slice has infinite colength".into())),
        };
    }
    if k == 1 {
        // A hypersurface level: one Jacobian colength instead of a chain of
        // slices.
        let ideal = Ideal::new(ctx, (0..n).map(|i| equations[0].partial_derivative(i)).collect());
        return match colength(&ideal, MonomialOrder::LocalNegDegRevLex, limits)? {
            c if c.is_finite() => Ok(c.value().expect("finite")),
            _ => Err(Error::NonIsolated("hypersurface slice is not isolated".into())),
        };
    }
    for retry in 0..GENERICITY_RETRIES {
        let l = generic_linear_form(ctx, seed + retry);
        // Lê–Greuel colength: equations plus the maximal minors of the
        // Jacobian augmented with the row of l.
        let mut rows: Vec<Vec<Poly>> = equations
            .iter()
            .map(|eq| (0..n).map(|i| eq.partial_derivative(i)).collect())
            .collect();
        rows.push(l.coefficients().iter().map(|c| Poly::constant(ctx, c.clone())).collect());
        let aug = PolyMatrix::new(ctx, rows)?;
        let mut gens = equations.to_vec();
        gens.extend(minors(&aug, k + 1)?);
        let lg = match colength(&Ideal::new(ctx, gens), MonomialOrder::LocalNegDegRevLex, limits)? {
            c if c.is_finite() => c.value().expect("finite"),
            _ => continue,
        };
        // Slice the equations by l and recurse one dimension down.
        let (pivot, replacement) = l.solve_zero(ctx);
        let small = ctx.without(pivot);
        let sliced: Vec<Poly> =
            equations.iter().map(|eq| eq.substitute(pivot, &replacement)).collect();
        match milnor_rec(&small, &sliced, seed, limits) {
            Ok(slice_mu) if slice_mu <= lg => return Ok(lg - slice_mu),
            Ok(_) => continue,
            Err(Error::NonIsolated(_))
            | Err(Error::GenericityExhausted(_))
            | Err(Error::DimensionMismatch(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityExhausted(GENERICITY_RETRIES as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn presentation(names: &[&str], eqs: &[&str], codim: usize) -> IcisPresentation {
        let ctx = VarContext::new(names.iter().copied()).unwrap();
        let equations = eqs.iter().map(|t| parse_poly(&ctx, t).unwrap()).collect();
        IcisPresentation::new(&ctx, equations, codim).unwrap()
    }

    #[test]
    fn presentation_validation() {
        let ctx = VarContext::new(["x", "y", "z"]).unwrap();
        let q = parse_poly(&ctx, "x^2+y^2+z^2").unwrap();
        let l = parse_poly(&ctx, "x").unwrap();
        assert!(matches!(
            IcisPresentation::new(&ctx, vec![q.clone()], 2),
            Err(Error::NotIcis(_))
        ));
        assert!(matches!(
            IcisPresentation::new(&ctx, vec![parse_poly(&ctx, "x+1").unwrap()], 1),
            Err(Error::NotIcis(_))
        ));
        assert!(IcisPresentation::new(&ctx, vec![q, l], 2).is_ok());
    }

    #[test]
    fn hypersurface_consistency() {
        let limits = ResourceLimits::default();
        let x = presentation(&["y1", "y2", "y3"], &["y1^2-y2^2+y3^2"], 1);
        assert_eq!(milnor_icis(&x, 0, &limits), Ok(1));
        let cusp = presentation(&["x", "y"], &["x^2-y^3"], 1);
        assert_eq!(milnor_icis(&cusp, 0, &limits), Ok(2));
    }

    #[test]
    fn quadric_and_hyperplane() {
        let limits = ResourceLimits::default();
        let x = presentation(&["x", "y", "z"], &["x^2+y^2+z^2", "x"], 2);
        assert_eq!(milnor_icis(&x, 0, &limits), Ok(1));
    }

    #[test]
    fn four_lines_space_curve() {
        // V(x²+y²+z², xy) is four pairwise-transverse lines through the
        // origin: δ = 4 and r = 4 branches, so μ = 2δ − r + 1 = 5 — an
        // independent count against the recursion.
        let limits = ResourceLimits::default();
        let x = presentation(&["x", "y", "z"], &["x^2+y^2+z^2", "x*y"], 2);
        assert_eq!(milnor_icis(&x, 0, &limits), Ok(5));
    }

    #[test]
    fn rejects_wrong_codimension() {
        let limits = ResourceLimits::default();
        // Two equations cutting a hypersurface (the second is in the ideal
        // of the first after a change — here simply a multiple).
        let ctx = VarContext::new(["x", "y", "z"]).unwrap();
        let f = parse_poly(&ctx, "x^2+y^2+z^2").unwrap();
        let g = parse_poly(&ctx, "x^3+x*y^2+x*z^2").unwrap();
        let x = IcisPresentation::new(&ctx, vec![f, g], 2).unwrap();
        assert!(matches!(milnor_icis(&x, 0, &limits), Err(Error::NotIcis(_))));
    }

    #[test]
    fn rejects_positive_dimensional_singular_locus() {
        let limits = ResourceLimits::default();
        let x = presentation(&["x", "y", "z"], &["x^2*y"], 1);
        assert!(matches!(milnor_icis(&x, 0, &limits), Err(Error::NotIcis(_))));
    }

    #[test]
    fn seed_stability() {
        let limits = ResourceLimits::default();
        let x = presentation(&["x", "y", "z"], &["x^2+y^2+z^2", "x*y"], 2);
        assert_eq!(
            milnor_icis(&x, 0, &limits).unwrap(),
            milnor_icis(&x, 1, &limits).unwrap()
        );
    }
}
