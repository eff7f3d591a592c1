//! Ideal arithmetic and standard bases.
//!
//! One completion engine serves both worlds: Buchberger's algorithm for
//! global orders and Mora's tangent-cone algorithm for the local order,
//! unified through ecart-aware normal forms.  On top of it sit colength,
//! dimension, minors, Jacobians, intersection, and saturation — the whole
//! commutative-algebra toolkit the singularity invariants are built from.

mod engine;
mod matrix;
mod quotient;
mod staircase;

pub use matrix::{jacobian, minors, PolyMatrix};
pub use quotient::{intersection, saturation};
pub use staircase::Colength;

use crate::error::{Error, Result};
use crate::limits::ResourceLimits;
use crate::poly::{Mono, MonomialOrder, Poly, VarContext};
use engine::{complete_basis, normal_form, EPoly};

/// A finitely generated ideal: a context plus generators, with zero
/// generators dropped on construction.  An empty generator list is the
/// zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ctx: VarContext,
    gens: Vec<Poly>,
}

impl Ideal {
    pub fn new(ctx: &VarContext, gens: Vec<Poly>) -> Ideal {
        for g in &gens {
            assert!(g.ctx() == ctx, "generator from a different variable context");
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ctx: ctx.clone(), gens }
    }

    pub fn unit(ctx: &VarContext) -> Ideal {
        Ideal::new(ctx, vec![Poly::one(ctx)])
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }
}

/// A completed basis: Gröbner basis for a global order, Mora standard
/// basis for the local one.  Leading monomials are pairwise non-divisible.
#[derive(Debug, Clone)]
pub struct StandardBasis {
    order: MonomialOrder,
    ctx: VarContext,
    polys: Vec<Poly>,
    staircase: Vec<Mono>,
    internal: Vec<EPoly>,
}

impl StandardBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn basis(&self) -> &[Poly] {
        &self.polys
    }

    /// Minimal generators of the leading-term ideal.
    pub fn staircase(&self) -> &[Mono] {
        &self.staircase
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.staircase.iter().any(|m| m.is_one())
    }

    /// Weak normal form of `f` against the basis.  Zero exactly when `f`
    /// lies in the ideal (for the local order: in the localized ideal —
    /// the reduction is of `u·f` for some unit `u` at the origin).
    pub fn reduce(&self, f: &Poly, limits: &ResourceLimits) -> Result<Poly> {
        let e = EPoly::from_poly(f, self.order.active());
        let nf = normal_form(&e, &self.internal, self.order.active(), limits)?;
        Ok(nf.to_poly(&self.ctx))
    }

    pub fn contains(&self, f: &Poly, limits: &ResourceLimits) -> Result<bool> {
        Ok(self.reduce(f, limits)?.is_zero())
    }
}

/// Complete the generators of `ideal` to a standard basis under `order`.
pub fn standard_basis(
    ideal: &Ideal,
    order: MonomialOrder,
    limits: &ResourceLimits,
) -> Result<StandardBasis> {
    let internal = complete_basis(ideal.generators(), order.active(), limits)?;
    let polys: Vec<Poly> = internal.iter().map(|e| e.to_poly(&ideal.ctx)).collect();
    let staircase: Vec<Mono> = internal.iter().map(|e| e.lead_mono().clone()).collect();
    Ok(StandardBasis { order, ctx: ideal.ctx.clone(), polys, staircase, internal })
}

/// Vector-space codimension of the ideal in its (local or global) ring:
/// the number of monomials outside the staircase.
pub fn colength(
    ideal: &Ideal,
    order: MonomialOrder,
    limits: &ResourceLimits,
) -> Result<Colength> {
    let basis = standard_basis(ideal, order, limits)?;
    Ok(colength_of(&basis))
}

/// Colength read off an already-computed basis.
pub fn colength_of(basis: &StandardBasis) -> Colength {
    let stairs: Vec<Vec<u32>> =
        basis.staircase.iter().map(|m| m.exponents().to_vec()).collect();
    staircase::colength_of_staircase(&stairs, basis.ctx.len())
}

/// Krull dimension of the affine variety of the ideal, from the global
/// staircase via maximal independent variable subsets.
pub fn krull_dimension(ideal: &Ideal, limits: &ResourceLimits) -> Result<usize> {
    dimension_under(ideal, MonomialOrder::GlobalDegRevLex, limits)
}

/// Dimension of the germ at the origin: same combinatorics as
/// `krull_dimension`, but over the local staircase, so components of the
/// variety away from the origin do not contribute.
pub fn germ_dimension(ideal: &Ideal, limits: &ResourceLimits) -> Result<usize> {
    dimension_under(ideal, MonomialOrder::LocalNegDegRevLex, limits)
}

fn dimension_under(
    ideal: &Ideal,
    order: MonomialOrder,
    limits: &ResourceLimits,
) -> Result<usize> {
    let basis = standard_basis(ideal, order, limits)?;
    let stairs: Vec<Vec<u32>> =
        basis.staircase.iter().map(|m| m.exponents().to_vec()).collect();
    staircase::dimension_of_staircase(&stairs, basis.ctx.len()).ok_or(Error::IdealIsUnit)
}

/// The ideal `A + B`: generators concatenated (exact duplicates dropped).
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Ideal {
    assert!(a.ctx == b.ctx, "sum across variable contexts");
    let mut gens = a.gens.clone();
    for g in &b.gens {
        if !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    Ideal { ctx: a.ctx.clone(), gens }
}
