//! Milnor and Tjurina numbers of hypersurface germs, and the Milnor–Orlik
//! product for quasi-homogeneous ones.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{colength, Ideal};
use crate::limits::ResourceLimits;
use crate::poly::{MonomialOrder, Poly};

/// Milnor number of an isolated hypersurface germ: the colength of the
/// Jacobian ideal `(∂g/∂x₁, …, ∂g/∂x_N)` in the local ring at the origin.
pub fn milnor_hypersurface(g: &Poly, limits: &ResourceLimits) -> Result<u64> {
    if !g.constant_term().is_zero() {
        return Err(Error::NotAGerm);
    }
    let ctx = g.ctx();
    let partials: Vec<Poly> = (0..ctx.len()).map(|i| g.partial_derivative(i)).collect();
    let jacobian_ideal = Ideal::new(ctx, partials);
    match colength(&jacobian_ideal, MonomialOrder::LocalNegDegRevLex, limits)? {
        c if c.is_finite() => Ok(c.value().expect("finite")),
        _ => Err(Error::NonIsolated(
            "the Jacobian ideal has infinite colength at the origin".into(),
        )),
    }
}

/// Tjurina number of an isolated hypersurface germ: the colength of the
/// Jacobian ideal enlarged by the function itself.
pub fn tjurina_hypersurface(g: &Poly, limits: &ResourceLimits) -> Result<u64> {
    if !g.constant_term().is_zero() {
        return Err(Error::NotAGerm);
    }
    let ctx = g.ctx();
    let mut gens: Vec<Poly> = (0..ctx.len()).map(|i| g.partial_derivative(i)).collect();
    gens.push(g.clone());
    let ideal = Ideal::new(ctx, gens);
    match colength(&ideal, MonomialOrder::LocalNegDegRevLex, limits)? {
        c if c.is_finite() => Ok(c.value().expect("finite")),
        _ => Err(Error::NonIsolated(
            "the Tjurina ideal has infinite colength at the origin".into(),
        )),
    }
}

/// Milnor number of a quasi-homogeneous isolated germ from its weights
/// alone: `μ = ∏ᵢ (1/wᵢ − 1)`.
///
/// This is a genuinely independent route — no Gröbner bases, no staircase —
/// so it serves as an oracle for [`milnor_hypersurface`] on the
/// quasi-homogeneous corpus.  The product must come out a non-negative
/// integer; anything else means the weights do not belong to an isolated
/// quasi-homogeneous germ.
pub fn milnor_orlik_oracle(weights: &[BigRational]) -> Result<u64> {
    let mut product = BigRational::one();
    for w in weights {
        if !w.is_positive() {
            return Err(Error::OutOfRange(format!("weight {w} is not positive")));
        }
        product *= w.recip() - BigRational::one();
    }
    if !product.is_integer() || product.is_negative() {
        return Err(Error::NonIntegerResult);
    }
    let int = product.to_integer();
    u64::try_from(&int).map_err(|_| Error::NonIntegerResult)
}
