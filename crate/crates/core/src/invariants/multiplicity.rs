//! The multiplicity `m₀` of a germ: cut down to dimension zero with generic
//! hyperplanes and count.

use crate::error::{Error, Result};
use crate::groebner::{colength, ideal_sum, Ideal};
use crate::invariants::GENERICITY_RETRIES;
use crate::limits::ResourceLimits;
use crate::poly::{generic_linear_forms, MonomialOrder, Poly};

/// Multiplicity of `V(I)` at the origin, for a germ of dimension `d`: the
/// local colength of `I` plus `d` seeded generic linear forms.
///
/// The claimed dimension is checked from both sides: if `d−1` forms already
/// cut down to finite colength the germ has dimension below `d`; if the
/// colength stays infinite through every retry the dimension exceeds `d`
/// (a degenerate draw is indistinguishable, so the retries bound it away).
pub fn multiplicity_m0(ideal: &Ideal, d: usize, seed: u64, limits: &ResourceLimits) -> Result<u64> {
    let ctx = ideal.ctx();
    if d > ctx.len() {
        return Err(Error::DimensionMismatch(format!(
            "dimension {d} exceeds the {}-variable ambient space",
            ctx.len()
        )));
    }
    if d > 0 {
        let forms = generic_linear_forms(ctx, seed, d - 1);
        let cut = with_forms(ideal, &forms.iter().map(|f| f.as_poly(ctx)).collect::<Vec<_>>());
        if colength(&cut, MonomialOrder::LocalNegDegRevLex, limits)?.is_finite() {
            return Err(Error::DimensionMismatch(format!(
                "already finite after {} cuts: dimension is below {d}",
                d - 1
            )));
        }
    }
    for retry in 0..GENERICITY_RETRIES {
        let forms = generic_linear_forms(ctx, seed + retry, d);
        let cut = with_forms(ideal, &forms.iter().map(|f| f.as_poly(ctx)).collect::<Vec<_>>());
        if let Some(v) = colength(&cut, MonomialOrder::LocalNegDegRevLex, limits)?.value() {
            return Ok(v);
        }
    }
    Err(Error::DimensionMismatch(format!(
        "still infinite after {d} cuts and {GENERICITY_RETRIES} retries: dimension exceeds {d}"
    )))
}

fn with_forms(ideal: &Ideal, forms: &[Poly]) -> Ideal {
    if forms.is_empty() {
        return ideal.clone();
    }
    ideal_sum(ideal, &Ideal::new(ideal.ctx(), forms.to_vec()))
}
