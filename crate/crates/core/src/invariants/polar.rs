//! The polar multiplicity `m_d`: the number of critical points of a generic
//! linear function on the Milnor fiber of an essential smoothing.
//!
//! For a smoothable germ `X = F⁻¹(Mᵗ)` the one-parameter family
//! `F̃ = F + s·C` (seeded constants `C`) has smooth fibers `X_s` for small
//! `s ≠ 0`.  The relative polar curve is the closure of the critical locus
//! of `(s, p)` on the regular part of `X̃ = F̃⁻¹(Mᵗ)`, and `m_d` counts the
//! critical points of `p` on a nearby fiber — the local intersection number
//! of the polar curve with `{s = 0}`, i.e. the colength of the curve's
//! ideal plus `(s)` in the local ring.
//!
//! After a linear change of coordinates making `p` a coordinate, a point of
//! the regular part is critical for `(s, p)` exactly where the Jacobian of
//! the minors loses its expected rank once the columns of `p` and `s` are
//! removed.  Components of that rank-drop locus lying in the singular part
//! of `X̃` are not polar at all, so the ideal is saturated by the singular
//! part's equations before the intersection with `{s = 0}` is counted.

use crate::eids::{essential_smoothing, EidsDescriptor};
use crate::error::{Error, Result};
use crate::groebner::{
    colength, ideal_sum, minors, saturation, standard_basis, Ideal, PolyMatrix,
};
use crate::invariants::GENERICITY_RETRIES;
use crate::limits::ResourceLimits;
use crate::poly::{LinearForm, MonomialOrder, Poly};

use num_traits::Zero;

/// Polar multiplicity of a smoothable determinantal germ with respect to
/// the linear function `p`.  The deformation constants are redrawn on
/// degenerate outcomes; `p` itself is the caller's choice and stays fixed.
pub fn polar_multiplicity_md(
    x: &EidsDescriptor,
    p: &LinearForm,
    seed: u64,
    limits: &ResourceLimits,
) -> Result<u64> {
    let n = x.ambient_dim();
    let (m, nc, t) = (x.nrows(), x.ncols(), x.t());
    let bound = (m - t + 2) * (nc - t + 2);
    if n >= bound {
        return Err(Error::NotSmoothable(format!(
            "ambient dimension {n} is not below the smoothability bound {bound}"
        )));
    }
    if p.len() != n {
        return Err(Error::Descriptor(format!(
            "linear function has {} coefficients, ambient space has {n} variables",
            p.len()
        )));
    }
    let c = x.expected_codim();
    for retry in 0..GENERICITY_RETRIES {
        let family = essential_smoothing(x, seed + retry)?;
        let ext = family.ctx().clone();
        // Straighten p to the pivot coordinate: substitute
        // x_pivot ↦ (x_pivot − Σ_{i≠pivot} cᵢxᵢ)/c_pivot, after which the
        // function p is literally the pivot variable.
        let pivot = p.pivot();
        let c_pivot = &p.coefficients()[pivot];
        let mut repl = Poly::var(&ext, pivot);
        for (i, coeff) in p.coefficients().iter().enumerate() {
            if i != pivot && !coeff.is_zero() {
                repl = repl.sub(&Poly::var(&ext, i).scale(coeff));
            }
        }
        repl = repl.scale(&c_pivot.recip());
        let straightened = family.map(|e| e.compose_var(pivot, &repl));
        let family_minors = minors(&straightened, t)?;

        // Rank condition: on the regular part, (s, p) is critical exactly
        // where the Jacobian of the minors, without the p and s columns,
        // drops below the codimension c.
        let mut crit_gens = family_minors.clone();
        if c <= family_minors.len().min(n - 1) {
            let rows: Vec<Vec<Poly>> = family_minors
                .iter()
                .map(|g| {
                    (0..=n)
                        .filter(|&i| i != pivot && i != n)
                        .map(|i| g.partial_derivative(i))
                        .collect()
                })
                .collect();
            let reduced_jacobian = PolyMatrix::new(&ext, rows)?;
            crit_gens.extend(minors(&reduced_jacobian, c)?);
        }
        let crit = Ideal::new(&ext, crit_gens);
        // One basis computation shrinks the generator pile before the
        // saturation loop; if that itself exceeds limits, fall back to the
        // raw generators and let the saturation try its luck.
        let crit = match standard_basis(&crit, MonomialOrder::GlobalDegRevLex, limits) {
            Ok(sb) => Ideal::new(&ext, sb.basis().to_vec()),
            Err(Error::ResourceLimit(_)) => crit,
            Err(e) => return Err(e),
        };

        // The non-regular part of the family: below-rank locus for t ≥ 2,
        // the Jacobian criterion for the complete-intersection case t = 1.
        let target = if t >= 2 {
            Ideal::new(&ext, minors(&straightened, t - 1)?)
        } else if c <= family_minors.len().min(n + 1) {
            let jac = crate::groebner::jacobian(&ext, &family_minors);
            Ideal::new(&ext, minors(&jac, c)?)
        } else {
            Ideal::unit(&ext)
        };
        let polar = saturation(&crit, &target, limits)?;

        let with_s = ideal_sum(&polar, &Ideal::new(&ext, vec![Poly::var(&ext, n)]));
        if let Some(v) = colength(&with_s, MonomialOrder::LocalNegDegRevLex, limits)?.value() {
            return Ok(v);
        }
    }
    Err(Error::GenericityExhausted(GENERICITY_RETRIES as u32))
}
