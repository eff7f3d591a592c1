//! The vanishing Euler characteristic ν of a smoothable determinantal germ:
//! the reduced Euler characteristic, up to sign, of an essential smoothing's
//! generic fiber.
//!
//! The computation runs the polar recursion downward in dimension: the polar
//! count of a generic linear function `p` on the fiber splits as
//! `m_d(X, p) = ν(X) + ν(X ∩ p⁻¹(0))`, and the slice `X ∩ p⁻¹(0)` is again
//! a determinantal germ of one dimension less.  At dimension zero the fiber
//! is `m₀` points, so ν is `m₀ − 1`.  The same `p` must appear in both terms
//! of the splitting, which the recursion guarantees by drawing `p` once per
//! level and handing the slice down.

use crate::eids::{slice, EidsDescriptor};
use crate::error::{Error, Result};
use crate::groebner::germ_dimension;
use crate::invariants::{multiplicity_m0, polar_multiplicity_md, GENERICITY_RETRIES};
use crate::limits::ResourceLimits;
use crate::poly::generic_linear_form;

/// Vanishing Euler characteristic of the generic fiber of an essential
/// smoothing.
pub fn nu_vanishing(x: &EidsDescriptor, seed: u64, limits: &ResourceLimits) -> Result<i64> {
    nu_with_md(x, seed, limits).map(|(nu, _)| nu)
}

/// ν together with the top polar multiplicity `m_d` that the recursion
/// consumed at the top level.  A zero-dimensional germ has no polar curve;
/// its second component is 0.
pub fn nu_with_md(x: &EidsDescriptor, seed: u64, limits: &ResourceLimits) -> Result<(i64, u64)> {
    let n = x.ambient_dim();
    let (m, nc, t) = (x.nrows(), x.ncols(), x.t());
    let bound = (m - t + 2) * (nc - t + 2);
    if n >= bound {
        return Err(Error::NotSmoothable(format!(
            "ambient dimension {n} is not below the smoothability bound {bound}"
        )));
    }
    nu_rec(x, seed, limits)
}

fn nu_rec(x: &EidsDescriptor, seed: u64, limits: &ResourceLimits) -> Result<(i64, u64)> {
    let d = x.expected_dim();
    if d == 0 {
        let m0 = multiplicity_m0(&x.defining_ideal(), 0, seed, limits)?;
        return Ok(((m0 as i64 - 1).max(0), 0));
    }
    let actual = germ_dimension(&x.defining_ideal(), limits)?;
    if actual != d {
        return Err(Error::DimensionMismatch(format!(
            "germ has dimension {actual}, expected {d}"
        )));
    }
    for retry in 0..GENERICITY_RETRIES {
        let p = generic_linear_form(x.ctx(), seed + retry);
        let md = match polar_multiplicity_md(x, &p, seed + retry, limits) {
            Ok(v) => v,
            Err(
                Error::GenericityExhausted(_)
                | Error::DimensionMismatch(_)
                | Error::NonIsolated(_),
            ) => continue,
            Err(e) => return Err(e),
        };
        let sliced = match slice(x, &p) {
            Ok(s) => s,
            Err(Error::Descriptor(_)) => continue,
            Err(e) => return Err(e),
        };
        match nu_rec(&sliced, seed, limits) {
            Ok((nu_slice, _)) => return Ok((md as i64 - nu_slice, md)),
            Err(
                Error::GenericityExhausted(_)
                | Error::DimensionMismatch(_)
                | Error::NonIsolated(_),
            ) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GenericityExhausted(GENERICITY_RETRIES as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::PolyMatrix;
    use crate::poly::{parse_poly, Poly, VarContext};

    fn descriptor(names: &[&str], rows: &[&[&str]], t: usize) -> EidsDescriptor {
        let ctx = VarContext::new(names.iter().copied()).unwrap();
        let rows: Vec<Vec<Poly>> = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_poly(&ctx, s).unwrap()).collect())
            .collect();
        EidsDescriptor::new(&ctx, PolyMatrix::new(&ctx, rows).unwrap(), t).unwrap()
    }

    #[test]
    fn plain_surface_nu_is_one() {
        let limits = ResourceLimits::default();
        let x = descriptor(&["x", "y", "z", "w"], &[&["x", "y", "z"], &["y", "z", "w"]], 2);
        assert_eq!(nu_with_md(&x, 0, &limits), Ok((1, 3)));
    }

    #[test]
    fn twisted_surface_nu_is_one() {
        let limits = ResourceLimits::default();
        let x = descriptor(&["x", "y", "z", "w"], &[&["z", "y+w", "x"], &["w", "x", "y"]], 2);
        assert_eq!(nu_vanishing(&x, 0, &limits), Ok(1));
    }

    #[test]
    fn cusp_nu_matches_milnor_number() {
        let limits = ResourceLimits::default();
        let x = descriptor(&["x", "y"], &[&["x^2-y^3"]], 1);
        assert_eq!(nu_vanishing(&x, 0, &limits), Ok(2));
    }

    #[test]
    fn smooth_germ_has_zero_nu() {
        let limits = ResourceLimits::default();
        let x = descriptor(&["x", "y"], &[&["x"]], 1);
        assert_eq!(nu_with_md(&x, 0, &limits), Ok((0, 0)));
    }

    #[test]
    fn rejects_non_smoothable() {
        let limits = ResourceLimits::default();
        let x = descriptor(
            &["x", "y", "z", "w", "v", "u"],
            &[&["x", "y", "v"], &["z", "w", "x+u^2"]],
            2,
        );
        assert!(matches!(
            nu_with_md(&x, 0, &limits),
            Err(Error::NotSmoothable(_))
        ));
    }

    #[test]
    fn seed_stability() {
        let limits = ResourceLimits::default();
        let x = descriptor(&["x", "y", "z", "w"], &[&["x", "y", "z"], &["y", "z", "w"]], 2);
        assert_eq!(
            nu_vanishing(&x, 0, &limits).unwrap(),
            nu_vanishing(&x, 7, &limits).unwrap()
        );
    }
}
