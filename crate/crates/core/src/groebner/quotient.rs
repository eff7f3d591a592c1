//! Ideal intersection and saturation.
//!
//! Both reduce to eliminating one auxiliary variable, which the engine's
//! `AuxLast` order performs: a basis element whose leading monomial is free
//! of the last variable is entirely free of it, so the aux-free part of a
//! basis generates the elimination ideal.

use super::engine::complete_basis;
use super::Ideal;
use crate::error::Result;
use crate::limits::ResourceLimits;
use crate::poly::{ActiveOrder, Mono, Poly, VarContext};

/// Generators of `(gens) ∩ k[all but the last variable]`.
fn eliminate_last(
    ext: &VarContext,
    gens: &[Poly],
    limits: &ResourceLimits,
) -> Result<Vec<Poly>> {
    let basis = complete_basis(gens, ActiveOrder::AuxLast, limits)?;
    let small = ext.without(ext.len() - 1);
    let n = small.len();
    let mut out = Vec::new();
    for g in &basis {
        if g.lead_mono().exponent(n) != 0 {
            continue;
        }
        let p = g.to_poly(ext);
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                debug_assert_eq!(m.exponent(n), 0);
                (Mono::from_exponents(&m.exponents()[..n]), c.clone())
            })
            .collect();
        out.push(Poly::from_terms(&small, terms));
    }
    Ok(out)
}

fn embed_all(gens: &[Poly], ext: &VarContext) -> Vec<Poly> {
    let positions: Vec<usize> = (0..ext.len() - 1).collect();
    gens.iter().map(|g| g.embed(ext, &positions)).collect()
}

/// The intersection `A ∩ B`.
pub fn intersection(a: &Ideal, b: &Ideal, limits: &ResourceLimits) -> Result<Ideal> {
    assert!(a.ctx() == b.ctx(), "intersection across variable contexts");
    let ctx = a.ctx();
    let ext = ctx.extended(&ctx.fresh_name("aux"));
    let h = Poly::var(&ext, ext.len() - 1);
    let one_minus_h = Poly::one(&ext).sub(&h);
    let mut gens = Vec::with_capacity(a.generators().len() + b.generators().len());
    for f in embed_all(a.generators(), &ext) {
        gens.push(f.mul(&h));
    }
    for g in embed_all(b.generators(), &ext) {
        gens.push(g.mul(&one_minus_h));
    }
    let out = eliminate_last(&ext, &gens, limits)?;
    Ok(Ideal::new(ctx, out))
}

/// The saturation `I : J^∞`: everything that lands in `I` after
/// multiplication by a high enough power of `J`.
///
/// Computed generator-by-generator — `I : J^∞ = ∩_f (I : f^∞)` over the
/// generators `f` of `J` — with each single-generator saturation done by
/// one elimination: `I : f^∞ = (I + (T·f − 1)) ∩ k[x]`.
pub fn saturation(i: &Ideal, j: &Ideal, limits: &ResourceLimits) -> Result<Ideal> {
    assert!(i.ctx() == j.ctx(), "saturation across variable contexts");
    let ctx = i.ctx();
    // deduplicate generators up to scalar multiples; constants make the
    // whole saturation trivial
    let mut factors: Vec<Poly> = Vec::new();
    for f in j.generators() {
        if f.is_constant() {
            // a unit: I : unit^∞ = I
            return Ok(i.clone());
        }
        let prim = f.primitive_part();
        if !factors.contains(&prim) {
            factors.push(prim);
        }
    }
    if factors.is_empty() {
        // J = 0: only the whole ring multiplies 0 into anything
        return Ok(Ideal::new(ctx, vec![Poly::one(ctx)]));
    }
    let mut result: Option<Ideal> = None;
    for f in &factors {
        let sat_f = saturate_single(i, f, limits)?;
        result = Some(match result {
            None => sat_f,
            Some(acc) => intersection(&acc, &sat_f, limits)?,
        });
    }
    Ok(result.unwrap())
}

fn saturate_single(i: &Ideal, f: &Poly, limits: &ResourceLimits) -> Result<Ideal> {
    let ctx = i.ctx();
    let ext = ctx.extended(&ctx.fresh_name("aux"));
    let t = Poly::var(&ext, ext.len() - 1);
    let positions: Vec<usize> = (0..ctx.len()).collect();
    let mut gens = embed_all(i.generators(), &ext);
    let tf = t.mul(&f.embed(&ext, &positions));
    gens.push(tf.sub(&Poly::one(&ext)));
    let out = eliminate_last(&ext, &gens, limits)?;
    Ok(Ideal::new(ctx, out))
}
