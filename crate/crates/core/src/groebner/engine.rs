//! The standard-basis engine.
//!
//! One algorithm serves every order: Buchberger's completion driven by
//! Mora's weak normal form with ecart-based reducer selection.  Under a
//! global order every ecart is zero and the normal form degenerates to
//! classical polynomial division, so the global and local cases share all
//! of their code.
//!
//! Internally the engine works over ℤ with primitive polynomials (content
//! stripped, positive leading coefficient) and pseudo-reduction, which
//! keeps coefficient growth far below what rational arithmetic produces.

use crate::error::{Error, Result};
use crate::limits::ResourceLimits;
use crate::poly::{ActiveOrder, Mono, Poly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::{BTreeSet, HashSet};

/// Integer polynomial, terms sorted strictly descending under a fixed
/// active order, primitive with positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct EPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl EPoly {
    pub(crate) fn from_poly(p: &Poly, ord: ActiveOrder) -> EPoly {
        let prim = p.primitive_part();
        let mut terms: Vec<(Mono, BigInt)> = prim
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), c.numer().clone()))
            .collect();
        terms.sort_by(|a, b| b.0.cmp_under(&a.0, ord));
        let mut e = EPoly { terms };
        e.fix_sign();
        e
    }

    pub(crate) fn to_poly(&self, ctx: &crate::poly::VarContext) -> Poly {
        Poly::from_terms(
            ctx,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from(c.clone())))
                .collect(),
        )
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Mono, BigInt) {
        &self.terms[0]
    }

    pub(crate) fn lead_mono(&self) -> &Mono {
        &self.terms[0].0
    }

    fn max_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn ecart(&self) -> u64 {
        self.max_degree() - self.terms[0].0.degree()
    }

    fn fix_sign(&mut self) {
        if let Some((_, c)) = self.terms.first() {
            if c.is_negative() {
                for (_, c) in &mut self.terms {
                    *c = -&*c;
                }
            }
        }
    }

    fn strip_content(&mut self) {
        let mut content = BigInt::zero();
        for (_, c) in &self.terms {
            content = content.gcd(c);
            if content == BigInt::from(1) {
                return;
            }
        }
        if content > BigInt::from(1) {
            for (_, c) in &mut self.terms {
                *c = &*c / &content;
            }
        }
    }

    /// `self·a − (g·mono)·b`, merged under `ord`, then renormalized.
    fn combine(&self, a: &BigInt, g: &EPoly, mono: &Mono, b: &BigInt, ord: ActiveOrder) -> EPoly {
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < g.terms.len() {
            let (mh, ch) = &self.terms[i];
            let mg = g.terms[j].0.mul(mono);
            match mh.cmp_under(&mg, ord) {
                std::cmp::Ordering::Greater => {
                    out.push((mh.clone(), ch * a));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mg, -(&g.terms[j].1 * b)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ch * a - &g.terms[j].1 * b;
                    if !c.is_zero() {
                        out.push((mg, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (mh, ch) in &self.terms[i..] {
            out.push((mh.clone(), ch * a));
        }
        for (mg, cg) in &g.terms[j..] {
            out.push((mg.mul(mono), -(cg * b)));
        }
        let mut e = EPoly { terms: out };
        e.strip_content();
        e.fix_sign();
        e
    }
}

fn limit_err(what: &str, bound: impl std::fmt::Display) -> Error {
    Error::ResourceLimit(format!("{what} exceeded {bound}"))
}

/// Deterministic cost of one reduction step.  The dominant expense when
/// coefficients grow is content stripping, which runs a gcd per term on
/// integers of roughly the lead coefficient's size — quadratic in bit
/// length — so the estimate scales with `terms · (bits/64)²`.
fn work_cost(terms: usize, lead_bits: u64) -> u64 {
    let t = terms as u64;
    let kb = lead_bits / 64;
    1 + t / 8 + t.saturating_mul(kb.saturating_mul(kb)) / 64
}

/// Mora's weak normal form of `f` against `reducers`.
///
/// Returns a polynomial whose leading monomial is divisible by no reducer
/// lead; for a local order the result equals `u·f mod (reducers)` for some
/// local unit `u`.  The reducer list is extended with intermediate results
/// when the selected reducer has strictly larger ecart, which is what makes
/// the loop terminate under non-well-orders.
pub(crate) fn normal_form(
    f: &EPoly,
    reducers: &[EPoly],
    ord: ActiveOrder,
    limits: &ResourceLimits,
) -> Result<EPoly> {
    let mut extra: Vec<EPoly> = Vec::new();
    let mut h = f.clone();
    loop {
        if h.is_zero() {
            return Ok(h);
        }
        if h.max_degree() > limits.max_degree as u64 {
            return Err(limit_err("polynomial degree", limits.max_degree));
        }
        if !limits.charge(work_cost(h.terms.len(), h.lead().1.magnitude().bits())) {
            return Err(limit_err("work budget", limits.max_work));
        }
        let mut best: Option<(u64, usize)> = None;
        for (k, g) in reducers.iter().chain(extra.iter()).enumerate() {
            if g.lead_mono().divides(h.lead_mono()) {
                let e = g.ecart();
                if best.map(|(be, _)| e < be).unwrap_or(true) {
                    best = Some((e, k));
                }
            }
        }
        let Some((g_ecart, k)) = best else {
            return Ok(h);
        };
        let g = if k < reducers.len() {
            reducers[k].clone()
        } else {
            extra[k - reducers.len()].clone()
        };
        if g_ecart > h.ecart() {
            extra.push(h.clone());
        }
        // the combine multiplies every term of h by a factor of the
        // reducer's lead size, so price the step by that size as well
        if !limits.charge(work_cost(h.terms.len(), g.lead().1.magnitude().bits())) {
            return Err(limit_err("work budget", limits.max_work));
        }
        let mono = g.lead_mono().div_into(h.lead_mono());
        let gcd = h.lead().1.gcd(&g.lead().1);
        let a = &g.lead().1 / &gcd;
        let b = &h.lead().1 / &gcd;
        h = h.combine(&a, &g, &mono, &b, ord);
    }
}

fn spoly(f: &EPoly, g: &EPoly, ord: ActiveOrder) -> EPoly {
    let lcm = f.lead_mono().lcm(g.lead_mono());
    let mf = f.lead_mono().div_into(&lcm);
    let gcd = f.lead().1.gcd(&g.lead().1);
    let a = &g.lead().1 / &gcd;
    let b = &f.lead().1 / &gcd;
    // a·x^mf·f − b·x^mg·g, computed as (x^mf·f)·a − (g·x^mg)·b
    let shifted = EPoly {
        terms: f.terms.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect(),
    };
    let mg = g.lead_mono().div_into(&lcm);
    shifted.combine(&a, g, &mg, &b, ord)
}

/// Buchberger completion with the product and chain criteria.
pub(crate) fn complete_basis(
    gens: &[Poly],
    ord: ActiveOrder,
    limits: &ResourceLimits,
) -> Result<Vec<EPoly>> {
    let mut basis: Vec<EPoly> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.degree().unwrap_or(0) > limits.max_degree as u64 {
            return Err(limit_err("input degree", limits.max_degree));
        }
        let e = EPoly::from_poly(g, ord);
        if !basis.contains(&e) {
            basis.push(e);
        }
    }
    if basis.is_empty() {
        return Ok(basis);
    }

    // pending pairs keyed by (lcm degree, lcm exponents, i, j); processed or
    // criterion-dropped pairs accumulate in `done` for the chain criterion
    let mut pending: BTreeSet<(u64, Vec<u32>, usize, usize)> = BTreeSet::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    let lcm_of = |basis: &[EPoly], i: usize, j: usize| -> Mono {
        basis[i].lead_mono().lcm(basis[j].lead_mono())
    };
    let enqueue = |basis: &[EPoly],
                   pending: &mut BTreeSet<(u64, Vec<u32>, usize, usize)>,
                   done: &mut HashSet<(usize, usize)>,
                   i: usize,
                   j: usize| {
        let lcm = lcm_of(basis, i, j);
        let product = basis[i].lead_mono().mul(basis[j].lead_mono());
        if lcm == product {
            // coprime leads: the s-polynomial always reduces to zero
            done.insert((i, j));
        } else {
            pending.insert((lcm.degree(), lcm.exponents().to_vec(), i, j));
        }
    };
    for j in 1..basis.len() {
        for i in 0..j {
            enqueue(&basis, &mut pending, &mut done, i, j);
        }
    }

    let mut steps = 0usize;
    while let Some(entry) = pending.iter().next().cloned() {
        pending.remove(&entry);
        let (_, _, i, j) = entry;
        steps += 1;
        if steps > limits.max_pair_steps() {
            return Err(limit_err("s-pair steps", limits.max_pair_steps()));
        }
        let pair_bits = basis[i]
            .lead()
            .1
            .magnitude()
            .bits()
            .max(basis[j].lead().1.magnitude().bits());
        let pair_terms = basis[i].terms.len() + basis[j].terms.len();
        if !limits.charge((basis.len() as u64) / 8 + work_cost(pair_terms, pair_bits)) {
            return Err(limit_err("work budget", limits.max_work));
        }
        done.insert((i, j));

        // chain criterion: some k divides this lcm strictly and both
        // flanking pairs are already settled
        let lcm_ij = lcm_of(&basis, i, j);
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j || !basis[k].lead_mono().divides(&lcm_ij) {
                return false;
            }
            let (a, b) = (i.min(k), i.max(k));
            let (c, d) = (j.min(k), j.max(k));
            done.contains(&(a, b))
                && done.contains(&(c, d))
                && lcm_of(&basis, a, b) != lcm_ij
                && lcm_of(&basis, c, d) != lcm_ij
        });
        if chain {
            continue;
        }

        let s = spoly(&basis[i], &basis[j], ord);
        let h = normal_form(&s, &basis, ord, limits)?;
        if h.is_zero() {
            continue;
        }
        basis.push(h);
        if basis.len() > limits.max_basis {
            return Err(limit_err("basis size", limits.max_basis));
        }
        let new = basis.len() - 1;
        for i in 0..new {
            enqueue(&basis, &mut pending, &mut done, i, new);
        }
    }

    Ok(minimalize(basis, ord))
}

/// Drop basis elements whose lead is divisible by another retained lead.
/// Scanning in ascending total degree guarantees divisors are seen before
/// their multiples under every order, including the local one.
fn minimalize(mut basis: Vec<EPoly>, _ord: ActiveOrder) -> Vec<EPoly> {
    basis.sort_by(|a, b| a.lead_mono().cmp_under(b.lead_mono(), ActiveOrder::DegRevLex));
    let mut kept: Vec<EPoly> = Vec::with_capacity(basis.len());
    for g in basis {
        if !kept.iter().any(|k| k.lead_mono().divides(g.lead_mono())) {
            kept.push(g);
        }
    }
    kept
}
