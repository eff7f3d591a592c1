//! Multivariate polynomials over ℚ with exact arithmetic.
//!
//! Coefficients are arbitrary-precision rationals, exponents live in a
//! fixed variable context shared by every polynomial of a computation.
//! Polynomials are kept in a canonical form (terms sorted descending under
//! the global degree order, no zero coefficients), so structural equality
//! is mathematical equality.

mod generic;
mod order;
mod parse;

pub use generic::{generic_linear_form, generic_linear_forms, quasihomogeneous_weights, LinearForm};
pub(crate) use generic::seeded_constants;
pub use order::MonomialOrder;
pub(crate) use order::ActiveOrder;
pub use parse::parse_poly;

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// An ordered set of variable names, shared by reference.
///
/// Every polynomial carries the context it lives in; mixing contexts is a
/// programming error and panics.  Contexts compare equal when their name
/// lists agree, so a context rebuilt from the same names is interchangeable
/// with the original.
#[derive(Clone)]
pub struct VarContext {
    names: Arc<Vec<String>>,
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VarContext {}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarContext({})", self.names.join(", "))
    }
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VarContext {
    /// Build a context from distinct, well-formed variable names.
    pub fn new<I, S>(names: I) -> Result<VarContext>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if !valid_var_name(n) {
                return Err(Error::Descriptor(format!("invalid variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::Descriptor(format!("duplicate variable name `{n}`")));
            }
        }
        Ok(VarContext { names: Arc::new(names) })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// A name not present in this context, derived from `base` by appending
    /// digits if necessary.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        for k in 0u64.. {
            let cand = format!("{base}{k}");
            if self.index_of(&cand).is_none() {
                return cand;
            }
        }
        unreachable!()
    }

    /// Context with one extra variable appended at the end.
    pub(crate) fn extended(&self, name: &str) -> VarContext {
        let mut names = (*self.names).clone();
        names.push(name.to_string());
        VarContext { names: Arc::new(names) }
    }

    /// Context with variable `i` removed.
    pub(crate) fn without(&self, i: usize) -> VarContext {
        let mut names = (*self.names).clone();
        names.remove(i);
        VarContext { names: Arc::new(names) }
    }
}

/// A monomial: the exponent vector of one power product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mono(SmallVec<[u32; 8]>);

impl Mono {
    pub fn one(nvars: usize) -> Mono {
        Mono(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize, exp: u32) -> Mono {
        let mut m = Mono::one(nvars);
        m.0[i] = exp;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Mono {
        Mono(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        debug_assert_eq!(self.0.len(), other.0.len());
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Mono) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Mono) -> Mono {
        debug_assert!(self.divides(other));
        Mono(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        debug_assert_eq!(self.0.len(), other.0.len());
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub(crate) fn cmp_under(&self, other: &Mono, ord: ActiveOrder) -> Ordering {
        ord.cmp(&self.0, &other.0)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mono{:?}", self.0.as_slice())
    }
}

/// A polynomial in canonical form.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: VarContext,
    /// Sorted strictly descending under the global degree order; no zero
    /// coefficients.
    terms: Vec<(Mono, BigRational)>,
}

impl Poly {
    pub fn zero(ctx: &VarContext) -> Poly {
        Poly { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &VarContext) -> Poly {
        Poly::constant(ctx, BigRational::one())
    }

    pub fn constant(ctx: &VarContext, c: BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(ctx);
        }
        Poly { ctx: ctx.clone(), terms: vec![(Mono::one(ctx.len()), c)] }
    }

    pub fn int_constant(ctx: &VarContext, c: i64) -> Poly {
        Poly::constant(ctx, BigRational::from(BigInt::from(c)))
    }

    pub fn var(ctx: &VarContext, i: usize) -> Poly {
        assert!(i < ctx.len(), "variable index out of range");
        Poly {
            ctx: ctx.clone(),
            terms: vec![(Mono::var(ctx.len(), i, 1), BigRational::one())],
        }
    }

    /// Build from arbitrary terms: combines duplicates, drops zeros, sorts.
    pub fn from_terms(ctx: &VarContext, terms: Vec<(Mono, BigRational)>) -> Poly {
        let mut terms = terms;
        for (m, _) in &terms {
            assert_eq!(m.exponents().len(), ctx.len(), "monomial arity mismatch");
        }
        terms.sort_by(|a, b| b.0.cmp_under(&a.0, ActiveOrder::DegRevLex));
        // merge equal monomials (sort above is descending)
        let mut merged: Vec<(Mono, BigRational)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Poly { ctx: ctx.clone(), terms: merged }
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn terms(&self) -> &[(Mono, BigRational)] {
        &self.terms
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Lowest total degree among the terms (the order of the germ at 0).
    pub fn low_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> BigRational {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Mono, &BigRational)> {
        self.leading_under(order.active())
    }

    pub(crate) fn leading_under(&self, ord: ActiveOrder) -> Option<(&Mono, &BigRational)> {
        match ord {
            // canonical storage is descending DegRevLex, so the leader is first
            ActiveOrder::DegRevLex => self.terms.first().map(|(m, c)| (m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| a.0.cmp_under(&b.0, ord))
                .map(|(m, c)| (m, c)),
        }
    }

    fn assert_same_ctx(&self, other: &Poly) {
        assert!(self.ctx == other.ctx, "polynomials from different variable contexts");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_ctx(other);
        let mut out: Vec<(Mono, BigRational)> =
            Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp_under(mb, ActiveOrder::DegRevLex) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        Poly { ctx: self.ctx.clone(), terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ctx);
        }
        // accumulate into a map keyed by monomial
        let mut acc: std::collections::HashMap<Mono, BigRational> =
            std::collections::HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Mono, BigRational)> = acc.into_iter().collect();
        terms.sort_by(|a, b| b.0.cmp_under(&a.0, ActiveOrder::DegRevLex));
        Poly { ctx: self.ctx.clone(), terms }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Mono, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.mul(mono), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(&self.ctx);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// ∂/∂x_i.
    pub fn partial_derivative(&self, i: usize) -> Poly {
        assert!(i < self.ctx.len(), "variable index out of range");
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = SmallVec::<[u32; 8]>::from_slice(m.exponents());
            exps[i] = e - 1;
            terms.push((Mono(exps), c * BigRational::from(BigInt::from(e))));
        }
        // differentiation preserves the descending order and cannot merge terms
        Poly { ctx: self.ctx.clone(), terms }
    }

    /// Substitute the polynomial `g` for variable `i` and *remove* that
    /// variable from the context.  `g` must live in the smaller context
    /// (the one without variable `i`).
    pub fn substitute(&self, i: usize, g: &Poly) -> Poly {
        assert!(i < self.ctx.len(), "variable index out of range");
        let small = self.ctx.without(i);
        assert!(g.ctx == small, "replacement must live in the context without the variable");
        let mut out = Poly::zero(&small);
        // group by the exponent of x_i, using Horner on cached powers
        let mut powers: Vec<Poly> = vec![Poly::one(&small)];
        for (m, c) in &self.terms {
            let e = m.exponent(i) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(g);
                powers.push(next);
            }
            let mut exps = SmallVec::<[u32; 8]>::from_slice(m.exponents());
            exps.remove(i);
            let rest = Poly { ctx: small.clone(), terms: vec![(Mono(exps), c.clone())] };
            out = out.add(&rest.mul(&powers[e]));
        }
        out
    }

    /// Substitute `g` (same context) for variable `i`, keeping the context.
    /// This is the coordinate-change workhorse: `g` may itself involve
    /// variable `i`.
    pub(crate) fn compose_var(&self, i: usize, g: &Poly) -> Poly {
        assert!(i < self.ctx.len(), "variable index out of range");
        self.assert_same_ctx(g);
        let mut out = Poly::zero(&self.ctx);
        let mut powers: Vec<Poly> = vec![Poly::one(&self.ctx)];
        for (m, c) in &self.terms {
            let e = m.exponent(i) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(g);
                powers.push(next);
            }
            let mut exps = SmallVec::<[u32; 8]>::from_slice(m.exponents());
            exps[i] = 0;
            let rest = Poly { ctx: self.ctx.clone(), terms: vec![(Mono(exps), c.clone())] };
            out = out.add(&rest.mul(&powers[e]));
        }
        out
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.ctx.len(), "point arity mismatch");
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }

    /// Indices of variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ctx.len()];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(i, &u)| if u { Some(i) } else { None })
            .collect()
    }

    /// The same polynomial rebuilt over only the variables it uses.
    /// Returns the restricted polynomial and the indices (into the original
    /// context) of the retained variables.
    pub fn restrict_to_support(&self) -> (Poly, Vec<usize>) {
        let support = self.support();
        let names: Vec<String> = support.iter().map(|&i| self.ctx.name(i).to_string()).collect();
        let small = VarContext::new(names).expect("support names are valid");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exps: SmallVec<[u32; 8]> =
                    support.iter().map(|&i| m.exponent(i)).collect();
                (Mono(exps), c.clone())
            })
            .collect();
        (Poly { ctx: small, terms }, support)
    }

    /// Reinterpret in a larger context: `positions[k]` is the index that
    /// variable `k` of the current context takes in `bigger`.
    pub fn embed(&self, bigger: &VarContext, positions: &[usize]) -> Poly {
        assert_eq!(positions.len(), self.ctx.len());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = SmallVec::<[u32; 8]>::from_elem(0, bigger.len());
                for (k, &e) in m.exponents().iter().enumerate() {
                    exps[positions[k]] = e;
                }
                (Mono(exps), c.clone())
            })
            .collect();
        Poly::from_terms(bigger, terms)
    }

    /// Clear denominators and divide by integer content: the associate
    /// integer polynomial with positive leading coefficient (by the global
    /// order).  Zero stays zero.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = num_integer::lcm(den, c.denom().clone());
        }
        let mut nums: Vec<BigInt> =
            self.terms.iter().map(|(_, c)| c.numer() * (&den / c.denom())).collect();
        let mut content = BigInt::zero();
        for n in &nums {
            content = num_integer::gcd(content, n.clone());
        }
        if nums[0].is_negative() {
            content = -content;
        }
        for n in &mut nums {
            *n = &*n / &content;
        }
        Poly {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .zip(nums)
                .map(|((m, _), n)| (m.clone(), BigRational::from(n)))
                .collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = mono_string(&self.ctx, m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

fn mono_string(ctx: &VarContext, m: &Mono) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ctx.name(i).to_string()),
            _ => parts.push(format!("{}^{}", ctx.name(i), e)),
        }
    }
    parts.join("*")
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;
    use proptest::prelude::*;

    fn ctx3() -> VarContext {
        VarContext::new(["x", "y", "z"]).unwrap()
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    #[test]
    fn context_rejects_bad_names() {
        assert!(VarContext::new(["x", "x"]).is_err());
        assert!(VarContext::new(["2x"]).is_err());
        assert!(VarContext::new(["a b"]).is_err());
        assert!(VarContext::new(["x", "y_2", "_t"]).is_ok());
    }

    #[test]
    fn arithmetic_basics() {
        let ctx = ctx3();
        let x = Poly::var(&ctx, 0);
        let y = Poly::var(&ctx, 1);
        let f = &(&x + &y) * &(&x - &y);
        let g = &(&x * &x) - &(&y * &y);
        assert_eq!(f, g);
        assert_eq!((&f - &g), Poly::zero(&ctx));
        assert_eq!(f.to_string(), "x^2 - y^2");
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let ctx = ctx3();
        let x = Poly::var(&ctx, 0);
        let y = Poly::var(&ctx, 1);
        let f = &(&x + &y) + &Poly::one(&ctx);
        let mut g = Poly::one(&ctx);
        for _ in 0..5 {
            g = g.mul(&f);
        }
        assert_eq!(f.pow(5), g);
        assert_eq!(f.pow(0), Poly::one(&ctx));
    }

    #[test]
    fn derivative_of_power() {
        let ctx = ctx3();
        let x = Poly::var(&ctx, 0);
        let f = x.pow(4);
        let df = f.partial_derivative(0);
        assert_eq!(df, x.pow(3).scale(&q(4)));
        assert!(f.partial_derivative(1).is_zero());
    }

    #[test]
    fn substitute_removes_variable() {
        // f = x^2 + y*z, substitute y := z + 1 (in the (x, z) context)
        let ctx = ctx3();
        let f = parse_poly(&ctx, "x^2 + y*z").unwrap();
        let small = ctx.without(1);
        let g = parse_poly(&small, "z + 1").unwrap();
        let h = f.substitute(1, &g);
        assert_eq!(h, parse_poly(&small, "x^2 + z^2 + z").unwrap());
        assert_eq!(h.ctx().names(), &["x".to_string(), "z".to_string()]);
    }

    #[test]
    fn compose_var_keeps_variable() {
        // x := x + y in x^2 gives x^2 + 2xy + y^2
        let ctx = ctx3();
        let f = parse_poly(&ctx, "x^2").unwrap();
        let g = parse_poly(&ctx, "x + y").unwrap();
        assert_eq!(f.compose_var(0, &g), parse_poly(&ctx, "x^2 + 2*x*y + y^2").unwrap());
    }

    #[test]
    fn eval_point() {
        let ctx = ctx3();
        let f = parse_poly(&ctx, "x^2*y - 3*z + 1/2").unwrap();
        let v = f.eval(&[q(2), q(3), q(1)]);
        assert_eq!(v, q(12) - q(3) + BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn restrict_and_embed_roundtrip() {
        let ctx = VarContext::new(["a", "b", "c", "d"]).unwrap();
        let f = parse_poly(&ctx, "a*c^2 - 5*c + 7").unwrap();
        let (g, support) = f.restrict_to_support();
        assert_eq!(support, vec![0, 2]);
        assert_eq!(g.ctx().names(), &["a".to_string(), "c".to_string()]);
        assert_eq!(g.embed(&ctx, &support), f);
    }

    #[test]
    fn primitive_part_strips_content_and_sign() {
        let ctx = ctx3();
        let f = parse_poly(&ctx, "-2*x^2 - 4*y").unwrap();
        assert_eq!(f.primitive_part(), parse_poly(&ctx, "x^2 + 2*y").unwrap());
        let g = parse_poly(&ctx, "1/2*x + 1/3").unwrap();
        assert_eq!(g.primitive_part(), parse_poly(&ctx, "3*x + 2").unwrap());
    }

    #[test]
    fn display_is_parseable() {
        let ctx = ctx3();
        let f = parse_poly(&ctx, "-x^2*y + 1/2*z - 3").unwrap();
        let s = f.to_string();
        assert_eq!(parse_poly(&ctx, &s).unwrap(), f);
    }

    #[test]
    fn leading_terms_under_both_orders() {
        let ctx = ctx3();
        let f = parse_poly(&ctx, "x^3 + y + 1").unwrap();
        let (lm, _) = f.leading_term(MonomialOrder::GlobalDegRevLex).unwrap();
        assert_eq!(lm.exponents(), &[3, 0, 0]);
        let (lm, _) = f.leading_term(MonomialOrder::LocalNegDegRevLex).unwrap();
        assert!(lm.is_one());
    }

    // --- property tests -------------------------------------------------

    fn arb_poly(ctx: VarContext) -> impl Strategy<Value = Poly> {
        let n = ctx.len();
        proptest::collection::vec(
            (proptest::collection::vec(0u32..4, n), -9i64..10),
            0..6,
        )
        .prop_map(move |raw| {
            let terms = raw
                .into_iter()
                .map(|(exps, c)| (Mono::from_exponents(&exps), q(c)))
                .collect();
            Poly::from_terms(&ctx, terms)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms((f, g, h) in (arb_poly(ctx3()), arb_poly(ctx3()), arb_poly(ctx3()))) {
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            let zero = Poly::zero(f.ctx());
            prop_assert_eq!(&f + &zero, f.clone());
            prop_assert_eq!(&f - &f, zero);
        }

        #[test]
        fn leibniz_rule((f, g) in (arb_poly(ctx3()), arb_poly(ctx3())), i in 0usize..3) {
            let lhs = (&f * &g).partial_derivative(i);
            let rhs = &(&f.partial_derivative(i) * &g) + &(&f * &g.partial_derivative(i));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn display_parse_roundtrip(f in arb_poly(ctx3())) {
            let reparsed = parse_poly(f.ctx(), &f.to_string()).unwrap();
            prop_assert_eq!(reparsed, f);
        }

        #[test]
        fn eval_is_ring_hom((f, g) in (arb_poly(ctx3()), arb_poly(ctx3())),
                            pt in proptest::collection::vec(-3i64..4, 3)) {
            let pt: Vec<BigRational> = pt.into_iter().map(q).collect();
            prop_assert_eq!((&f + &g).eval(&pt), f.eval(&pt) + g.eval(&pt));
            prop_assert_eq!((&f * &g).eval(&pt), f.eval(&pt) * g.eval(&pt));
        }
    }
}
