//! Exact symbolic engine for essentially isolated determinantal singularities.
//!
//! A germ `(X, 0) ⊂ (ℂᴺ, 0)` is presented by a polynomial matrix `F` of size
//! `m×n` together with a rank bound `t`: the variety is `X = F⁻¹(Mᵗ)`, the
//! preimage of the matrices of rank below `t`.  Everything the crate computes
//! about such a germ — codimension checks, stratification data, Milnor and
//! polar numbers, vanishing Euler characteristics, and finally the local
//! Euler obstruction — is exact: coefficients are arbitrary-precision
//! rationals and every reported invariant is an integer obtained from a
//! colength (never from numerics).
//!
//! Module layout:
//!
//! * [`poly`] — sparse multivariate polynomials over ℚ, monomial orders,
//!   parsing/printing, seeded generic linear forms, quasi-homogeneous weights.
//! * [`groebner`] — the single basis engine (Buchberger with Mora normal form,
//!   so both global and local orders work), colength/dimension from
//!   staircases, minors, Jacobians, ideal quotient/intersection/saturation.
//! * [`invariants`] — Milnor and Tjurina numbers of hypersurfaces, the
//!   Milnor–Orlik product oracle, ICIS Milnor numbers by slicing, the
//!   multiplicity `m₀`, the polar multiplicity `m_d`, and the vanishing Euler
//!   characteristic `ν`.
//! * [`eids`] — matrix presentations: determinantal type verification,
//!   rank stratification, corank, singular sets, slicing, deformations.
//! * [`obstruction`] — the Euler-obstruction formulas and the regime
//!   dispatcher that picks the applicable one.

pub mod eids;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod limits;
pub mod obstruction;
pub mod poly;

pub use error::{Error, Result};
pub use limits::ResourceLimits;
