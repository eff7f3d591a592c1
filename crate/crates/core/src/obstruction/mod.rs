//! The local Euler obstruction of a determinantal germ at the origin.
//!
//! Everything here rests on one structural fact: a determinantal germ of the
//! kinds this crate accepts carries at most three strata — the origin, the
//! singular stratum `ΣX` minus the origin, and the regular part.  The
//! obstruction is then a Lefschetz-style sum over slice Euler characteristics
//! weighted by the obstruction along each stratum, and every regime below is
//! a closed form of that sum with its ingredients computed by the invariant
//! pipeline: `ν` and the polar multiplicity for smoothable germs, the slice's
//! vanishing characteristic for `2×3` germs of six variables, and the Milnor
//! number of the sliced singular locus above six.
//!
//! The dispatcher tries regimes from cheapest certified to heaviest, records
//! every number it consumed together with its provenance, and falls back to
//! caller-supplied values only when its own pipeline cannot produce one.

use crate::eids::{
    corank_at_origin, dedupe_signed, singular_set, slice, EidsDescriptor,
};
use crate::error::{Error, Result};
use crate::groebner::{germ_dimension, Ideal};
use crate::invariants::{
    milnor_icis, nu_vanishing, nu_with_md, IcisPresentation, InvariantName, InvariantReport,
    GENERICITY_RETRIES,
};
use crate::limits::ResourceLimits;
use crate::poly::generic_linear_form;

/// Which closed form produced an obstruction value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Smoothable,
    NEquals6,
    NGe7Type232,
    Corank1FastPath,
    GeneralThreeStrata,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::Smoothable => "smoothable",
            Regime::NEquals6 => "n-equals-6",
            Regime::NGe7Type232 => "n-ge-7-type-232",
            Regime::Corank1FastPath => "corank1-fast-path",
            Regime::GeneralThreeStrata => "general-three-strata",
        }
    }

    pub fn parse(s: &str) -> Option<Regime> {
        Some(match s {
            "smoothable" => Regime::Smoothable,
            "n-equals-6" => Regime::NEquals6,
            "n-ge-7-type-232" => Regime::NGe7Type232,
            "corank1-fast-path" => Regime::Corank1FastPath,
            "general-three-strata" => Regime::GeneralThreeStrata,
            _ => return None,
        })
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One stratum's contribution to the Lefschetz sum: the Euler characteristic
/// of its generic hyperplane slice in a small ball, and the obstruction of
/// the ambient germ along the stratum (1 on the regular part).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumDatum {
    pub index: usize,
    pub chi_slice: i64,
    pub eu_on_stratum: i64,
}

/// An obstruction value together with the regime that produced it and every
/// invariant the computation consumed, each carrying its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuResult {
    pub value: i64,
    pub regime: Regime,
    pub inputs: Vec<InvariantReport>,
}

/// Dispatcher knobs.  `skip_fast_path` forces the corank-1 germs through the
/// full computational route, which is how the two are cross-checked.
#[derive(Debug, Clone, Copy, Default)]
pub struct DispatchOptions {
    pub skip_fast_path: bool,
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * ((n - i) as i64) / ((i + 1) as i64);
    }
    acc
}

/// Reduced Euler characteristic of the generic link of the rank-deficiency
/// locus `M^t` inside the space of `m×n` matrices: `(−1)^t · C(m−1, t−1)`
/// with `m` the smaller side.  The link only depends on the matrix space up
/// to transpose, so the arguments are canonicalized before the binomial.
pub fn chi_bar_generic_link(m: usize, n: usize, t: usize) -> Result<i64> {
    let small = m.min(n);
    if m == 0 || n == 0 || t == 0 || t > small {
        return Err(Error::OutOfRange(format!(
            "no generic link for matrix type ({m}, {n}, {t})"
        )));
    }
    Ok(sign(t) * binomial(small - 1, t - 1))
}

/// Euler characteristic of the complex link of the stratum of rank exactly
/// `i − 1` points: a normal section there is a germ of type
/// `(m−i+1, n−i+1, t−i+1)`, and `χ(L) = 1 + χ̄` of that type.
pub fn complex_link_chi(x: &EidsDescriptor, i: usize) -> Result<i64> {
    let t = x.t();
    if i == 0 || i >= t {
        return Err(Error::OutOfRange(format!(
            "stratum index {i} is not a singular stratum of a type-{t} germ"
        )));
    }
    Ok(1 + chi_bar_generic_link(x.nrows() - i + 1, x.ncols() - i + 1, t - i + 1)?)
}

/// The Lefschetz sum `Σ χ(Vᵢ ∩ l⁻¹(r) ∩ B) · Eu_{Vᵢ}(X)` over the strata
/// other than the origin (whose slice is empty and contributes nothing).
pub fn lefschetz_combine(strata: &[StratumDatum]) -> i64 {
    strata.iter().map(|s| s.chi_slice * s.eu_on_stratum).sum()
}

/// Obstruction of a smoothable germ of dimension `d`:
/// `1 + (−1)^d ν + (−1)^{d+1} m_d`.
pub fn eu_smoothable(d: usize, nu: i64, md: i64) -> i64 {
    1 + sign(d) * nu + sign(d + 1) * md
}

/// Obstruction of a `2×3`, type-2 germ in six variables, through the slice
/// identity `χ(X ∩ l⁻¹(r)) − 1 = χ̃(X ∩ l⁻¹(0))`: the value is `χ̃ + 1`.
pub fn eu_n_equals_6(x: &EidsDescriptor, chi_tilde_slice: i64) -> Result<i64> {
    let (a, b) = (x.nrows().min(x.ncols()), x.nrows().max(x.ncols()));
    if (a, b, x.t()) != (2, 3, 2) || x.ambient_dim() != 6 {
        return Err(Error::RegimeMismatch(format!(
            "slice identity needs a 2×3 type-2 germ in 6 variables, got ({a}, {b}, {}) in {}",
            x.t(),
            x.ambient_dim()
        )));
    }
    Ok(chi_tilde_slice + 1)
}

/// Obstruction of a `2×3`, type-2 germ in `n ≥ 7` variables:
/// `(−1)^{n−7} μ(ΣX ∩ l⁻¹(0)) + χ̃(X ∩ l⁻¹(0)) + 2`.
pub fn eu_n_ge_7(n: usize, mu_sigma_slice: u64, chi_tilde_slice: i64) -> Result<i64> {
    if n < 7 {
        return Err(Error::RegimeMismatch(format!(
            "the n ≥ 7 closed form does not apply in ambient dimension {n}"
        )));
    }
    Ok(sign(n - 7) * mu_sigma_slice as i64 + chi_tilde_slice + 2)
}

/// Corank-1 shortcut: a `2×3`, type-2 germ in `n ≥ 7` variables whose matrix
/// has corank 1 at the origin always has obstruction 2 — the `μ` and `χ̃`
/// terms of the `n ≥ 7` form cancel because both reduce to the Milnor number
/// of the same residual function (`μ(ΣX∩l) = μ(g̃)` and
/// `χ̃ = (−1)^{n−2} μ(g̃)`).
pub fn eu_corank1_fastpath(x: &EidsDescriptor) -> Result<i64> {
    let (a, b) = (x.nrows().min(x.ncols()), x.nrows().max(x.ncols()));
    let n = x.ambient_dim();
    if (a, b, x.t()) != (2, 3, 2) || n < 7 || corank_at_origin(x) != 1 {
        return Err(Error::RegimeMismatch(format!(
            "corank-1 shortcut needs a 2×3 type-2 germ in ≥7 variables with corank 1, \
             got ({a}, {b}, {}) in {n} with corank {}",
            x.t(),
            corank_at_origin(x)
        )));
    }
    Ok(2)
}

/// Vanishing Euler characteristic of a corank-1 germ in `n` variables with
/// residual function `g`: `χ̃ = (−1)^{n−1} μ(g)`.
pub fn chi_tilde_corank1(n: usize, mu_g: u64) -> Result<i64> {
    if n < 6 {
        return Err(Error::RegimeMismatch(format!(
            "corank-1 vanishing characteristic needs ≥6 variables, got {n}"
        )));
    }
    Ok(sign(n - 1) * mu_g as i64)
}

fn find_supplied<'a>(
    supplied: &'a [InvariantReport],
    name: InvariantName,
) -> Option<&'a InvariantReport> {
    supplied.iter().find(|r| r.name == name)
}

/// Compute the obstruction of `x` at the origin, choosing the first regime
/// whose preconditions hold: the corank-1 shortcut, then the smoothable
/// formula, then the six-variable and `n ≥ 7` forms for `2×3` type-2 germs,
/// then the general three-strata form.  Supplied invariants are consumed
/// only where the pipeline cannot compute the ingredient itself.
pub fn eu_dispatch(
    x: &EidsDescriptor,
    seed: u64,
    supplied: &[InvariantReport],
    options: &DispatchOptions,
    limits: &ResourceLimits,
) -> Result<EuResult> {
    let n = x.ambient_dim();
    let t = x.t();
    let (a, b) = (x.nrows().min(x.ncols()), x.nrows().max(x.ncols()));
    let d = x.expected_dim();
    let is_232 = (a, b, t) == (2, 3, 2);
    let smooth_bound = (a - t + 2) * (b - t + 2);
    let three_bound = (a - t + 3) * (b - t + 3);

    if d == 0 {
        // The germ is a point, and the obstruction of a point is 1.
        return Ok(EuResult { value: 1, regime: Regime::Smoothable, inputs: Vec::new() });
    }
    if is_232 && n >= 7 && !options.skip_fast_path && corank_at_origin(x) == 1 {
        let value = eu_corank1_fastpath(x)?;
        return Ok(EuResult { value, regime: Regime::Corank1FastPath, inputs: Vec::new() });
    }
    if n < smooth_bound {
        return smoothable_route(x, seed, d, supplied, limits);
    }
    if is_232 && n == 6 {
        return slice_chi_route(x, seed, supplied, limits);
    }
    if is_232 && n >= 7 {
        return sigma_mu_route(x, seed, supplied, limits);
    }
    if t >= 2 && n <= three_bound {
        return three_strata_route(x, seed, supplied, limits);
    }
    Err(Error::RegimeMismatch(format!(
        "no obstruction formula covers type ({a}, {b}, {t}) in ambient dimension {n}"
    )))
}

fn smoothable_route(
    x: &EidsDescriptor,
    seed: u64,
    d: usize,
    supplied: &[InvariantReport],
    limits: &ResourceLimits,
) -> Result<EuResult> {
    match nu_with_md(x, seed, limits) {
        Ok((nu, md)) => Ok(EuResult {
            value: eu_smoothable(d, nu, md as i64),
            regime: Regime::Smoothable,
            inputs: vec![
                InvariantReport::computed(InvariantName::Nu, nu, seed, "polar recursion"),
                InvariantReport::computed(InvariantName::Md, md as i64, seed, "polar multiplicity"),
            ],
        }),
        Err(e @ (Error::ResourceLimit(_) | Error::GenericityExhausted(_))) => {
            match (
                find_supplied(supplied, InvariantName::Nu),
                find_supplied(supplied, InvariantName::Md),
            ) {
                (Some(nu), Some(md)) => Ok(EuResult {
                    value: eu_smoothable(d, nu.value, md.value),
                    regime: Regime::Smoothable,
                    inputs: vec![nu.clone(), md.clone()],
                }),
                _ => Err(e),
            }
        }
        Err(e) => Err(e),
    }
}

/// Six-variable `2×3` route: slice by a generic hyperplane, run the ν
/// recursion on the (always smoothable) slice, and use
/// `χ̃(X∩l) = (−1)^{d−1} ν(X∩l)`.
fn slice_chi_route(
    x: &EidsDescriptor,
    seed: u64,
    supplied: &[InvariantReport],
    limits: &ResourceLimits,
) -> Result<EuResult> {
    let d = x.expected_dim();
    let mut stopped = None;
    for r in 0..GENERICITY_RETRIES {
        let l = generic_linear_form(x.ctx(), seed + r);
        let sliced = match slice(x, &l) {
            Ok(s) => s,
            Err(_) => continue,
        };
        match nu_vanishing(&sliced, seed + r, limits) {
            Ok(nu_slice) => {
                let chi = sign(d - 1) * nu_slice;
                let value = eu_n_equals_6(x, chi)?;
                return Ok(EuResult {
                    value,
                    regime: Regime::NEquals6,
                    inputs: vec![InvariantReport::computed(
                        InvariantName::ChiTilde,
                        chi,
                        seed + r,
                        "slice smoothing",
                    )],
                });
            }
            Err(
                Error::GenericityExhausted(_)
                | Error::DimensionMismatch(_)
                | Error::NonIsolated(_),
            ) => continue,
            Err(e @ Error::ResourceLimit(_)) => {
                stopped = Some(e);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if let Some(rep) = find_supplied(supplied, InvariantName::ChiTilde) {
        let value = eu_n_equals_6(x, rep.value)?;
        return Ok(EuResult { value, regime: Regime::NEquals6, inputs: vec![rep.clone()] });
    }
    Err(stopped.unwrap_or(Error::GenericityExhausted(GENERICITY_RETRIES as u32)))
}

/// `n ≥ 7` route for `2×3` type-2 germs: μ of the sliced singular locus as
/// an isolated complete intersection, χ̃ from the corank-1 closed form when
/// it applies, otherwise from a supplied value.
fn sigma_mu_route(
    x: &EidsDescriptor,
    seed: u64,
    supplied: &[InvariantReport],
    limits: &ResourceLimits,
) -> Result<EuResult> {
    let n = x.ambient_dim();
    let corank1 = corank_at_origin(x) == 1;
    let mut stopped = None;
    for r in 0..GENERICITY_RETRIES {
        let l = generic_linear_form(x.ctx(), seed + r);
        let sliced = match slice(x, &l) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let gens = dedupe_signed(singular_set(&sliced).generators());
        let sigma = Ideal::new(sliced.ctx(), gens);
        let dim_sigma = match germ_dimension(&sigma, limits) {
            Ok(v) => v,
            // The singular locus misses the origin: X is smooth there.
            Err(Error::IdealIsUnit) => {
                return Ok(EuResult { value: 1, regime: Regime::NGe7Type232, inputs: Vec::new() })
            }
            Err(e @ Error::ResourceLimit(_)) => {
                stopped = Some(e);
                break;
            }
            Err(e) => return Err(e),
        };
        let codim = sliced.ambient_dim() - dim_sigma;
        let pres = match IcisPresentation::new(
            sliced.ctx(),
            sigma.generators().to_vec(),
            codim,
        ) {
            Ok(p) => p,
            Err(Error::NotIcis(_)) => continue,
            Err(e) => return Err(e),
        };
        let mu = match milnor_icis(&pres, seed + r, limits) {
            Ok(v) => v,
            Err(
                Error::NonIsolated(_)
                | Error::GenericityExhausted(_)
                | Error::DimensionMismatch(_)
                | Error::NotIcis(_),
            ) => continue,
            Err(e @ Error::ResourceLimit(_)) => {
                stopped = Some(e);
                break;
            }
            Err(e) => return Err(e),
        };
        let mu_rep = InvariantReport::computed(
            InvariantName::Mu,
            mu as i64,
            seed + r,
            "sliced singular locus",
        );
        let (chi, chi_rep) = if corank1 {
            let c = chi_tilde_corank1(n - 1, mu)?;
            (
                c,
                InvariantReport::computed(InvariantName::ChiTilde, c, seed + r, "corank-1 residual"),
            )
        } else if let Some(rep) = find_supplied(supplied, InvariantName::ChiTilde) {
            (rep.value, rep.clone())
        } else {
            return Err(Error::MissingInput("chi_tilde".to_string()));
        };
        let value = eu_n_ge_7(n, mu, chi)?;
        return Ok(EuResult {
            value,
            regime: Regime::NGe7Type232,
            inputs: vec![mu_rep, chi_rep],
        });
    }
    if let (Some(mu_rep), Some(chi_rep)) = (
        find_supplied(supplied, InvariantName::Mu),
        find_supplied(supplied, InvariantName::ChiTilde),
    ) {
        let value = eu_n_ge_7(n, mu_rep.value.max(0) as u64, chi_rep.value)?;
        return Ok(EuResult {
            value,
            regime: Regime::NGe7Type232,
            inputs: vec![mu_rep.clone(), chi_rep.clone()],
        });
    }
    Err(stopped.unwrap_or(Error::GenericityExhausted(GENERICITY_RETRIES as u32)))
}

/// General three-strata closed form:
/// `((−1)^{dim ΣX∩l} μ(ΣX∩l) + 1)(χ(L_{V₁}) − 1) + χ̃(X∩l) + 1`,
/// with the first factor collapsing to 0 when the singular stratum is just
/// the origin (its slice is then empty).
fn three_strata_route(
    x: &EidsDescriptor,
    seed: u64,
    supplied: &[InvariantReport],
    limits: &ResourceLimits,
) -> Result<EuResult> {
    let n = x.ambient_dim();
    let t = x.t();
    let d = x.expected_dim();
    let chi_l = complex_link_chi(x, t - 1)?;
    let (a, b) = (x.nrows().min(x.ncols()), x.nrows().max(x.ncols()));
    let smooth_bound = (a - t + 2) * (b - t + 2);
    let slice_smoothable = n - 1 < smooth_bound;

    let sigma_x = Ideal::new(x.ctx(), dedupe_signed(singular_set(x).generators()));
    let dim_sigma = match germ_dimension(&sigma_x, limits) {
        Ok(v) => v,
        Err(Error::IdealIsUnit) => {
            // Smooth at the origin.
            return Ok(EuResult {
                value: 1,
                regime: Regime::GeneralThreeStrata,
                inputs: Vec::new(),
            });
        }
        Err(e) => return Err(e),
    };

    let mut stopped = None;
    for r in 0..GENERICITY_RETRIES {
        let l = generic_linear_form(x.ctx(), seed + r);
        let sliced = match slice(x, &l) {
            Ok(s) => s,
            Err(_) => continue,
        };

        let (term, mu_rep) = if dim_sigma == 0 {
            // The singular stratum off the origin is empty; two strata only.
            (0, None)
        } else {
            let gens = dedupe_signed(singular_set(&sliced).generators());
            let sigma = Ideal::new(sliced.ctx(), gens);
            let sigma_dim = match germ_dimension(&sigma, limits) {
                Ok(v) => v,
                Err(Error::IdealIsUnit) => continue,
                Err(e @ Error::ResourceLimit(_)) => {
                    stopped = Some(e);
                    break;
                }
                Err(e) => return Err(e),
            };
            let codim = sliced.ambient_dim() - sigma_dim;
            let pres =
                match IcisPresentation::new(sliced.ctx(), sigma.generators().to_vec(), codim) {
                    Ok(p) => p,
                    Err(Error::NotIcis(_)) => continue,
                    Err(e) => return Err(e),
                };
            let mu = match milnor_icis(&pres, seed + r, limits) {
                Ok(v) => v,
                Err(
                    Error::NonIsolated(_)
                    | Error::GenericityExhausted(_)
                    | Error::DimensionMismatch(_)
                    | Error::NotIcis(_),
                ) => continue,
                Err(e @ Error::ResourceLimit(_)) => {
                    stopped = Some(e);
                    break;
                }
                Err(e) => return Err(e),
            };
            (
                1 + sign(dim_sigma - 1) * mu as i64,
                Some(InvariantReport::computed(
                    InvariantName::Mu,
                    mu as i64,
                    seed + r,
                    "sliced singular locus",
                )),
            )
        };

        let (chi, chi_rep) = if slice_smoothable {
            match nu_vanishing(&sliced, seed + r, limits) {
                Ok(nu_slice) => {
                    let chi = sign(d - 1) * nu_slice;
                    (
                        chi,
                        InvariantReport::computed(
                            InvariantName::ChiTilde,
                            chi,
                            seed + r,
                            "slice smoothing",
                        ),
                    )
                }
                Err(
                    Error::GenericityExhausted(_)
                    | Error::DimensionMismatch(_)
                    | Error::NonIsolated(_),
                ) => continue,
                Err(e @ Error::ResourceLimit(_)) => {
                    stopped = Some(e);
                    break;
                }
                Err(e) => return Err(e),
            }
        } else if let Some(rep) = find_supplied(supplied, InvariantName::ChiTilde) {
            (rep.value, rep.clone())
        } else {
            return Err(Error::MissingInput("chi_tilde".to_string()));
        };

        let value = term * (chi_l - 1) + chi + 1;
        let mut inputs = Vec::new();
        if let Some(rep) = mu_rep {
            inputs.push(rep);
        }
        inputs.push(chi_rep);
        return Ok(EuResult { value, regime: Regime::GeneralThreeStrata, inputs });
    }
    if let Some(rep) = find_supplied(supplied, InvariantName::ChiTilde) {
        if dim_sigma == 0 {
            return Ok(EuResult {
                value: rep.value + 1,
                regime: Regime::GeneralThreeStrata,
                inputs: vec![rep.clone()],
            });
        }
        if let Some(mu_rep) = find_supplied(supplied, InvariantName::Mu) {
            let term = 1 + sign(dim_sigma - 1) * mu_rep.value;
            return Ok(EuResult {
                value: term * (chi_l - 1) + rep.value + 1,
                regime: Regime::GeneralThreeStrata,
                inputs: vec![mu_rep.clone(), rep.clone()],
            });
        }
    }
    Err(stopped.unwrap_or(Error::GenericityExhausted(GENERICITY_RETRIES as u32)))
}
