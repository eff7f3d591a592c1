//! Numerical invariants of singular germs.
//!
//! Hypersurface Milnor and Tjurina numbers as Jacobian colengths, the
//! Milnor–Orlik product for quasi-homogeneous germs (an independent oracle),
//! Milnor numbers of isolated complete intersections by the Lê–Greuel
//! slicing recursion, the multiplicity `m₀`, the polar multiplicity `m_d`
//! measured in a one-parameter deformation, and the vanishing Euler
//! characteristic `ν` of a smoothing.
//!
//! Every genericity choice (linear forms, deformation constants) is drawn
//! from a seeded pool and re-drawn a bounded number of times when it turns
//! out degenerate, so results are deterministic per seed.

mod hypersurface;
mod icis;
mod multiplicity;
mod nu;
mod polar;

pub use hypersurface::{milnor_hypersurface, milnor_orlik_oracle, tjurina_hypersurface};
pub use icis::{milnor_icis, IcisPresentation};
pub use multiplicity::multiplicity_m0;
pub use nu::{nu_vanishing, nu_with_md};
pub use polar::polar_multiplicity_md;

use std::fmt;

/// How many incremented seeds a genericity-dependent computation tries
/// before giving up.
pub(crate) const GENERICITY_RETRIES: u64 = 8;

/// Which invariant a report carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantName {
    Mu,
    Tau,
    M0,
    Md,
    Nu,
    ChiTilde,
    Eu,
}

impl InvariantName {
    pub fn as_str(self) -> &'static str {
        match self {
            InvariantName::Mu => "mu",
            InvariantName::Tau => "tau",
            InvariantName::M0 => "m0",
            InvariantName::Md => "md",
            InvariantName::Nu => "nu",
            InvariantName::ChiTilde => "chi_tilde",
            InvariantName::Eu => "eu",
        }
    }

    /// Inverse of [`as_str`](Self::as_str); `None` for unrecognized text.
    pub fn parse(s: &str) -> Option<InvariantName> {
        Some(match s {
            "mu" => InvariantName::Mu,
            "tau" => InvariantName::Tau,
            "m0" => InvariantName::M0,
            "md" => InvariantName::Md,
            "nu" => InvariantName::Nu,
            "chi_tilde" => InvariantName::ChiTilde,
            "eu" => InvariantName::Eu,
            _ => return None,
        })
    }
}

impl fmt::Display for InvariantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a reported value came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// The engine computed it; `seed` is the genericity seed actually used
    /// and `method` names the computation route.
    Computed { seed: u64, method: String },
    /// The caller supplied it (input document field).
    Supplied,
    /// Bundled table data, identified by its row.
    Corpus(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Computed { seed, method } => {
                write!(f, "computed (seed {seed}, {method})")
            }
            Provenance::Supplied => f.write_str("supplied"),
            Provenance::Corpus(row) => write!(f, "corpus row {row}"),
        }
    }
}

/// One named integer invariant with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub name: InvariantName,
    pub value: i64,
    pub provenance: Provenance,
}

impl InvariantReport {
    pub fn computed(name: InvariantName, value: i64, seed: u64, method: &str) -> InvariantReport {
        InvariantReport {
            name,
            value,
            provenance: Provenance::Computed { seed, method: method.to_string() },
        }
    }

    pub fn supplied(name: InvariantName, value: i64) -> InvariantReport {
        InvariantReport { name, value, provenance: Provenance::Supplied }
    }

    pub fn corpus(name: InvariantName, value: i64, row: &str) -> InvariantReport {
        InvariantReport { name, value, provenance: Provenance::Corpus(row.to_string()) }
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {} [{}]", self.name, self.value, self.provenance)
    }
}
