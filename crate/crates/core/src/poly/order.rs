//! Monomial orders.
//!
//! Two orders are part of the public interface: a global degree order for
//! ordinary Gröbner bases and a local order realizing the ring of germs at
//! the origin.  A third, crate-internal order eliminates an auxiliary last
//! variable; it powers ideal intersection and saturation.

use std::cmp::Ordering;

/// The public monomial orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic: a well-order, `x_i > 1` for every
    /// variable.  Basis computations under this order stay in the
    /// polynomial ring.
    GlobalDegRevLex,
    /// Negative degree reverse lexicographic: `1 > x_i` for every variable,
    /// so units of the local ring at the origin have leading term 1.  Basis
    /// computations under this order realize the localization at 0.
    LocalNegDegRevLex,
}

impl MonomialOrder {
    pub fn is_local(self) -> bool {
        matches!(self, MonomialOrder::LocalNegDegRevLex)
    }

    pub(crate) fn active(self) -> ActiveOrder {
        match self {
            MonomialOrder::GlobalDegRevLex => ActiveOrder::DegRevLex,
            MonomialOrder::LocalNegDegRevLex => ActiveOrder::NegDegRevLex,
        }
    }
}

/// Orders the engine actually sorts by; includes the internal elimination
/// order in addition to the two public ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum ActiveOrder {
    DegRevLex,
    NegDegRevLex,
    /// Compares the exponent of the *last* variable first (larger wins),
    /// breaking ties by DegRevLex on the whole vector.  Any monomial
    /// containing the last variable beats any monomial free of it, so a
    /// basis under this order eliminates the last variable.
    AuxLast,
}

impl ActiveOrder {
    /// Compare two exponent vectors of equal length.
    pub(crate) fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            ActiveOrder::DegRevLex => {
                let (da, db) = (total(a), total(b));
                if da != db {
                    return da.cmp(&db);
                }
                revlex_tie(a, b)
            }
            ActiveOrder::NegDegRevLex => {
                let (da, db) = (total(a), total(b));
                if da != db {
                    // lower total degree is *larger* in the local order
                    return db.cmp(&da);
                }
                revlex_tie(a, b)
            }
            ActiveOrder::AuxLast => {
                let (la, lb) = (last(a), last(b));
                if la != lb {
                    return la.cmp(&lb);
                }
                ActiveOrder::DegRevLex.cmp(a, b)
            }
        }
    }
}

fn total(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

fn last(a: &[u32]) -> u32 {
    a.last().copied().unwrap_or(0)
}

/// Reverse-lexicographic tie-break shared by both degree orders: on equal
/// total degree, the monomial whose rightmost differing exponent is the
/// *smaller* one wins.
fn revlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}
