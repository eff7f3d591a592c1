//! Resource guardrails for basis computations.

use std::cell::Cell;

/// Bounds enforced by the standard-basis engine.
///
/// Colength and dimension questions about germs are decidable in principle,
/// but a runaway basis computation helps nobody.  When a bound is hit the
/// engine returns [`crate::Error::ResourceLimit`]; it never truncates a
/// result silently.
///
/// Besides the static degree and basis-size caps, every value carries a
/// cumulative work meter: reduction steps are charged against `max_work`
/// across the whole computation the value is threaded through.  The meter is
/// a deterministic stand-in for a wall clock — two runs with the same seed
/// and limits abort (or don't) at exactly the same point on any machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceLimits {
    /// Maximum total degree any intermediate polynomial may reach.
    pub max_degree: u32,
    /// Maximum number of elements in a basis under construction.
    pub max_basis: usize,
    /// Total budget of charged reduction steps.
    pub max_work: u64,
    spent: Cell<u64>,
}

impl ResourceLimits {
    pub fn new(max_degree: u32, max_basis: usize, max_work: u64) -> ResourceLimits {
        ResourceLimits { max_degree, max_basis, max_work, spent: Cell::new(0) }
    }

    /// Budget of S-pair reduction steps, derived from `max_basis` so that a
    /// run with fixed limits is deterministic regardless of wall clock.
    pub(crate) fn max_pair_steps(&self) -> usize {
        self.max_basis.saturating_mul(20).saturating_add(1000)
    }

    /// Charge `n` units against the work budget; `false` once exhausted.
    pub(crate) fn charge(&self, n: u64) -> bool {
        let next = self.spent.get().saturating_add(n);
        self.spent.set(next);
        next <= self.max_work
    }

    /// Work charged so far.
    pub fn spent(&self) -> u64 {
        self.spent.get()
    }

    /// A fresh meter with the same caps, nothing spent yet.
    pub fn reset(&self) -> ResourceLimits {
        ResourceLimits::new(self.max_degree, self.max_basis, self.max_work)
    }
}

impl Default for ResourceLimits {
    fn default() -> Self {
        ResourceLimits::new(60, 5000, DEFAULT_MAX_WORK)
    }
}

/// Default work budget.  Calibrated so the bundled worked examples finish
/// with ample headroom while a diverging computation aborts within tens of
/// seconds instead of hours.
pub const DEFAULT_MAX_WORK: u64 = 2_000_000;
