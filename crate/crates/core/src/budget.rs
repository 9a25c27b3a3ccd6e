//! Step budgets and size caps.

use core::cell::Cell;

use alloc::format;

use crate::{Error, Result};

/// Default number of elementary steps before a computation gives up.
pub const DEFAULT_STEPS: u64 = 10_000_000;

/// A step counter shared by one top-level request.
///
/// Steps are charged for the units of work that can blow up: visited
/// homomorphism search nodes, product entries, polynomial clone members,
/// subsets tried, and so on.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    /// Charges `n` steps, failing once the running total passes the limit.
    pub fn spend(&self, n: u64, what: &str) -> Result<()> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.limit {
            return Err(Error::SizeBudgetExceeded(format!(
                "{what}: more than {} steps",
                self.limit
            )));
        }
        Ok(())
    }

    /// Fails up front when a computation of known size would not fit.
    pub fn check_size(&self, needed: u128, what: &str) -> Result<()> {
        if needed > u128::from(self.limit) {
            return Err(Error::SizeBudgetExceeded(format!(
                "{what} needs {needed} steps, limit is {}",
                self.limit
            )));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_STEPS)
    }
}

/// Size caps that sit beside the step budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest carrier for which the whole congruence lattice is enumerated.
    pub max_congruence_size: usize,
    /// Largest carrier for which filters are found by trying every subset.
    pub max_subset_sweep: usize,
    /// Largest generator arity swept by the tuple-based checkers.
    pub n_max: usize,
    /// Longest parameter tuple searched by parametrized candidates.
    pub max_params: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_congruence_size: 12,
            max_subset_sweep: 16,
            n_max: 3,
            max_params: 2,
        }
    }
}
