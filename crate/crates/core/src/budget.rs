use crate::error::{Error, Result};

/// Default number of elementary search steps allowed per operation.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Step counter shared by the exhaustive searches.
///
/// Every search charges its elementary steps (intersection tests, visited
/// nodes, pivots) here; once the limit is crossed the search aborts with
/// [`Error::BudgetExceeded`], which keeps "no witness exists" distinct from
/// "gave up looking".
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub fn charge(&mut self, steps: u64) -> Result<()> {
        self.used = self.used.saturating_add(steps);
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.charge(1)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
