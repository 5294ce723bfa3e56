use std::cell::Cell;

use crate::error::{Error, Result};

/// Node-count cap for exhaustive searches.
///
/// Every partial array (or partial tableau) visited by a search charges
/// one unit. Searches fail with [`Error::BudgetExceeded`] once the cap is
/// crossed instead of running unbounded.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 100_000_000;

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

    #[inline]
    pub fn charge(&self, nodes: u64) -> Result<()> {
        let used = self.used.get().saturating_add(nodes);
        self.used.set(used);
        if used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_LIMIT)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charge_fails_past_limit() {
        let b = Budget::new(3);
        assert!(b.charge(2).is_ok());
        assert!(b.charge(1).is_ok());
        assert_eq!(b.charge(1), Err(Error::BudgetExceeded { limit: 3 }));
        assert_eq!(b.used(), 4);
    }
}
