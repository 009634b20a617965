//! Node budgets for the exhaustive searches.
//!
//! Every backtracking search in the crate counts the nodes it visits and
//! stops with [`BudgetExceeded`] once the configured cap is reached, so an
//! input that is too large fails loudly instead of hanging.

use thiserror::Error;

/// Default node cap shared by all searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Maximum number of search nodes a single search may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const fn new(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    pub const fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
        }
    }

    pub(crate) fn counter(self) -> NodeCounter {
        NodeCounter {
            used: 0,
            limit: self.max_nodes,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("search budget of {limit} nodes exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

#[derive(Debug)]
pub(crate) struct NodeCounter {
    used: u64,
    limit: u64,
}

impl NodeCounter {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    #[cfg(test)]
    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}
