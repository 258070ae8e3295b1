use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Limits on an exhaustive search. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

impl SearchBudget {
    pub const UNLIMITED: SearchBudget = SearchBudget {
        max_nodes: None,
        max_millis: None,
    };

    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes: Some(max_nodes),
            max_millis: None,
        }
    }

    pub fn millis(max_millis: u64) -> Self {
        SearchBudget {
            max_nodes: None,
            max_millis: Some(max_millis),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_nodes == Some(0) || self.max_millis == Some(0) {
            return Err(Error::Invalid("budget limits must be positive".into()));
        }
        Ok(())
    }

    pub fn meter(&self) -> Meter {
        Meter {
            budget: *self,
            nodes: 0,
            started: Instant::now(),
        }
    }
}

/// Running node/time counter for one search.
#[derive(Debug, Clone)]
pub struct Meter {
    budget: SearchBudget,
    nodes: u64,
    started: Instant,
}

impl Meter {
    pub fn unlimited() -> Self {
        SearchBudget::UNLIMITED.meter()
    }

    /// Counts one search node; errors once a limit is crossed.
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                return Err(Error::BudgetExceeded { nodes: self.nodes });
            }
        }
        if let Some(ms) = self.budget.max_millis {
            if self.nodes & 0x3ff == 0 && self.started.elapsed() > Duration::from_millis(ms) {
                return Err(Error::BudgetExceeded { nodes: self.nodes });
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
