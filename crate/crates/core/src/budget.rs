//! Explicit search budgets: node counts and wall-clock limits.
//!
//! Exceeding a budget is always reported as a distinct outcome, never a
//! silently wrong answer.

use std::time::{Duration, Instant};

/// Limits for a single search. The default is unlimited.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(limit: u64) -> Self {
        Budget {
            node_limit: Some(limit),
            time_limit: None,
        }
    }

    pub fn millis(ms: u64) -> Self {
        Budget {
            node_limit: None,
            time_limit: Some(Duration::from_millis(ms)),
        }
    }

    pub fn start(&self) -> BudgetMeter {
        BudgetMeter {
            nodes: 0,
            node_limit: self.node_limit,
            deadline: self.time_limit.map(|d| Instant::now() + d),
        }
    }
}

/// Marker returned when a budget is exhausted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetStop;

/// Running counters for one search.
#[derive(Debug)]
pub struct BudgetMeter {
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
}

impl BudgetMeter {
    /// Records one expanded search node; errs once a limit is crossed.
    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetStop> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(BudgetStop);
            }
        }
        if let Some(deadline) = self.deadline {
            // clock checks are periodic, plus one up front so a tiny budget
            // trips even for short searches
            if (self.nodes == 1 || self.nodes % 1024 == 0) && Instant::now() > deadline {
                return Err(BudgetStop);
            }
        }
        Ok(())
    }

    pub fn nodes_used(&self) -> u64 {
        self.nodes
    }
}
