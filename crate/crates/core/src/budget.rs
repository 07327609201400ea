use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Limits for the bounded searches in [`crate::rank`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    /// Largest denominator tried by the representation search.
    pub d_max: u64,
    /// Largest numerator generator; `None` means `8 · max(min_gens)`.
    pub gen_bound: Option<u64>,
    /// Largest candidate pool for the witness search.
    pub pool: usize,
    /// Search nodes allowed per denominator (rep search) or per witness search.
    pub max_nodes: u64,
    /// Wall-clock cap per search operation.
    #[serde(skip)]
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            d_max: 8,
            gen_bound: None,
            pool: 40,
            max_nodes: 2_000_000,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn gen_bound_for(&self, max_gen: u64) -> u64 {
        self.gen_bound.unwrap_or(max_gen.saturating_mul(8))
    }

    pub(crate) fn start(&self) -> Meter {
        Meter {
            nodes: 0,
            spent: false,
            max_nodes: self.max_nodes,
            deadline: self.time_limit.map(|t| Instant::now() + t),
        }
    }
}

/// Running node count and deadline for a single search.
#[derive(Debug)]
pub(crate) struct Meter {
    nodes: u64,
    spent: bool,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Meter {
    /// Counts one node; false once the budget is spent.
    pub(crate) fn tick(&mut self) -> bool {
        if self.spent {
            return false;
        }
        self.nodes += 1;
        let late = match self.deadline {
            Some(deadline) if self.nodes.is_multiple_of(1024) => Instant::now() >= deadline,
            _ => false,
        };
        if self.nodes > self.max_nodes || late {
            self.spent = true;
        }
        !self.spent
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}
