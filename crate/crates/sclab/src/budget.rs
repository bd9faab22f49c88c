//! Budgets and deadlines for the potentially expensive searches.
//!
//! Every search that can blow up (subgroup enumeration, isomorphism
//! backtracking, catalog scans) takes a [`Deadline`] and reports
//! [`GroupError::BudgetExceeded`] instead of guessing when it runs out.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::GroupError;

/// Default construction cap on group order.
pub const DEFAULT_ORDER_CAP: usize = 2000;
/// Default cap on group order for subgroup enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 200;
/// Hard ceiling imposed by the table representation.
pub const HARD_ORDER_CEILING: usize = u16::MAX as usize;

/// Resource limits threaded through classification, claim checking, and scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    /// Per-operation (and per-catalog-entry) time budget in milliseconds.
    pub time_budget_ms: u64,
    /// Maximum group order accepted by constructors.
    pub order_cap: usize,
    /// Maximum group order accepted by subgroup enumeration.
    pub enumeration_cap: usize,
    /// Cap on the number of (H, K) subgroup pairs sampled by the
    /// isomorphism-theorem checkers.
    pub pair_cap: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            time_budget_ms: 5000,
            order_cap: DEFAULT_ORDER_CAP,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            pair_cap: 64,
        }
    }
}

impl Budgets {
    /// Starts the per-operation clock.
    pub fn deadline(&self) -> Deadline {
        Deadline::after_ms(self.time_budget_ms)
    }
}

/// A wall-clock deadline. `Deadline::none()` never expires.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    end: Option<Instant>,
}

impl Deadline {
    pub fn none() -> Self {
        Deadline { end: None }
    }

    pub fn after_ms(ms: u64) -> Self {
        Deadline {
            end: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    pub fn expired(&self) -> bool {
        matches!(self.end, Some(end) if Instant::now() >= end)
    }

    /// Errors with a named operation once the deadline has passed.
    pub fn check(&self, what: &'static str) -> Result<(), GroupError> {
        if self.expired() {
            Err(GroupError::BudgetExceeded { what })
        } else {
            Ok(())
        }
    }
}
