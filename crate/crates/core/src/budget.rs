//! Wall-clock budgets for long enumerations.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self { deadline: None }
    }

    pub fn seconds(s: f64) -> Self {
        Self {
            deadline: Some(Instant::now() + Duration::from_secs_f64(s)),
        }
    }

    pub fn check(&self, what: &str) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded(format!(
                "time budget exhausted during {what}"
            ))),
            _ => Ok(()),
        }
    }
}
