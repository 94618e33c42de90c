use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Work limit shared by all Gröbner-backed operations of one analysis.
///
/// Steps count reductions; the deadline is checked every `CHECK_EVERY` steps.
#[derive(Debug)]
pub struct Budget {
    used: AtomicU64,
    limit: Option<u64>,
    deadline: Option<Instant>,
}

const CHECK_EVERY: u64 = 256;

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            used: AtomicU64::new(0),
            limit: None,
            deadline: None,
        }
    }

    pub fn with_steps(limit: u64) -> Self {
        Budget {
            limit: Some(limit),
            ..Self::unlimited()
        }
    }

    pub fn with_timeout(d: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + d),
            ..Self::unlimited()
        }
    }

    pub fn and_steps(mut self, limit: Option<u64>) -> Self {
        self.limit = limit;
        self
    }

    pub fn and_timeout(mut self, d: Option<Duration>) -> Self {
        self.deadline = d.map(|d| Instant::now() + d);
        self
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    #[inline]
    pub fn tick(&self, n: u64) -> Result<()> {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        let now = before + n;
        if let Some(l) = self.limit {
            if now > l {
                return Err(Error::Timeout);
            }
        }
        if let Some(d) = self.deadline {
            if before / CHECK_EVERY != now / CHECK_EVERY && Instant::now() > d {
                return Err(Error::Timeout);
            }
        }
        Ok(())
    }

    /// Explicit deadline check for long non-Gröbner loops.
    pub fn check(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Timeout),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::unlimited()
    }
}
