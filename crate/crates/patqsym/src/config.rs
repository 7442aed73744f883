use crate::error::{Error, Result};

/// Enumeration limits shared by every operation that walks a symmetric group.
///
/// The bound is a configuration value, not a constant: callers (and the CLI
/// via `QSYM_BOUND`) may raise it when they can afford the factorial cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest n for which S_n may be enumerated. Default 10.
    pub enumeration_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_bound: 10,
        }
    }
}

impl Limits {
    pub fn new(enumeration_bound: usize) -> Self {
        Limits { enumeration_bound }
    }

    /// Errors unless `S_n` enumeration is within the configured bound.
    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.enumeration_bound {
            Err(Error::limit(format!(
                "n = {n} exceeds enumeration bound {}",
                self.enumeration_bound
            )))
        } else {
            Ok(())
        }
    }
}
