use crate::error::{Error, Result};

/// Search limits for the exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Complete subgraphs produced by clique enumeration.
    pub max_cliques: u64,
    /// Partial-assignment extensions tried by morphism enumeration.
    pub max_morphisms: u64,
    /// Search nodes visited by the isomorphism test.
    pub max_iso_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_cliques: 1_000_000,
            max_morphisms: 10_000_000,
            max_iso_nodes: 1_000_000,
        }
    }
}

/// Counts work against one limit.
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Meter {
    pub(crate) fn new(limit: u64, what: &'static str) -> Self {
        Meter { used: 0, limit, what }
    }

    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::Budget { what: self.what, limit: self.limit })
        } else {
            Ok(())
        }
    }
}
