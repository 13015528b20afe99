use crate::error::{Error, Result};

/// Caps on input sizes and on the number of nodes any single search may visit.
///
/// The object/morphism caps apply to categories read from user input; the node
/// cap bounds every backtracking search and generated table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeGuard {
    pub max_objects: usize,
    pub max_morphisms: usize,
    pub max_nodes: u64,
}

impl Default for SizeGuard {
    fn default() -> Self {
        SizeGuard {
            max_objects: 10,
            max_morphisms: 40,
            max_nodes: 10_000_000,
        }
    }
}

impl SizeGuard {
    pub fn unbounded() -> Self {
        SizeGuard {
            max_objects: usize::MAX,
            max_morphisms: usize::MAX,
            max_nodes: u64::MAX,
        }
    }

    pub(crate) fn check_input(&self, objects: usize, morphisms: usize) -> Result<()> {
        if objects > self.max_objects {
            return Err(Error::SizeGuardExceeded {
                what: "object count",
                actual: objects as u64,
                limit: self.max_objects as u64,
            });
        }
        if morphisms > self.max_morphisms {
            return Err(Error::SizeGuardExceeded {
                what: "morphism count",
                actual: morphisms as u64,
                limit: self.max_morphisms as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn check_table(&self, what: &'static str, size: u64) -> Result<()> {
        if size > self.max_nodes {
            return Err(Error::SizeGuardExceeded {
                what,
                actual: size,
                limit: self.max_nodes,
            });
        }
        Ok(())
    }

    pub(crate) fn counter(&self) -> NodeCounter {
        NodeCounter {
            visited: 0,
            limit: self.max_nodes,
        }
    }
}

/// Counts search nodes against the guard's budget.
#[derive(Debug)]
pub(crate) struct NodeCounter {
    visited: u64,
    limit: u64,
}

impl NodeCounter {
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.visited += 1;
        if self.visited > self.limit {
            return Err(Error::SizeGuardExceeded {
                what: "search nodes",
                actual: self.visited,
                limit: self.limit,
            });
        }
        Ok(())
    }
}
