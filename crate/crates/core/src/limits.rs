//! Size caps for the exact solvers.
//!
//! Every exact solver refuses inputs above its cap. The caps are plain data so
//! the CLI can raise them explicitly (`--cap-n`, `--deep`, `WIDTHLAB_CAP_N`).

use crate::error::{Result, WidthError};

/// Hard ceiling imposed by the one-word bitset representation.
pub const BITSET_MAX: usize = 64;

/// Hard ceiling for solvers that allocate one byte per vertex subset.
pub const SUBSET_TABLE_MAX: usize = 30;

/// Largest vertex count a generator will produce.
pub const GENERATOR_MAX: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    pub cycle_rank: usize,
    pub treewidth: usize,
    pub pathwidth: usize,
    pub bandwidth: usize,
    pub separator_number: usize,
    pub min_separator: usize,
    /// Upper limit on distinct clique subsets explored for chordal clique separators.
    pub clique_subsets: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cycle_rank: 16,
            treewidth: 18,
            pathwidth: 18,
            bandwidth: 12,
            separator_number: 12,
            min_separator: 20,
            clique_subsets: 1 << 20,
        }
    }
}

impl Caps {
    /// Raised caps used by `--deep`.
    pub fn deep() -> Self {
        Caps {
            cycle_rank: 20,
            treewidth: 20,
            pathwidth: 20,
            bandwidth: 16,
            separator_number: 14,
            min_separator: 24,
            clique_subsets: 1 << 22,
        }
    }

    /// Sets every vertex-count cap to `n` (clamped to the bitset width).
    pub fn uniform(n: usize) -> Self {
        let n = n.min(BITSET_MAX);
        Caps {
            cycle_rank: n,
            treewidth: n,
            pathwidth: n,
            bandwidth: n,
            separator_number: n,
            min_separator: n,
            clique_subsets: Caps::default().clique_subsets,
        }
    }

    /// Smallest cap among the solvers `verify_chain` runs.
    pub fn chain(&self) -> usize {
        [
            self.cycle_rank,
            self.treewidth,
            self.pathwidth,
            self.bandwidth,
            self.separator_number,
        ]
        .into_iter()
        .min()
        .unwrap_or(0)
    }
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(BITSET_MAX);
    if n > cap {
        Err(WidthError::SizeLimitExceeded { what, n, cap })
    } else {
        Ok(())
    }
}
