//! Exact width parameters on small graphs, rankings, and the bound chain.

mod bandwidth;
mod chain;
mod cycle_rank;
mod ranking;
mod subset_dp;

pub use bandwidth::{bandwidth, layout_stretch};
pub use chain::{verify_chain, BoundVerdict, ChainChecks, WidthReport, Witnesses};
pub use cycle_rank::cycle_rank;
pub use ranking::{
    is_valid_ranking, min_ranking_height_exhaustive, separator_ranking, Ranking, RankingCheck,
};
pub use subset_dp::{elimination_width, pathwidth, treewidth, vertex_separation};
