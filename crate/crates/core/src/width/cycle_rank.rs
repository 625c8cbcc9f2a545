use std::collections::HashMap;

use super::Ranking;
use crate::error::Result;
use crate::graph::{components_within, Graph, VertexSet};
use crate::limits::{check_cap, Caps};

struct Solver<'a> {
    masks: &'a [VertexSet],
    /// Keyed by connected vertex sets of the original graph.
    memo: HashMap<VertexSet, u32>,
}

impl Solver<'_> {
    fn rank(&mut self, set: VertexSet) -> u32 {
        components_within(self.masks, set)
            .into_iter()
            .map(|c| self.rank_connected(c))
            .max()
            .unwrap_or(0)
    }

    fn rank_connected(&mut self, comp: VertexSet) -> u32 {
        if comp.len() == 1 {
            return 1;
        }
        if let Some(&r) = self.memo.get(&comp) {
            return r;
        }
        // a connected graph with an edge has rank at least 2
        let floor = 2;
        let mut best = comp.len() as u32;
        for v in comp {
            let r = 1 + self.rank(comp.without(v));
            if r < best {
                best = r;
                if best == floor {
                    break;
                }
            }
        }
        self.memo.insert(comp, best);
        best
    }

    fn assign(&mut self, set: VertexSet, levels: &mut [u32]) {
        for comp in components_within(self.masks, set) {
            if comp.len() == 1 {
                levels[comp.min().unwrap()] = 1;
                continue;
            }
            let target = self.rank_connected(comp);
            let v = comp
                .iter()
                .find(|&v| 1 + self.rank(comp.without(v)) == target)
                .expect("memoized optimum has a realizing vertex");
            levels[v] = target;
            self.assign(comp.without(v), levels);
        }
    }
}

/// Exact cycle rank with an optimal ranking.
///
/// Edgeless nonempty graphs have rank 1, the empty graph rank 0. A connected
/// graph's rank is one more than the best rank after deleting a single
/// vertex; disconnected graphs take the maximum over components. The witness
/// gives each deleted vertex the rank of the component it was chosen in,
/// preferring the smallest id among optimal choices.
pub fn cycle_rank(g: &Graph, caps: &Caps) -> Result<(u32, Ranking)> {
    check_cap("cycle rank", g.n(), caps.cycle_rank)?;
    let masks = g.masks()?;
    let mut solver = Solver {
        masks: &masks,
        memo: HashMap::new(),
    };
    let all = VertexSet::full(g.n());
    let r = solver.rank(all);
    let mut levels = vec![0u32; g.n()];
    solver.assign(all, &mut levels);
    Ok((r, Ranking { levels }))
}
