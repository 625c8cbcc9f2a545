use serde::Serialize;

use crate::error::{domain, Result, WidthError};
use crate::graph::{components_within, Graph, VertexSet};
use crate::limits::{check_cap, Caps};
use crate::separators::{min_balanced_within, pad_within};

/// A vertex ranking: `levels[v] >= 1` for every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ranking {
    pub levels: Vec<u32>,
}

impl Ranking {
    pub fn height(&self) -> u32 {
        self.levels.iter().copied().max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RankingCheck {
    Valid,
    /// Two vertices sharing `level` in one component of the subgraph induced
    /// by the vertices of level at most `level`.
    Violation {
        u: usize,
        v: usize,
        level: u32,
    },
}

impl RankingCheck {
    pub fn is_valid(self) -> bool {
        self == RankingCheck::Valid
    }
}

/// Checks, level by level, that each component of `{v : level(v) <= l}`
/// holds at most one vertex of level exactly `l`.
pub fn is_valid_ranking(g: &Graph, ranking: &Ranking) -> Result<RankingCheck> {
    let n = g.n();
    if ranking.levels.len() != n {
        return Err(domain(format!(
            "ranking assigns {} levels for {n} vertices",
            ranking.levels.len()
        )));
    }
    if let Some(v) = ranking.levels.iter().position(|&l| l == 0) {
        return Err(domain(format!("vertex {v} has no level")));
    }
    let mut levels: Vec<u32> = ranking.levels.clone();
    levels.sort_unstable();
    levels.dedup();
    let mut comp = vec![usize::MAX; n];
    for &level in &levels {
        comp.iter_mut().for_each(|c| *c = usize::MAX);
        let mut stack = Vec::new();
        let allowed = |v: usize| ranking.levels[v] <= level;
        for start in (0..n).filter(|&v| allowed(v)) {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = start;
            stack.push(start);
            let mut top: Option<usize> = None;
            let mut members = Vec::new();
            while let Some(u) = stack.pop() {
                members.push(u);
                for &w in g.neighbors(u) {
                    if allowed(w) && comp[w] == usize::MAX {
                        comp[w] = start;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            for u in members {
                if ranking.levels[u] == level {
                    if let Some(first) = top {
                        return Ok(RankingCheck::Violation {
                            u: first,
                            v: u,
                            level,
                        });
                    }
                    top = Some(u);
                }
            }
        }
    }
    Ok(RankingCheck::Valid)
}

/// Minimum ranking height by trying every level assignment, for tiny graphs.
pub fn min_ranking_height_exhaustive(g: &Graph) -> Result<u32> {
    let n = g.n();
    check_cap("exhaustive ranking search", n, 8)?;
    if n == 0 {
        return Ok(0);
    }
    for h in 1..=n as u32 {
        let mut levels = vec![1u32; n];
        loop {
            if is_valid_ranking(
                g,
                &Ranking {
                    levels: levels.clone(),
                },
            )?
            .is_valid()
            {
                return Ok(h);
            }
            // odometer increment over {1..h}^n
            let mut i = 0;
            while i < n && levels[i] == h {
                levels[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            levels[i] += 1;
        }
    }
    unreachable!("distinct levels always form a valid ranking")
}

/// Ranking built from balanced separators of size exactly `k`: when more than
/// `k` vertices remain, a minimum balanced separator is padded to `k`
/// vertices, placed above everything else, and each remaining component is
/// ranked independently. Height is at most `R_k(n)`.
pub fn separator_ranking(g: &Graph, k: usize, caps: &Caps) -> Result<Ranking> {
    if k < 1 {
        return Err(domain("separator size k must be at least 1"));
    }
    check_cap("separator ranking", g.n(), caps.min_separator)?;
    let masks = g.masks()?;
    let mut levels = vec![0u32; g.n()];
    rank_within(&masks, VertexSet::full(g.n()), k, &mut levels)?;
    Ok(Ranking { levels })
}

fn rank_within(
    masks: &[VertexSet],
    within: VertexSet,
    k: usize,
    levels: &mut [u32],
) -> Result<u32> {
    if within.len() <= k {
        for (i, v) in within.iter().enumerate() {
            levels[v] = i as u32 + 1;
        }
        return Ok(within.len() as u32);
    }
    let mut x = min_balanced_within(masks, within, false, k).ok_or_else(|| {
        WidthError::InvalidSeparator(format!(
            "induced subgraph on {within:?} has no balanced separator of size <= {k}"
        ))
    })?;
    while x.len() < k {
        x = pad_within(masks, within, x)?;
    }
    let mut below = 0;
    for part in components_within(masks, within.difference(x)) {
        below = below.max(rank_within(masks, part, k, levels)?);
    }
    for (i, v) in x.iter().enumerate() {
        levels[v] = below + i as u32 + 1;
    }
    Ok(below + k as u32)
}
