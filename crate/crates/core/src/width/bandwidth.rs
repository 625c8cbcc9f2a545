use std::collections::{HashSet, VecDeque};

use crate::error::{domain, Result};
use crate::graph::{components, Graph, VertexSet};
use crate::limits::{check_cap, Caps};

/// Largest `|pos(u) - pos(v)|` over edges, for a layout given as a vertex order.
pub fn layout_stretch(g: &Graph, order: &[usize]) -> Result<usize> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(domain("layout is not a permutation of the vertices"));
        }
        pos[v] = i;
    }
    if order.len() != n {
        return Err(domain("layout is not a permutation of the vertices"));
    }
    Ok(g.edges()
        .map(|(u, v)| pos[u].abs_diff(pos[v]))
        .max()
        .unwrap_or(0))
}

fn bfs_layout(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn eccentricity(g: &Graph, start: usize) -> usize {
    let mut dist = vec![usize::MAX; g.n()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut far = 0;
    while let Some(u) = queue.pop_front() {
        far = far.max(dist[u]);
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    far
}

/// Degree and component-diameter lower bounds.
fn lower_bound(g: &Graph) -> usize {
    let mut lb = g.max_degree().div_ceil(2);
    for part in components(g).parts {
        if part.len() > 1 {
            let diameter = part.iter().map(|&v| eccentricity(g, v)).max().unwrap();
            lb = lb.max((part.len() - 1).div_ceil(diameter));
        }
    }
    lb
}

struct Search<'a> {
    masks: &'a [VertexSet],
    n: usize,
    k: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    /// States `(placed, last k placed)` already shown to have no completion.
    dead: HashSet<(u64, Vec<u8>)>,
}

impl Search<'_> {
    fn key(&self, placed: VertexSet) -> (u64, Vec<u8>) {
        let tail = self.order.len().saturating_sub(self.k);
        (
            placed.0,
            self.order[tail..].iter().map(|&v| v as u8).collect(),
        )
    }

    /// Every unplaced vertex with a placed neighbor must land within `k` of
    /// it; checks those deadlines can all be met.
    fn deadlines_feasible(&self, placed: VertexSet) -> bool {
        let next = self.order.len();
        let mut due = vec![0usize; self.k + 1];
        for w in VertexSet::full(self.n).difference(placed) {
            let earliest = self.masks[w]
                .intersection(placed)
                .iter()
                .map(|u| self.pos[u])
                .min();
            if let Some(p) = earliest {
                let deadline = p + self.k;
                if deadline < next {
                    return false;
                }
                due[deadline - next] += 1;
            }
        }
        let mut cumulative = 0;
        for (slack, count) in due.into_iter().enumerate() {
            cumulative += count;
            if cumulative > slack + 1 {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, placed: VertexSet) -> bool {
        let p = self.order.len();
        if p == self.n {
            return true;
        }
        if self.dead.contains(&self.key(placed)) {
            return false;
        }
        for v in VertexSet::full(self.n).difference(placed) {
            let fits = self.masks[v]
                .intersection(placed)
                .iter()
                .all(|u| p - self.pos[u] <= self.k);
            if !fits {
                continue;
            }
            self.pos[v] = p;
            self.order.push(v);
            let next = placed.with(v);
            if self.deadlines_feasible(next) && self.extend(next) {
                return true;
            }
            self.order.pop();
        }
        let key = self.key(placed);
        self.dead.insert(key);
        false
    }
}

/// Exact bandwidth with the lexicographically smallest optimal layout
/// (position order).
///
/// Each candidate width from the lower bound upward is decided by placing
/// vertices left to right in increasing id order, pruning on stretch and on
/// placement deadlines. The identity and BFS layouts cap the search.
pub fn bandwidth(g: &Graph, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    check_cap("bandwidth", n, caps.bandwidth)?;
    let masks = g.masks()?;
    let identity: Vec<usize> = (0..n).collect();
    let upper = layout_stretch(g, &identity)?.min(layout_stretch(g, &bfs_layout(g))?);
    for k in lower_bound(g).min(upper)..=upper {
        let mut search = Search {
            masks: &masks,
            n,
            k,
            order: Vec::with_capacity(n),
            pos: vec![0; n],
            dead: HashSet::new(),
        };
        if search.extend(VertexSet::EMPTY) {
            return Ok((k, search.order));
        }
    }
    unreachable!("the seeded upper bound is always attainable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, hypercube, path, path_power, random_graph, star};

    fn bw(g: &Graph) -> usize {
        let (w, order) = bandwidth(g, &Caps::default()).unwrap();
        assert_eq!(layout_stretch(g, &order).unwrap(), w);
        w
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return false;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    fn brute(g: &Graph) -> (usize, Vec<usize>) {
        let mut p: Vec<usize> = (0..g.n()).collect();
        let mut best = (usize::MAX, p.clone());
        loop {
            let s = layout_stretch(g, &p).unwrap();
            if s < best.0 {
                best = (s, p.clone());
            }
            if !next_permutation(&mut p) {
                return best;
            }
        }
    }

    #[test]
    fn named_values() {
        for leaves in 1..=9 {
            assert_eq!(bw(&star(leaves).unwrap()), leaves.div_ceil(2));
        }
        assert_eq!(bw(&path(9)), 1);
        assert_eq!(bw(&path_power(6, 2).unwrap()), 2);
        assert_eq!(bw(&complete(5).unwrap()), 4);
        assert_eq!(bw(&Graph::edgeless(0)), 0);
        assert_eq!(bw(&Graph::edgeless(3)), 0);
    }

    #[test]
    fn matches_permutation_brute_force_including_witness() {
        for seed in 0..30 {
            let g = random_graph(7, 0.2 + 0.02 * seed as f64, seed).unwrap();
            assert_eq!(
                bandwidth(&g, &Caps::default()).unwrap(),
                brute(&g),
                "seed {seed}"
            );
        }
        let q3 = hypercube(3).unwrap();
        assert_eq!(bandwidth(&q3, &Caps::default()).unwrap(), brute(&q3));
    }

    #[test]
    fn bandwidth_k_iff_subgraph_of_path_power() {
        // bw <= k iff some relabeling embeds G into P_n^k
        for seed in 0..15 {
            let g = random_graph(6, 0.4, 100 + seed).unwrap();
            let w = bw(&g);
            for k in 1..6 {
                let host = path_power(6, k).unwrap();
                let mut p: Vec<usize> = (0..6).collect();
                let mut embeds = false;
                loop {
                    if g.edges().all(|(u, v)| host.has_edge(p[u], p[v])) {
                        embeds = true;
                        break;
                    }
                    if !next_permutation(&mut p) {
                        break;
                    }
                }
                assert_eq!(embeds, w <= k || g.edge_count() == 0, "seed {seed} k {k}");
            }
        }
    }
}
