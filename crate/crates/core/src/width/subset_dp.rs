//! Treewidth and pathwidth by dynamic programming over vertex subsets.
//!
//! Treewidth uses elimination orderings: `TW(S)` is the best width for
//! eliminating `S` first, and eliminating `v` after `S` costs the number of
//! vertices outside `S + v` reachable from `v` through `S`. Pathwidth uses
//! vertex separation: `PW(S)` is the best profile for laying out `S` first,
//! where a prefix `S` costs the number of its vertices with a neighbor outside.

use crate::error::{domain, Result};
use crate::graph::{reach, Graph, VertexSet};
use crate::limits::{check_cap, Caps, SUBSET_TABLE_MAX};

fn outside_reach(masks: &[VertexSet], eliminated: VertexSet, v: usize) -> usize {
    let comp = reach(masks, eliminated.with(v), v);
    let boundary = comp
        .iter()
        .fold(VertexSet::EMPTY, |acc, u| acc.union(masks[u]));
    boundary.difference(eliminated.with(v)).len()
}

fn boundary_size(masks: &[VertexSet], prefix: VertexSet) -> usize {
    prefix
        .iter()
        .filter(|&u| !masks[u].is_subset(prefix))
        .count()
}

/// Fills `table[S]` for every subset `S`, given the per-step cost, and walks
/// back an optimal order (smallest vertex on ties).
fn subset_dp(n: usize, step: impl Fn(VertexSet, usize) -> usize) -> (usize, Vec<usize>) {
    let size = 1usize << n;
    let mut table = vec![0u8; size];
    for s in 1..size {
        let set = VertexSet(s as u64);
        table[s] = set
            .iter()
            .map(|v| (table[set.without(v).0 as usize] as usize).max(step(set.without(v), v)))
            .min()
            .unwrap() as u8;
    }
    let mut order = Vec::with_capacity(n);
    let mut set = VertexSet::full(n);
    while !set.is_empty() {
        let target = table[set.0 as usize] as usize;
        let v = set
            .iter()
            .find(|&v| {
                (table[set.without(v).0 as usize] as usize).max(step(set.without(v), v)) == target
            })
            .unwrap();
        order.push(v);
        set = set.without(v);
    }
    order.reverse();
    (table[size - 1] as usize, order)
}

/// Exact treewidth and an optimal elimination ordering.
pub fn treewidth(g: &Graph, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    check_cap("treewidth", g.n(), caps.treewidth.min(SUBSET_TABLE_MAX))?;
    let masks = g.masks()?;
    Ok(subset_dp(g.n(), |before, v| {
        outside_reach(&masks, before, v)
    }))
}

/// Exact pathwidth and an optimal vertex layout.
pub fn pathwidth(g: &Graph, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    check_cap("pathwidth", g.n(), caps.pathwidth.min(SUBSET_TABLE_MAX))?;
    let masks = g.masks()?;
    Ok(subset_dp(g.n(), |before, v| {
        boundary_size(&masks, before.with(v))
    }))
}

fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(domain("order is not a permutation of the vertices"));
    }
    Ok(())
}

/// Width of an elimination ordering, by simulated elimination with fill-in.
pub fn elimination_width(g: &Graph, order: &[usize]) -> Result<usize> {
    check_permutation(g.n(), order)?;
    let mut masks = g.masks()?;
    let mut remaining = VertexSet::full(g.n());
    let mut width = 0;
    for &v in order {
        remaining = remaining.without(v);
        let later = masks[v].intersection(remaining);
        width = width.max(later.len());
        for u in later {
            masks[u] = masks[u].union(later.without(u));
        }
    }
    Ok(width)
}

/// Vertex separation of a layout: the largest number of placed vertices
/// with an unplaced neighbor.
pub fn vertex_separation(g: &Graph, order: &[usize]) -> Result<usize> {
    check_permutation(g.n(), order)?;
    let masks = g.masks()?;
    let mut prefix = VertexSet::EMPTY;
    let mut width = 0;
    for &v in order {
        prefix = prefix.with(v);
        width = width.max(boundary_size(&masks, prefix));
    }
    Ok(width)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete, complete_binary_tree, cycle, hypercube, path, random_graph, random_tree,
    };

    fn tw(g: &Graph) -> usize {
        let (w, order) = treewidth(g, &Caps::default()).unwrap();
        assert_eq!(elimination_width(g, &order).unwrap(), w);
        w
    }

    fn pw(g: &Graph) -> usize {
        let (w, order) = pathwidth(g, &Caps::default()).unwrap();
        assert_eq!(vertex_separation(g, &order).unwrap(), w);
        w
    }

    /// Minimum over all permutations, via Heap's algorithm.
    fn brute_min(n: usize, cost: impl Fn(&[usize]) -> usize) -> usize {
        let mut p: Vec<usize> = (0..n).collect();
        let mut c = vec![0usize; n];
        let mut best = cost(&p);
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    p.swap(0, i);
                } else {
                    p.swap(c[i], i);
                }
                best = best.min(cost(&p));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }

    #[test]
    fn named_treewidths() {
        for seed in 0..10 {
            assert_eq!(tw(&random_tree(11, seed).unwrap()), 1);
        }
        assert_eq!(tw(&complete(5).unwrap()), 4);
        assert_eq!(tw(&hypercube(2).unwrap()), 2);
        assert_eq!(tw(&Graph::edgeless(0)), 0);
        assert_eq!(tw(&Graph::edgeless(1)), 0);
        assert_eq!(tw(&cycle(7).unwrap()), 2);
    }

    #[test]
    fn named_pathwidths() {
        assert_eq!(pw(&path(9)), 1);
        assert_eq!(pw(&complete_binary_tree(4).unwrap()), 2);
        assert_eq!(pw(&complete_binary_tree(3).unwrap()), 1);
        assert_eq!(pw(&complete(4).unwrap()), 3);
        assert_eq!(pw(&Graph::edgeless(0)), 0);
    }

    #[test]
    fn dp_matches_permutation_brute_force() {
        for seed in 0..25 {
            let g = random_graph(7, 0.15 + 0.03 * seed as f64, seed).unwrap();
            let t = brute_min(7, |p| elimination_width(&g, p).unwrap());
            let v = brute_min(7, |p| vertex_separation(&g, p).unwrap());
            assert_eq!(tw(&g), t, "seed {seed}");
            assert_eq!(pw(&g), v, "seed {seed}");
        }
    }

    #[test]
    fn rejects_bad_orders() {
        let g = path(3);
        assert!(elimination_width(&g, &[0, 1]).is_err());
        assert!(vertex_separation(&g, &[0, 0, 1]).is_err());
    }
}
