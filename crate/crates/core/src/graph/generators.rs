//! Deterministic generators for the graph families used throughout the crate.
//!
//! Randomized generators draw from `ChaCha8Rng::seed_from_u64(seed)` (the
//! `rand_chacha` 0.3 stream), so a fixed seed reproduces a graph bit for bit.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{domain, Result, WidthError};
use crate::limits::GENERATOR_MAX;

fn check_order(what: &'static str, n: usize) -> Result<()> {
    if n > GENERATOR_MAX {
        Err(WidthError::SizeLimitExceeded {
            what,
            n,
            cap: GENERATOR_MAX,
        })
    } else {
        Ok(())
    }
}

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator produced an invalid edge")
}

pub fn edgeless(n: usize) -> Graph {
    Graph::edgeless(n)
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain(format!("cycle needs at least 3 vertices, got {n}")));
    }
    check_order("cycle", n)?;
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n))))
}

/// The `k`-th power of the path on `n` vertices: `u ~ v` iff `1 <= |u - v| <= k`.
pub fn path_power(n: usize, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(domain("path power radius must be at least 1"));
    }
    check_order("path power", n)?;
    Ok(build(
        n,
        (0..n).flat_map(move |u| {
            (u + 1..n.min(u.saturating_add(k).saturating_add(1))).map(move |v| (u, v))
        }),
    ))
}

/// The `d`-dimensional hypercube; vertex ids are the bit patterns.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d > 16 {
        return Err(WidthError::SizeLimitExceeded {
            what: "hypercube",
            n: usize::MAX,
            cap: GENERATOR_MAX,
        });
    }
    let n = 1usize << d;
    Ok(build(
        n,
        (0..n).flat_map(move |u| {
            (0..d)
                .map(move |b| (u, u ^ (1 << b)))
                .filter(|&(u, v)| u < v)
        }),
    ))
}

/// `K_{1,leaves}`: center 0 joined to `1..=leaves`.
pub fn star(leaves: usize) -> Result<Graph> {
    check_order("star", leaves + 1)?;
    Ok(build(leaves + 1, (1..=leaves).map(|v| (0, v))))
}

pub fn complete(n: usize) -> Result<Graph> {
    // quadratic edge count; keep well below the generator cap
    check_order("complete graph", n.saturating_mul(n) / 64)?;
    Ok(build(
        n,
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))),
    ))
}

/// Complete binary tree with `2^depth - 1` vertices in heap order.
pub fn complete_binary_tree(depth: usize) -> Result<Graph> {
    if depth < 1 {
        return Err(domain("binary tree depth must be at least 1"));
    }
    if depth > 16 {
        return Err(WidthError::SizeLimitExceeded {
            what: "complete binary tree",
            n: usize::MAX,
            cap: GENERATOR_MAX,
        });
    }
    let n = (1usize << depth) - 1;
    Ok(build(n, (1..n).map(|v| ((v - 1) / 2, v))))
}

/// Erdős–Rényi `G(n, p)`; pairs are visited in lexicographic order, one draw each.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(domain(format!("edge probability {p} outside [0, 1]")));
    }
    check_order("random graph", n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

/// Uniform labeled tree via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    check_order("random tree", n)?;
    if n < 2 {
        return Ok(Graph::edgeless(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let Reverse(leaf) = leaves.pop().expect("Prüfer decoding ran out of leaves");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Ok(build(n, edges))
}

/// A random `width`-tree: a `(width+1)`-clique grown by attaching each new
/// vertex to a uniformly chosen existing `width`-clique. Chordal, with largest
/// clique of order `min(n, width + 1)`.
pub fn random_chordal(n: usize, width: usize, seed: u64) -> Result<Graph> {
    if width < 1 {
        return Err(domain("chordal width must be at least 1"));
    }
    check_order("random chordal graph", n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = n.min(width + 1);
    let mut edges: Vec<(usize, usize)> = (0..base)
        .flat_map(|u| (u + 1..base).map(move |v| (u, v)))
        .collect();
    if n > base {
        let mut cliques: Vec<Vec<usize>> = (0..base)
            .map(|skip| (0..base).filter(|&v| v != skip).collect())
            .collect();
        for v in base..n {
            let host = cliques[rng.gen_range(0..cliques.len())].clone();
            edges.extend(host.iter().map(|&u| (u, v)));
            for i in 0..host.len() {
                let mut next = host.clone();
                next[i] = v;
                next.sort_unstable();
                cliques.push(next);
            }
        }
    }
    Ok(build(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{components, is_chordal};

    #[test]
    fn path_shapes() {
        assert_eq!(path(0).n(), 0);
        assert_eq!(path(0).edge_count(), 0);
        assert_eq!(path(2).edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(
            path(5).edges().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4)]
        );
    }

    #[test]
    fn path_power_shapes() {
        assert_eq!(path_power(5, 1).unwrap(), path(5));
        assert_eq!(path_power(4, 3).unwrap(), complete(4).unwrap());
        // enumerate pairs with 1 <= |u - v| <= 2
        let expected: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .filter(|&(u, v)| v - u <= 2)
            .collect();
        assert_eq!(
            expected,
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]
        );
        assert_eq!(
            path_power(5, 2).unwrap().edges().collect::<Vec<_>>(),
            expected
        );
        assert!(matches!(path_power(5, 0), Err(WidthError::Domain(_))));
    }

    #[test]
    fn path_power_saturates_to_clique() {
        for n in 0usize..9 {
            for k in n.saturating_sub(1).max(1)..n + 3 {
                assert_eq!(
                    path_power(n, k).unwrap(),
                    complete(n).unwrap(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn hypercube_shapes() {
        assert_eq!(hypercube(0).unwrap().n(), 1);
        // Q_2 is the 4-cycle 0-1-3-2-0
        let c4 = Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap();
        assert_eq!(hypercube(2).unwrap(), c4);
        let q3 = hypercube(3).unwrap();
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.edge_count(), 3 * 4);
        assert!((0..8).all(|v| q3.degree(v) == 3));
        assert!(hypercube(17).is_err());
    }

    #[test]
    fn named_families() {
        let s = star(3).unwrap();
        assert_eq!(s.neighbors(0), &[1, 2, 3]);
        assert_eq!(s.edge_count(), 3);
        assert_eq!(
            complete(3).unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 2)]
        );
        let t = complete_binary_tree(3).unwrap();
        assert_eq!(t.n(), 7);
        assert_eq!(t.edge_count(), 6);
        assert_eq!(components(&t).len(), 1);
        assert!(complete_binary_tree(0).is_err());
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(random_graph(5, 0.0, 9).unwrap().edge_count(), 0);
        assert_eq!(random_graph(5, 1.0, 9).unwrap(), complete(5).unwrap());
        assert!(random_graph(5, 1.5, 9).is_err());
        assert_eq!(
            random_graph(9, 0.4, 11).unwrap(),
            random_graph(9, 0.4, 11).unwrap()
        );
    }

    #[test]
    fn random_tree_is_tree() {
        for seed in 0..30 {
            for n in [0, 1, 2, 3, 7, 12] {
                let t = random_tree(n, seed).unwrap();
                assert_eq!(t.n(), n);
                assert_eq!(t.edge_count(), n.saturating_sub(1));
                assert!(components(&t).len() <= 1);
                assert!(t.is_well_formed());
            }
        }
    }

    #[test]
    fn random_chordal_is_chordal() {
        for seed in 0..20 {
            let g = random_chordal(8, 2, seed).unwrap();
            assert!(is_chordal(&g).is_chordal());
            let g = random_chordal(10, 3, seed).unwrap();
            assert!(is_chordal(&g).is_chordal());
            assert!(g.is_well_formed());
            // a width-tree on n vertices has C(w+1,2) + (n-w-1)*w edges
            assert_eq!(g.edge_count(), 6 + 6 * 3);
        }
    }
}
