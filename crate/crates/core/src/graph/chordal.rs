//! Chordality testing via lexicographic breadth-first search.

use std::collections::VecDeque;

use super::Graph;

/// Outcome of a chordality test, with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering: each vertex's later neighbors form a clique.
    Chordal { peo: Vec<usize> },
    /// An induced cycle of length at least four, as a vertex sequence.
    Hole { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Lexicographic BFS by partition refinement. Returns the visit order.
fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut classes: Vec<Vec<usize>> = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect()]
    };
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while let Some(first) = classes.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        visited[v] = true;
        order.push(v);
        let mut is_nbr = vec![false; n];
        for &w in g.neighbors(v) {
            if !visited[w] {
                is_nbr[w] = true;
            }
        }
        let mut refined = Vec::with_capacity(classes.len() * 2);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) = class.into_iter().partition(|&w| is_nbr[w]);
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        classes = refined;
    }
    order
}

/// Returns the first violation `(v, parent, w)` of the perfect elimination
/// property, where `parent` and `w` are later neighbors of `v` that are not adjacent.
fn peo_violation(g: &Graph, peo: &[usize]) -> Option<(usize, usize, usize)> {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&w) = later
            .iter()
            .find(|&&w| w != parent && !g.has_edge(parent, w))
        {
            return Some((v, parent, w));
        }
    }
    None
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    match peo_violation(g, &peo) {
        None => Chordality::Chordal { peo },
        Some((v, u, w)) => {
            let cycle = hole_through(g, v, u, w)
                .or_else(|| find_hole(g))
                .expect("non-chordal graph without an induced cycle");
            Chordality::Hole { cycle }
        }
    }
}

/// Induced cycle `v, u, ..., w` where the inner path avoids the closed
/// neighborhood of `v` (other than `u` and `w`).
fn hole_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &x in g.neighbors(v) {
        blocked[x] = true;
    }
    blocked[u] = false;
    blocked[w] = false;
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([u]);
    prev[u] = u;
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for &y in g.neighbors(x) {
            // u and w are both in N(v); the path may only touch them at its ends
            if !blocked[y] && prev[y] == usize::MAX && !(x == u && y == w) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[w] == usize::MAX {
        return None;
    }
    let mut inner = vec![w];
    let mut x = w;
    while x != u {
        x = prev[x];
        inner.push(x);
    }
    inner.reverse();
    let mut cycle = vec![v];
    cycle.extend(inner);
    Some(cycle)
}

fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !g.has_edge(u, w) {
                    if let Some(c) = hole_through(g, v, u, w) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// Maximal cliques of a chordal graph read off a perfect elimination ordering,
/// each sorted ascending, in order of first appearance.
pub fn maximal_cliques_from_peo(g: &Graph, peo: &[usize]) -> Vec<Vec<usize>> {
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = peo
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    candidates.dedup();
    let contains =
        |big: &Vec<usize>, small: &Vec<usize>| small.iter().all(|x| big.binary_search(x).is_ok());
    candidates
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            !candidates.iter().enumerate().any(|(j, d)| {
                j != *i && d.len() >= c.len() && (d.len() > c.len() || j < *i) && contains(d, c)
            })
        })
        .map(|(_, c)| c.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete, cycle, hypercube, path, random_chordal, random_graph, random_tree,
    };

    fn assert_is_hole(g: &Graph, c: &[usize]) {
        assert!(c.len() >= 4, "hole too short: {c:?}");
        let k = c.len();
        for i in 0..k {
            for j in i + 1..k {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                assert_eq!(
                    g.has_edge(c[i], c[j]),
                    consecutive,
                    "{c:?} not an induced cycle"
                );
            }
        }
    }

    #[test]
    fn cliques_and_trees_are_chordal() {
        assert!(is_chordal(&complete(4).unwrap()).is_chordal());
        assert!(is_chordal(&Graph::edgeless(0)).is_chordal());
        for seed in 0..10 {
            assert!(is_chordal(&random_tree(15, seed).unwrap()).is_chordal());
        }
        for seed in 0..10 {
            assert!(is_chordal(&random_chordal(10, 3, seed).unwrap()).is_chordal());
        }
    }

    #[test]
    fn cycles_have_holes() {
        let c4 = hypercube(2).unwrap();
        match is_chordal(&c4) {
            Chordality::Hole { cycle } => {
                assert_eq!(cycle.len(), 4);
                assert_is_hole(&c4, &cycle);
            }
            other => panic!("C4 reported chordal: {other:?}"),
        }
        for n in 4..12 {
            let g = cycle(n).unwrap();
            let Chordality::Hole { cycle } = is_chordal(&g) else {
                panic!("C{n} chordal")
            };
            assert_eq!(cycle.len(), n);
            assert_is_hole(&g, &cycle);
        }
    }

    #[test]
    fn agrees_with_exhaustive_hole_search() {
        for seed in 0..200 {
            let g = random_graph(8, 0.45, seed).unwrap();
            let exhaustive = find_hole(&g);
            match is_chordal(&g) {
                Chordality::Chordal { peo } => {
                    assert!(exhaustive.is_none(), "seed {seed}");
                    assert!(peo_violation(&g, &peo).is_none());
                }
                Chordality::Hole { cycle } => {
                    assert!(exhaustive.is_some());
                    assert_is_hole(&g, &cycle);
                }
            }
        }
    }

    #[test]
    fn maximal_cliques_of_path_and_clique() {
        let g = path(4);
        let Chordality::Chordal { peo } = is_chordal(&g) else {
            unreachable!()
        };
        let mut cl = maximal_cliques_from_peo(&g, &peo);
        cl.sort();
        assert_eq!(cl, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);

        let k = complete(5).unwrap();
        let Chordality::Chordal { peo } = is_chordal(&k) else {
            unreachable!()
        };
        assert_eq!(
            maximal_cliques_from_peo(&k, &peo),
            vec![vec![0, 1, 2, 3, 4]]
        );
    }
}
