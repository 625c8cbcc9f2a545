//! Simple undirected graphs, bitset vertex sets, and connected components.

mod chordal;
mod generators;
mod io;

pub use chordal::{is_chordal, maximal_cliques_from_peo, Chordality};
pub use generators::{
    complete, complete_binary_tree, cycle, edgeless, hypercube, path, path_power, random_chordal,
    random_graph, random_tree, star,
};
pub use io::{parse_edge_list, serialize_edge_list};

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{domain, Result, WidthError};
use crate::limits::BITSET_MAX;

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted and symmetric, with no self-loops.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range ids are
    /// rejected; duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(domain(format!(
                    "edge {{{u}, {v}}} out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(domain(format!("self-loop at vertex {u}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(Vec::is_empty)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].retain(|&w| w != v);
        g.adj[v].retain(|&w| w != u);
        g
    }

    pub fn is_clique(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|list| list.len() + 1 == n)
    }

    /// Neighborhoods as bitsets. Fails for graphs wider than one machine word.
    pub fn masks(&self) -> Result<Vec<VertexSet>> {
        if self.n() > BITSET_MAX {
            return Err(WidthError::SizeLimitExceeded {
                what: "bitset representation",
                n: self.n(),
                cap: BITSET_MAX,
            });
        }
        Ok(self
            .adj
            .iter()
            .map(|list| list.iter().copied().collect())
            .collect())
    }

    /// Checks symmetry, range, and absence of self-loops.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(u, list)| {
            list.iter()
                .all(|&v| v < n && v != u && self.adj[v].binary_search(&u).is_ok())
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A set of vertex ids below 64, stored as one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= BITSET_MAX);
        if n == BITSET_MAX {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < BITSET_MAX && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> VertexSetIter {
        VertexSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexSetIter;
    fn into_iter(self) -> VertexSetIter {
        self.iter()
    }
}

pub struct VertexSetIter(u64);

impl Iterator for VertexSetIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Connected components, ordered by smallest member id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub parts: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }
}

pub fn components(g: &Graph) -> ComponentPartition {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut part = Vec::new();
        while let Some(u) = queue.pop_front() {
            part.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        part.sort_unstable();
        parts.push(part);
    }
    ComponentPartition { parts }
}

/// The vertices of `within` reachable from `start` inside `within`.
pub(crate) fn reach(masks: &[VertexSet], within: VertexSet, start: usize) -> VertexSet {
    let mut comp = VertexSet::singleton(start);
    let mut frontier = comp;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for u in frontier {
            next = next.union(masks[u]);
        }
        frontier = next.intersection(within).difference(comp);
        comp = comp.union(frontier);
    }
    comp
}

/// Components of the subgraph induced by `within`, ordered by smallest member.
pub(crate) fn components_within(masks: &[VertexSet], within: VertexSet) -> Vec<VertexSet> {
    let mut rest = within;
    let mut parts = Vec::new();
    while let Some(v) = rest.min() {
        let comp = reach(masks, within, v);
        rest = rest.difference(comp);
        parts.push(comp);
    }
    parts
}

/// Size of the largest component of the subgraph induced by `within`.
pub(crate) fn max_component_within(masks: &[VertexSet], within: VertexSet) -> usize {
    let mut rest = within;
    let mut best = 0;
    while let Some(v) = rest.min() {
        if rest.len() <= best {
            break;
        }
        let comp = reach(masks, within, v);
        rest = rest.difference(comp);
        best = best.max(comp.len());
    }
    best
}

/// An induced subgraph together with the original id of each new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induced {
    pub graph: Graph,
    /// `original[i]` is the id in the parent graph of vertex `i`.
    pub original: Vec<usize>,
}

/// The subgraph induced by `selection`, relabeled to `0..|selection|` in
/// increasing order of original id.
pub fn induced(g: &Graph, selection: &[usize]) -> Result<Induced> {
    let n = g.n();
    let mut original: Vec<usize> = selection.to_vec();
    original.sort_unstable();
    original.dedup();
    if let Some(&bad) = original.iter().find(|&&v| v >= n) {
        return Err(domain(format!("vertex {bad} out of range for n = {n}")));
    }
    let mut new_id = vec![usize::MAX; n];
    for (i, &v) in original.iter().enumerate() {
        new_id[v] = i;
    }
    let mut adj = vec![Vec::new(); original.len()];
    for (i, &v) in original.iter().enumerate() {
        adj[i] = g
            .neighbors(v)
            .iter()
            .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
            .collect();
    }
    Ok(Induced {
        graph: Graph { adj },
        original,
    })
}

/// The graph with every vertex of `removed` deleted (ids remapped as in [`induced`]).
pub fn remove_vertices(g: &Graph, removed: &[usize]) -> Result<Induced> {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    induced(g, &keep)
}
