//! Balanced vertex separators.
//!
//! A set `X` is *balanced* for a graph on `n` vertices when every component
//! of `G - X` has at most `ceil((n - |X|) / 2)` vertices, and *strictly
//! balanced* when every component has at most `(n - |X|) / 2`. The balance
//! condition is the only criterion; no separate separator test is applied.
//!
//! Exact searches enumerate candidate sets by increasing size, and within a
//! size by increasing bitset value, so witnesses are deterministic.

use serde::Serialize;

use crate::error::{domain, Result, WidthError};
use crate::graph::{
    components_within, is_chordal, max_component_within, maximal_cliques_from_peo, Chordality,
    Graph, VertexSet,
};
use crate::limits::{check_cap, Caps};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeparatorCertificate {
    pub x: VertexSet,
    /// Component orders of `G - X`, largest first.
    pub component_sizes: Vec<usize>,
    pub balanced: bool,
    pub strictly_balanced: bool,
    /// `ceil((n - |X|) / 2)`.
    pub threshold: usize,
    /// `(n - |X|) / 2`, exact for display since it is a half-integer.
    pub strict_threshold: f64,
}

fn balanced(max_component: usize, remaining: usize, strict: bool) -> bool {
    if strict {
        2 * max_component <= remaining
    } else {
        max_component <= remaining.div_ceil(2)
    }
}

pub(crate) fn certify(
    masks: &[VertexSet],
    within: VertexSet,
    x: VertexSet,
) -> SeparatorCertificate {
    let rest = within.difference(x);
    let mut component_sizes: Vec<usize> = components_within(masks, rest)
        .iter()
        .map(|c| c.len())
        .collect();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let largest = component_sizes.first().copied().unwrap_or(0);
    let remaining = rest.len();
    SeparatorCertificate {
        x,
        balanced: balanced(largest, remaining, false),
        strictly_balanced: balanced(largest, remaining, true),
        component_sizes,
        threshold: remaining.div_ceil(2),
        strict_threshold: remaining as f64 / 2.0,
    }
}

fn is_balanced_within(masks: &[VertexSet], within: VertexSet, x: VertexSet, strict: bool) -> bool {
    let rest = within.difference(x);
    balanced(max_component_within(masks, rest), rest.len(), strict)
}

fn vertex_set(g: &Graph, x: &[usize]) -> Result<VertexSet> {
    if let Some(&bad) = x.iter().find(|&&v| v >= g.n()) {
        return Err(domain(format!(
            "vertex {bad} out of range for n = {}",
            g.n()
        )));
    }
    Ok(x.iter().copied().collect())
}

/// Components of `G - X` and both balance verdicts.
pub fn check_separator(g: &Graph, x: &[usize]) -> Result<SeparatorCertificate> {
    let masks = g.masks()?;
    let x = vertex_set(g, x)?;
    Ok(certify(&masks, VertexSet::full(g.n()), x))
}

/// Subsets of `within` with exactly `size` elements, in increasing bitset order.
pub(crate) struct SubsetsOfSize {
    members: Vec<usize>,
    combo: Option<u128>,
}

impl SubsetsOfSize {
    pub(crate) fn new(within: VertexSet, size: usize) -> Self {
        let members = within.to_vec();
        let combo = (size <= members.len()).then(|| (1u128 << size) - 1);
        SubsetsOfSize { members, combo }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let c = self.combo?;
        let out: VertexSet = (0..self.members.len())
            .filter(|&i| c >> i & 1 == 1)
            .map(|i| self.members[i])
            .collect();
        // Gosper's hack: next larger integer with the same popcount
        self.combo = if c == 0 {
            None
        } else {
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            let next = (((ripple ^ c) >> 2) / low) | ripple;
            (next < 1u128 << self.members.len()).then_some(next)
        };
        Some(out)
    }
}

/// Smallest balanced set inside `within` of size at most `limit`.
pub(crate) fn min_balanced_within(
    masks: &[VertexSet],
    within: VertexSet,
    strict: bool,
    limit: usize,
) -> Option<VertexSet> {
    (0..=limit.min(within.len())).find_map(|size| {
        SubsetsOfSize::new(within, size).find(|&x| is_balanced_within(masks, within, x, strict))
    })
}

/// Minimum (strictly) balanced separator: its size and the first minimizer.
pub fn min_balanced_separator(g: &Graph, strict: bool, caps: &Caps) -> Result<(usize, VertexSet)> {
    check_cap("minimum balanced separator", g.n(), caps.min_separator)?;
    let masks = g.masks()?;
    let x = min_balanced_within(&masks, VertexSet::full(g.n()), strict, g.n())
        .expect("the full vertex set is always balanced");
    Ok((x.len(), x))
}

pub(crate) fn pad_within(
    masks: &[VertexSet],
    within: VertexSet,
    x: VertexSet,
) -> Result<VertexSet> {
    if !is_balanced_within(masks, within, x, false) {
        return Err(WidthError::InvalidSeparator(format!(
            "{x:?} is not balanced"
        )));
    }
    let rest = within.difference(x);
    if rest.is_empty() {
        return Err(domain(
            "cannot pad a separator that already covers every vertex",
        ));
    }
    let largest = components_within(masks, rest)
        .into_iter()
        .fold(VertexSet::EMPTY, |best, c| {
            if c.len() > best.len() {
                c
            } else {
                best
            }
        });
    let padded = x.with(largest.min().expect("nonempty component"));
    if !is_balanced_within(masks, within, padded, false) {
        return Err(WidthError::AuditViolation(format!(
            "padding {x:?} to {padded:?} lost balance"
        )));
    }
    Ok(padded)
}

/// Adds the smallest vertex of a largest component of `G - X`; the result is
/// re-checked for balance.
pub fn pad_separator(g: &Graph, x: &[usize]) -> Result<VertexSet> {
    let masks = g.masks()?;
    let x = vertex_set(g, x)?;
    pad_within(&masks, VertexSet::full(g.n()), x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorNumber {
    pub value: usize,
    /// Induced subgraph attaining the maximum, and its minimum separator.
    pub witness_q: VertexSet,
    pub witness_x: VertexSet,
    /// Whether the witness subgraph is disconnected, where the balance-only
    /// convention is doing real work.
    pub witness_disconnected: bool,
}

/// Balanced separator number: the maximum over all induced subgraphs of the
/// minimum (strictly) balanced separator size.
///
/// Subsets are visited by decreasing order, then increasing bitset value. A
/// subset is skipped once its trivial upper bound (`|Q| - 1`, or `|Q|` when
/// strict) cannot beat the current maximum.
pub fn separator_number(g: &Graph, strict: bool, caps: &Caps) -> Result<SeparatorNumber> {
    let n = g.n();
    check_cap("separator number", n, caps.separator_number)?;
    let masks = g.masks()?;
    let mut best = SeparatorNumber {
        value: 0,
        witness_q: VertexSet::EMPTY,
        witness_x: VertexSet::EMPTY,
        witness_disconnected: false,
    };
    let mut found = false;
    for size in (0..=n).rev() {
        let trivial = if strict { size } else { size.saturating_sub(1) };
        if found && trivial <= best.value {
            break;
        }
        for q in SubsetsOfSize::new(VertexSet::full(n), size) {
            if found {
                // only an induced subgraph needing more than `best` matters
                if min_balanced_within(&masks, q, strict, best.value).is_some() {
                    continue;
                }
            }
            let x = min_balanced_within(&masks, q, strict, size).expect("Q itself is balanced");
            if !found || x.len() > best.value {
                best = SeparatorNumber {
                    value: x.len(),
                    witness_q: q,
                    witness_x: x,
                    witness_disconnected: components_within(&masks, q).len() > 1,
                };
                found = true;
            }
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CliqueSeparator {
    pub clique: VertexSet,
    pub certificate: SeparatorCertificate,
    /// Order of the largest clique.
    pub clique_number: usize,
}

/// A clique of a chordal graph that is a balanced separator, of order at most
/// one less than the clique number.
///
/// Candidates are the cliques of order at most `clique_number - 1` (subsets
/// of the maximal cliques, including the empty one), ranked by the largest
/// remaining component, then by order, then by bitset value. Both guarantees
/// are re-checked before returning.
pub fn chordal_clique_separator(g: &Graph, caps: &Caps) -> Result<CliqueSeparator> {
    let n = g.n();
    if n == 0 {
        return Err(domain("clique separator needs at least one vertex"));
    }
    check_cap("clique separator", n, crate::limits::BITSET_MAX)?;
    let Chordality::Chordal { peo } = is_chordal(g) else {
        return Err(WidthError::NotChordal);
    };
    let masks = g.masks()?;
    let all = VertexSet::full(n);
    let maximal: Vec<VertexSet> = maximal_cliques_from_peo(g, &peo)
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect();
    let clique_number = maximal.iter().map(|c| c.len()).max().unwrap_or(0);

    let budget: usize = maximal.iter().map(|c| 1usize << c.len().min(62)).sum();
    if budget > caps.clique_subsets {
        return Err(WidthError::SizeLimitExceeded {
            what: "clique subset enumeration",
            n: budget,
            cap: caps.clique_subsets,
        });
    }
    let order_limit = clique_number.saturating_sub(1);
    let mut cliques: Vec<VertexSet> = maximal
        .iter()
        .flat_map(|&c| (0..=c.len().min(order_limit)).flat_map(move |s| SubsetsOfSize::new(c, s)))
        .collect();
    cliques.sort_unstable();
    cliques.dedup();
    let clique = cliques
        .into_iter()
        .map(|c| (max_component_within(&masks, all.difference(c)), c.len(), c))
        .min()
        .map(|(_, _, c)| c)
        .expect("the empty clique is always a candidate");

    let certificate = certify(&masks, all, clique);
    if !certificate.balanced {
        return Err(WidthError::AuditViolation(format!(
            "clique {clique:?} is not a balanced separator"
        )));
    }
    if clique.len() + 1 > clique_number {
        return Err(WidthError::AuditViolation(format!(
            "clique {clique:?} has order {} but the clique number is {clique_number}",
            clique.len()
        )));
    }
    Ok(CliqueSeparator {
        clique,
        certificate,
        clique_number,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, random_chordal, random_graph, random_tree, star};

    fn caps() -> Caps {
        Caps::default()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn subset_enumeration_order() {
        let within = set(&[1, 3, 4, 6]);
        let pairs: Vec<Vec<usize>> = SubsetsOfSize::new(within, 2)
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(
            pairs,
            vec![
                vec![1, 3],
                vec![1, 4],
                vec![3, 4],
                vec![1, 6],
                vec![3, 6],
                vec![4, 6]
            ]
        );
        assert_eq!(SubsetsOfSize::new(within, 0).count(), 1);
        assert_eq!(SubsetsOfSize::new(within, 4).count(), 1);
        assert_eq!(SubsetsOfSize::new(within, 5).count(), 0);
        for n in 0..=10 {
            for k in 0..=n {
                let all: Vec<u64> = SubsetsOfSize::new(VertexSet::full(n), k)
                    .map(|s| s.0)
                    .collect();
                assert_eq!(
                    all.len() as u64,
                    crate::closed_forms::binomial(n as u64, k as u64)
                );
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn certificates() {
        let c = check_separator(&path(5), &[2]).unwrap();
        assert_eq!(c.component_sizes, vec![2, 2]);
        assert!(c.balanced && c.strictly_balanced);

        let c = check_separator(&path(3), &[0, 2]).unwrap();
        assert_eq!(c.component_sizes, vec![1]);
        assert!(c.balanced && !c.strictly_balanced);
        assert_eq!(c.threshold, 1);

        let c = check_separator(&complete(5).unwrap(), &[]).unwrap();
        assert_eq!(c.component_sizes, vec![5]);
        assert!(!c.balanced);
        assert!(check_separator(&path(3), &[3]).is_err());

        let json = serde_json::to_value(check_separator(&path(5), &[2]).unwrap()).unwrap();
        assert_eq!(json["x"], serde_json::json!([2]));
        assert_eq!(json["component_sizes"], serde_json::json!([2, 2]));
    }

    #[test]
    fn minimum_separators() {
        assert_eq!(
            min_balanced_separator(&complete(5).unwrap(), false, &caps())
                .unwrap()
                .0,
            4
        );
        let (size, x) = min_balanced_separator(&path(4), false, &caps()).unwrap();
        assert_eq!((size, x.to_vec()), (1, vec![1]));
        assert_eq!(
            min_balanced_separator(&Graph::edgeless(1), false, &caps())
                .unwrap()
                .0,
            0
        );
        assert_eq!(
            min_balanced_separator(&Graph::edgeless(1), true, &caps())
                .unwrap()
                .0,
            1
        );
        assert_eq!(
            min_balanced_separator(&Graph::edgeless(0), true, &caps())
                .unwrap()
                .0,
            0
        );
    }

    #[test]
    fn padding() {
        assert_eq!(pad_separator(&path(5), &[2]).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(
            pad_separator(&Graph::edgeless(3), &[]).unwrap().to_vec(),
            vec![0]
        );
        assert!(matches!(
            pad_separator(&complete(5).unwrap(), &[]),
            Err(WidthError::InvalidSeparator(_))
        ));
        assert!(matches!(
            pad_separator(&path(2), &[0, 1]),
            Err(WidthError::Domain(_))
        ));
    }

    #[test]
    fn padding_chain_stays_balanced() {
        for seed in 0..40 {
            let g = random_graph(9, 0.35, seed).unwrap();
            let (_, mut x) = min_balanced_separator(&g, false, &caps()).unwrap();
            while x.len() < g.n() - 1 {
                x = pad_separator(&g, &x.to_vec()).unwrap();
                assert!(check_separator(&g, &x.to_vec()).unwrap().balanced);
            }
        }
    }

    #[test]
    fn separator_numbers() {
        assert_eq!(
            separator_number(&complete(5).unwrap(), false, &caps())
                .unwrap()
                .value,
            4
        );
        assert_eq!(separator_number(&path(8), false, &caps()).unwrap().value, 1);
        assert_eq!(separator_number(&path(8), true, &caps()).unwrap().value, 2);
        assert_eq!(
            separator_number(&Graph::edgeless(0), false, &caps())
                .unwrap()
                .value,
            0
        );
        assert_eq!(
            separator_number(&Graph::edgeless(4), false, &caps())
                .unwrap()
                .value,
            0
        );
        assert!(matches!(
            separator_number(&path(13), false, &caps()),
            Err(WidthError::SizeLimitExceeded { .. })
        ));
    }

    /// Exhaustive reference without pruning.
    fn separator_number_reference(g: &Graph, strict: bool) -> usize {
        let masks = g.masks().unwrap();
        (0..1u64 << g.n())
            .map(|q| {
                min_balanced_within(&masks, VertexSet(q), strict, g.n())
                    .unwrap()
                    .len()
            })
            .max()
            .unwrap()
    }

    #[test]
    fn pruned_search_matches_reference() {
        for seed in 0..30 {
            let g = random_graph(7, 0.2 + 0.02 * seed as f64, seed).unwrap();
            for strict in [false, true] {
                let fast = separator_number(&g, strict, &caps()).unwrap();
                assert_eq!(
                    fast.value,
                    separator_number_reference(&g, strict),
                    "seed {seed}"
                );
                let again =
                    min_balanced_within(&g.masks().unwrap(), fast.witness_q, strict, 8).unwrap();
                assert_eq!(again.len(), fast.value);
            }
        }
    }

    #[test]
    fn strict_is_non_monotone_on_p3() {
        let g = path(3);
        let masks = g.masks().unwrap();
        let all = VertexSet::full(3);
        let sizes_with_strict: Vec<usize> = (0..=3)
            .filter(|&s| {
                SubsetsOfSize::new(all, s).any(|x| is_balanced_within(&masks, all, x, true))
            })
            .collect();
        assert!(sizes_with_strict.contains(&1));
        assert!(!sizes_with_strict.contains(&2));
    }

    #[test]
    fn jordan_trees() {
        for seed in 0..20 {
            let t = random_tree(10, seed).unwrap();
            assert_eq!(separator_number(&t, false, &caps()).unwrap().value, 1);
        }
    }

    #[test]
    fn clique_separator_examples() {
        let k5 = complete(5).unwrap();
        let c = chordal_clique_separator(&k5, &caps()).unwrap();
        assert_eq!(c.clique.to_vec(), vec![0, 1, 2, 3]);
        assert!(c.certificate.balanced);

        let c = chordal_clique_separator(&star(4).unwrap(), &caps()).unwrap();
        assert_eq!(c.clique.to_vec(), vec![0]);
        assert_eq!(c.certificate.component_sizes, vec![1, 1, 1, 1]);

        let c = chordal_clique_separator(&path(5), &caps()).unwrap();
        assert_eq!(c.clique.to_vec(), vec![2]);
        assert_eq!(c.certificate.component_sizes, vec![2, 2]);

        let c = chordal_clique_separator(&Graph::edgeless(1), &caps()).unwrap();
        assert!(c.clique.is_empty());

        assert!(matches!(
            chordal_clique_separator(&crate::graph::cycle(5).unwrap(), &caps()),
            Err(WidthError::NotChordal)
        ));
        assert!(chordal_clique_separator(&Graph::edgeless(0), &caps()).is_err());
    }

    /// Independent check: does any clique of order below the clique number split `g` in balance?
    fn small_balanced_clique_exists(g: &Graph, omega: usize) -> bool {
        let n = g.n();
        (0u64..1 << n).any(|bits| {
            let c: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
            c.len() < omega
                && c.iter()
                    .all(|&u| c.iter().all(|&v| u == v || g.has_edge(u, v)))
                && check_separator(g, &c).unwrap().balanced
        })
    }

    #[test]
    fn clique_separators_on_random_chordal() {
        for seed in 0..60 {
            let g = random_chordal(6 + (seed as usize % 7), 1 + (seed as usize % 3), seed).unwrap();
            let omega = g.n().min(2 + seed as usize % 3);
            match chordal_clique_separator(&g, &caps()) {
                Ok(c) => {
                    assert!(c.certificate.balanced);
                    assert!(c.clique.len() < c.clique_number);
                    assert_eq!(c.clique_number, omega);
                }
                Err(WidthError::AuditViolation(_)) => {
                    assert!(!small_balanced_clique_exists(&g, omega), "seed {seed}")
                }
                Err(e) => panic!("seed {seed}: {e}"),
            }
        }
    }

    fn stacked_k4() -> Graph {
        // K4 on {0,1,2,3} with one extra vertex on each of three of its triangles
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([
            (4, 0),
            (4, 2),
            (4, 3),
            (5, 0),
            (5, 1),
            (5, 3),
            (6, 1),
            (6, 2),
            (6, 3),
        ]);
        Graph::from_edges(7, edges).unwrap()
    }

    #[test]
    fn stacked_k4_has_no_small_balanced_clique() {
        let g = stacked_k4();
        assert!(!small_balanced_clique_exists(&g, 4));
        assert!(matches!(
            chordal_clique_separator(&g, &caps()),
            Err(WidthError::AuditViolation(_))
        ));
        assert!(check_separator(&g, &[0, 1, 2, 3]).unwrap().balanced);
        assert_eq!(min_balanced_separator(&g, false, &caps()).unwrap().0, 4);
        assert_eq!(separator_number(&g, false, &caps()).unwrap().value, 4);
    }
}
