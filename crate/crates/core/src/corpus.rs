//! Seeded graph corpora and the per-graph property checks run over them.
//!
//! Corpus parameters are drawn up front from one `ChaCha8Rng` stream, so the
//! corpus is fixed by `(count, sizes, seed)` and checks can run in parallel
//! without affecting the output order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{recurrence, RankBound};
use crate::error::{Result, WidthError};
use crate::graph::{is_chordal, random_chordal, random_graph, random_tree, remove_vertices, Graph};
use crate::limits::Caps;
use crate::separators::{
    check_separator, chordal_clique_separator, min_balanced_separator, pad_separator,
};
use crate::width::{
    cycle_rank, elimination_width, is_valid_ranking, layout_stretch, separator_ranking,
    verify_chain, vertex_separation,
};

const DENSITIES: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Random { p: f64 },
    Tree,
    Chordal { width: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusEntry {
    pub index: usize,
    #[serde(flatten)]
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    #[serde(skip)]
    pub graph: Graph,
}

fn entry(index: usize, family: Family, n: usize, seed: u64) -> Result<CorpusEntry> {
    let graph = match family {
        Family::Random { p } => random_graph(n, p, seed)?,
        Family::Tree => random_tree(n, seed)?,
        Family::Chordal { width } => random_chordal(n, width, seed)?,
    };
    Ok(CorpusEntry {
        index,
        family,
        n,
        seed,
        graph,
    })
}

pub fn random_graphs(
    count: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(n_min..=n_max);
            let p = *DENSITIES.choose(&mut rng).unwrap();
            entry(i, Family::Random { p }, n, rng.gen())
        })
        .collect()
}

pub fn random_trees(
    count: usize,
    n_min: usize,
    n_max: usize,
    seed: u64,
) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(n_min..=n_max);
            entry(i, Family::Tree, n, rng.gen())
        })
        .collect()
}

pub fn random_chordals(
    count: usize,
    n_min: usize,
    n_max: usize,
    width_max: usize,
    seed: u64,
) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(n_min..=n_max);
            let width = rng.gen_range(1..=width_max);
            entry(i, Family::Chordal { width }, n, rng.gen())
        })
        .collect()
}

/// Interleaved random graphs, trees, and chordal graphs (width at most 3)
/// with `2 <= n <= n_max`.
pub fn mixed(count: usize, n_max: usize, seed: u64) -> Result<Vec<CorpusEntry>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_max = n_max.max(2);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=n_max);
            let family = match i % 3 {
                0 => Family::Random {
                    p: *DENSITIES.choose(&mut rng).unwrap(),
                },
                1 => Family::Tree,
                _ => Family::Chordal {
                    width: rng.gen_range(1..=3),
                },
            };
            entry(i, family, n, rng.gen())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphOutcome {
    pub index: usize,
    #[serde(flatten)]
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub s: usize,
    pub s_strict: usize,
    pub tw: usize,
    pub pw: usize,
    pub bw: usize,
    pub r: u32,
    pub thm9_ok: bool,
    pub thm2_ok: bool,
    pub violations: Vec<String>,
}

/// Runs every property check on one graph; violations are collected, not raised.
pub fn check_entry(e: &CorpusEntry, caps: &Caps) -> Result<GraphOutcome> {
    let g = &e.graph;
    let n = g.n();
    let report = verify_chain(g, caps)?;
    let mut violations = Vec::new();
    let mut expect = |ok: bool, what: String| {
        if !ok {
            violations.push(what);
        }
    };

    expect(
        report.thm9_ok,
        format!("refined chain failed: {:?}", report.checks),
    );
    expect(
        report.thm2_ok,
        format!("classic chain failed: {:?}", report.checks),
    );
    expect(
        report.s_strict == report.s || report.s_strict == report.s + 1,
        format!(
            "strict number {} not within one of {}",
            report.s_strict, report.s
        ),
    );
    expect(
        is_valid_ranking(g, &report.witnesses.r_ranking)?.is_valid()
            && report.witnesses.r_ranking.height() == report.r,
        "cycle-rank witness invalid".into(),
    );
    expect(
        elimination_width(g, &report.witnesses.tw_elimination_order)? == report.tw,
        "treewidth witness does not replay".into(),
    );
    expect(
        vertex_separation(g, &report.witnesses.pw_layout)? == report.pw,
        "pathwidth witness does not replay".into(),
    );
    expect(
        layout_stretch(g, &report.witnesses.bw_layout)? == report.bw,
        "bandwidth witness does not replay".into(),
    );

    // padding a balanced separator keeps it balanced
    let (_, mut x) = min_balanced_separator(g, false, caps)?;
    while x.len() + 1 < n {
        x = pad_separator(g, &x.to_vec())?;
        expect(
            check_separator(g, &x.to_vec())?.balanced,
            format!("padded set {x:?} unbalanced"),
        );
    }

    let k = report.s.max(1);
    let ranking = separator_ranking(g, k, caps)?;
    expect(
        is_valid_ranking(g, &ranking)?.is_valid(),
        "separator ranking invalid".into(),
    );
    expect(
        ranking.height() as u64 <= recurrence(k as u64, n as u64)?,
        format!(
            "separator ranking height {} above R_{k}({n})",
            ranking.height()
        ),
    );

    let tw_bound = RankBound::Refined {
        k: report.tw.max(1) as u64,
        n: n as u64,
    };
    expect(
        tw_bound.holds(report.r as u64),
        "cycle rank above the treewidth bound".into(),
    );
    let bw_k = report.bw.max(1) as u64;
    expect(
        report.r as u64 <= recurrence(bw_k, n as u64)?,
        format!("cycle rank {} above R_{bw_k}({n})", report.r),
    );

    // r(G) <= |X| + r(G - X) for a seeded subset X
    let mut rng = ChaCha8Rng::seed_from_u64(e.seed ^ 0x5eed);
    let removed: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
    let rest = remove_vertices(g, &removed)?;
    let (r_rest, _) = cycle_rank(&rest.graph, caps)?;
    expect(
        report.r as usize <= removed.len() + r_rest as usize,
        format!(
            "deleting {removed:?} dropped cycle rank by more than {}",
            removed.len()
        ),
    );

    let chordal = is_chordal(g).is_chordal();
    if let Family::Tree | Family::Chordal { .. } = e.family {
        expect(chordal, "generated graph is not chordal".into());
    }
    if chordal && n > 0 {
        match chordal_clique_separator(g, caps) {
            Ok(_) => {}
            Err(WidthError::AuditViolation(msg)) => {
                expect(false, format!("clique separator: {msg}"))
            }
            Err(e) => return Err(e),
        }
    }
    if matches!(e.family, Family::Tree) {
        expect(
            report.tw == 1 && report.s == 1,
            format!("tree with tw {} and s {}", report.tw, report.s),
        );
    }
    if let Some((u, v)) = g.edges().next() {
        let (r_minus, _) = cycle_rank(&g.without_edge(u, v), caps)?;
        expect(
            r_minus <= report.r,
            format!("deleting edge {{{u}, {v}}} raised cycle rank"),
        );
    }

    Ok(GraphOutcome {
        index: e.index,
        family: e.family,
        n,
        m: g.edge_count(),
        seed: e.seed,
        s: report.s,
        s_strict: report.s_strict,
        tw: report.tw,
        pw: report.pw,
        bw: report.bw,
        r: report.r,
        thm9_ok: report.thm9_ok,
        thm2_ok: report.thm2_ok,
        violations,
    })
}

/// Checks every entry in parallel; results come back in corpus order.
pub fn check_all(entries: &[CorpusEntry], caps: &Caps) -> Result<Vec<GraphOutcome>> {
    entries.par_iter().map(|e| check_entry(e, caps)).collect()
}
