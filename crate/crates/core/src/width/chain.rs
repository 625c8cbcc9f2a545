use serde::Serialize;

use super::{bandwidth, cycle_rank, pathwidth, treewidth, Ranking};
use crate::closed_forms::RankBound;
use crate::error::{domain, Result};
use crate::graph::{components, Graph, VertexSet};
use crate::limits::{check_cap, Caps};
use crate::separators::separator_number;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundVerdict {
    pub holds: bool,
    /// Bound value rounded for display; verdicts never read it.
    pub display: f64,
    pub bound: RankBound,
    /// Set when the separator number is 0 (edgeless graph), where the
    /// logarithmic bound is undefined and coefficient 1 is used instead.
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainChecks {
    pub s_le_tw: bool,
    pub tw_le_pw: bool,
    pub pw_le_r: bool,
    pub r_le_refined_bound: bool,
    pub strict_minus_one_le_tw: bool,
    pub r_le_classic_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeparatorWitness {
    pub q: VertexSet,
    pub x: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub s: SeparatorWitness,
    pub s_strict: SeparatorWitness,
    pub tw_elimination_order: Vec<usize>,
    pub pw_layout: Vec<usize>,
    pub bw_layout: Vec<usize>,
    pub r_ranking: Ranking,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bounds {
    pub thm9: BoundVerdict,
    pub thm2: BoundVerdict,
}

/// Every width parameter of one graph, with the verdicts of both bound chains.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WidthReport {
    pub n: usize,
    pub s: usize,
    pub s_strict: usize,
    pub tw: usize,
    pub pw: usize,
    pub bw: usize,
    pub r: u32,
    /// `s <= tw <= pw <= r <= s (1 + log(n/s))`.
    pub thm9_ok: bool,
    /// `s~ - 1 <= tw` and `r <= 1 + s~ log n`.
    pub thm2_ok: bool,
    pub bounds: Bounds,
    pub checks: ChainChecks,
    pub connected: bool,
    /// The separator-number witness subgraph is disconnected.
    pub separator_witness_disconnected: bool,
    pub witnesses: Witnesses,
}

/// Computes `s`, `s~`, `tw`, `pw`, `bw`, `r` exactly and evaluates both chains.
/// Violations are reported in the verdicts, never raised.
pub fn verify_chain(g: &Graph, caps: &Caps) -> Result<WidthReport> {
    let n = g.n();
    if n < 2 {
        return Err(domain(format!("the width chain needs n >= 2, got n = {n}")));
    }
    check_cap("width chain", n, caps.chain())?;

    let s = separator_number(g, false, caps)?;
    let s_strict = separator_number(g, true, caps)?;
    let (tw, tw_order) = treewidth(g, caps)?;
    let (pw, pw_layout) = pathwidth(g, caps)?;
    let (bw, bw_layout) = bandwidth(g, caps)?;
    let (r, ranking) = cycle_rank(g, caps)?;

    let coefficient = s.value.max(1) as u64;
    let refined = RankBound::Refined {
        k: coefficient,
        n: n as u64,
    };
    let classic = RankBound::Classic {
        s: s_strict.value as u64,
        n: n as u64,
    };

    let checks = ChainChecks {
        s_le_tw: s.value <= tw,
        tw_le_pw: tw <= pw,
        pw_le_r: pw <= r as usize,
        r_le_refined_bound: refined.holds(r as u64),
        strict_minus_one_le_tw: s_strict.value <= tw + 1,
        r_le_classic_bound: classic.holds(r as u64),
    };
    let thm9_ok = checks.s_le_tw && checks.tw_le_pw && checks.pw_le_r && checks.r_le_refined_bound;
    let thm2_ok = checks.strict_minus_one_le_tw && checks.r_le_classic_bound;

    Ok(WidthReport {
        n,
        s: s.value,
        s_strict: s_strict.value,
        tw,
        pw,
        bw,
        r,
        thm9_ok,
        thm2_ok,
        bounds: Bounds {
            thm9: BoundVerdict {
                holds: checks.r_le_refined_bound,
                display: refined.approx(),
                bound: refined,
                degenerate: s.value == 0,
            },
            thm2: BoundVerdict {
                holds: checks.r_le_classic_bound,
                display: classic.approx(),
                bound: classic,
                degenerate: false,
            },
        },
        checks,
        connected: components(g).len() == 1,
        separator_witness_disconnected: s.witness_disconnected,
        witnesses: Witnesses {
            s: SeparatorWitness {
                q: s.witness_q,
                x: s.witness_x,
            },
            s_strict: SeparatorWitness {
                q: s_strict.witness_q,
                x: s_strict.witness_x,
            },
            tw_elimination_order: tw_order,
            pw_layout,
            bw_layout,
            r_ranking: ranking,
        },
    })
}
