use serde::Serialize;

use super::{harper_bandwidth, recurrence, HarperVariant, RankBound};
use crate::error::{domain, Result, WidthError};
use crate::graph::hypercube;
use crate::limits::Caps;
use crate::separators::separator_number;
use crate::width::{bandwidth, cycle_rank, pathwidth};

/// Rank bounds derived from one bandwidth value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandwidthBounds {
    pub source: &'static str,
    pub bandwidth: u64,
    /// `R_bw(2^d)`.
    pub recurrence_bound: u64,
    /// `bw * (1 + log(2^d / bw))`.
    pub refined_display: f64,
    /// `bw * log(2^d / bw)`.
    pub refined_without_offset_display: f64,
    /// `1 + (bw + 1) * log(2^d)`, using `s~ <= tw + 1 <= pw + 1 = bw + 1`.
    pub classic_display: f64,
    pub classic_exceeds_n: bool,
    /// Verdicts against the exact cycle rank, when known.
    pub cycle_rank_within_recurrence: Option<bool>,
    pub cycle_rank_within_refined: Option<bool>,
    pub cycle_rank_within_refined_without_offset: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypercubeReport {
    pub d: usize,
    pub n: u64,
    pub bandwidth_exact: Option<u64>,
    pub harper_printed: u64,
    pub harper_standard: u64,
    pub pathwidth_exact: Option<u64>,
    pub cycle_rank_exact: Option<u32>,
    pub strict_separator_number: Option<u64>,
    /// `1 + s~ log n` with the exact strict separator number, when known.
    pub classic_exact_display: Option<f64>,
    pub bounds: Vec<BandwidthBounds>,
}

/// Exact parameters and bound comparisons for the `d`-cube. Dimensions up to 3
/// run by default; 4 needs `deep`.
pub fn hypercube_report(d: usize, caps: &Caps, deep: bool) -> Result<HypercubeReport> {
    if d < 1 {
        return Err(domain("hypercube dimension must be at least 1"));
    }
    let max_d = if deep { 4 } else { 3 };
    if d > max_d {
        return Err(WidthError::SizeLimitExceeded {
            what: "hypercube report",
            n: 1 << d,
            cap: 1 << max_d,
        });
    }
    let g = hypercube(d)?;
    let n = g.n() as u64;
    let fits = |cap: usize| g.n() <= cap;

    let bandwidth_exact = if fits(caps.bandwidth) {
        Some(bandwidth(&g, caps)?.0 as u64)
    } else {
        None
    };
    let pathwidth_exact = if fits(caps.pathwidth) {
        Some(pathwidth(&g, caps)?.0 as u64)
    } else {
        None
    };
    let cycle_rank_exact = if fits(caps.cycle_rank) {
        Some(cycle_rank(&g, caps)?.0)
    } else {
        None
    };
    let strict_separator_number = if fits(caps.separator_number) {
        Some(separator_number(&g, true, caps)?.value as u64)
    } else {
        None
    };

    let harper_printed = harper_bandwidth(d as u64, HarperVariant::Printed)?;
    let harper_standard = harper_bandwidth(d as u64, HarperVariant::Standard)?;

    let mut sources = Vec::new();
    if let Some(bw) = bandwidth_exact {
        sources.push(("exact", bw));
    }
    sources.push(("harper-standard", harper_standard));
    sources.push(("harper-printed", harper_printed));

    let bounds = sources
        .into_iter()
        .map(|(source, bw)| -> Result<BandwidthBounds> {
            // a bandwidth above n - 1 is impossible; clamp so the recurrence stays meaningful
            let k = bw.clamp(1, n);
            let recurrence_bound = recurrence(k, n)?;
            let refined = RankBound::Refined { k, n };
            let no_offset = RankBound::RefinedWithoutOffset { k, n };
            let classic = RankBound::Classic { s: k + 1, n };
            Ok(BandwidthBounds {
                source,
                bandwidth: bw,
                recurrence_bound,
                refined_display: refined.approx(),
                refined_without_offset_display: no_offset.approx(),
                classic_display: classic.approx(),
                classic_exceeds_n: classic.compare(n) == std::cmp::Ordering::Less,
                cycle_rank_within_recurrence: cycle_rank_exact
                    .map(|r| r as u64 <= recurrence_bound),
                cycle_rank_within_refined: cycle_rank_exact.map(|r| refined.holds(r as u64)),
                cycle_rank_within_refined_without_offset: cycle_rank_exact
                    .map(|r| no_offset.holds(r as u64)),
            })
        })
        .collect::<Result<_>>()?;

    Ok(HypercubeReport {
        d,
        n,
        bandwidth_exact,
        harper_printed,
        harper_standard,
        pathwidth_exact,
        cycle_rank_exact,
        strict_separator_number,
        classic_exact_display: strict_separator_number
            .map(|s| RankBound::Classic { s, n }.approx()),
        bounds,
    })
}
