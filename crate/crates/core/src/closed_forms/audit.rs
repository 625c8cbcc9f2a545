//! Audit of the printed closed forms against brute-force oracles.
//!
//! The oracle side is always the recurrence itself (via [`recurrence`] and
//! [`adjoint`]) or an exact solver; printed formulas are evaluated literally.
//! The audit never asserts, it only reports.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{
    adjoint, bound_thm6, claim61_value, claim62_value, claim63_lower, harper_bandwidth,
    interpolant_argmin, interpolant_cmp, is_mersenne_multiple, recurrence, recurrence_explicit,
    HarperVariant,
};
use crate::error::Result;
use crate::graph::hypercube;
use crate::limits::Caps;
use crate::width::bandwidth;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ClaimId {
    #[serde(rename = "C6.1")]
    BackwardDifference,
    #[serde(rename = "C6.2")]
    AdjointClosedForm,
    #[serde(rename = "C6.3")]
    AdjointLowerBound,
    #[serde(rename = "T6-equality")]
    RefinedBoundEquality,
    #[serde(rename = "Eq1")]
    ExplicitRecurrence,
    #[serde(rename = "T12-harper")]
    HarperBandwidth,
}

impl ClaimId {
    pub const ALL: [ClaimId; 6] = [
        ClaimId::BackwardDifference,
        ClaimId::AdjointClosedForm,
        ClaimId::AdjointLowerBound,
        ClaimId::RefinedBoundEquality,
        ClaimId::ExplicitRecurrence,
        ClaimId::HarperBandwidth,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClaimId::BackwardDifference => "C6.1",
            ClaimId::AdjointClosedForm => "C6.2",
            ClaimId::AdjointLowerBound => "C6.3",
            ClaimId::RefinedBoundEquality => "T6-equality",
            ClaimId::ExplicitRecurrence => "Eq1",
            ClaimId::HarperBandwidth => "T12-harper",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum AuditValue {
    Int(u64),
    Bool(bool),
    Text(String),
}

impl AuditValue {
    fn relation(o: Ordering) -> Self {
        AuditValue::Text(
            match o {
                Ordering::Less => "lt",
                Ordering::Equal => "eq",
                Ordering::Greater => "gt",
            }
            .into(),
        )
    }
}

impl fmt::Display for AuditValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuditValue::Int(v) => write!(f, "{v}"),
            AuditValue::Bool(b) => write!(f, "{b}"),
            AuditValue::Text(s) => f.write_str(s),
        }
    }
}

pub const OUT_OF_DOMAIN: &str = "out of claimed domain";

/// Named inputs in the order they were recorded.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Inputs(pub Vec<(&'static str, AuditValue)>);

impl Inputs {
    fn of(pairs: &[(&'static str, u64)]) -> Self {
        Inputs(
            pairs
                .iter()
                .map(|&(k, v)| (k, AuditValue::Int(v)))
                .collect(),
        )
    }

    fn and(mut self, key: &'static str, value: &str) -> Self {
        self.0.push((key, AuditValue::Text(value.into())));
        self
    }

    pub fn get(&self, key: &str) -> Option<&AuditValue> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

impl fmt::Display for Inputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for Inputs {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditFinding {
    pub claim: ClaimId,
    pub inputs: Inputs,
    pub printed: AuditValue,
    pub oracle: AuditValue,
    pub agree: bool,
}

impl AuditFinding {
    fn new(claim: ClaimId, inputs: Inputs, printed: AuditValue, oracle: AuditValue) -> Self {
        let agree = printed == oracle;
        AuditFinding {
            claim,
            inputs,
            printed,
            oracle,
            agree,
        }
    }

    pub fn in_domain(&self) -> bool {
        self.printed != AuditValue::Text(OUT_OF_DOMAIN.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditBounds {
    pub k_max: u64,
    pub r_max: u64,
    pub n_max: u64,
    /// Largest hypercube dimension compared against exact bandwidth.
    pub harper_d_max: u64,
}

impl Default for AuditBounds {
    fn default() -> Self {
        AuditBounds {
            k_max: 4,
            r_max: 20,
            n_max: 64,
            harper_d_max: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ClaimTally {
    pub agree: usize,
    pub disagree: usize,
    pub out_of_domain: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditSummary {
    pub claims: Vec<(ClaimId, ClaimTally)>,
}

impl AuditSummary {
    pub fn from_findings(findings: &[AuditFinding]) -> Self {
        let claims = ClaimId::ALL
            .iter()
            .map(|&id| {
                let mut t = ClaimTally::default();
                for f in findings.iter().filter(|f| f.claim == id) {
                    if !f.in_domain() {
                        t.out_of_domain += 1;
                    } else if f.agree {
                        t.agree += 1;
                    } else {
                        t.disagree += 1;
                    }
                }
                (id, t)
            })
            .collect();
        AuditSummary { claims }
    }

    pub fn tally(&self, id: ClaimId) -> ClaimTally {
        self.claims
            .iter()
            .find(|(c, _)| *c == id)
            .map(|(_, t)| *t)
            .unwrap_or_default()
    }
}

fn out_of_domain(claim: ClaimId, inputs: Inputs, oracle: AuditValue) -> AuditFinding {
    AuditFinding::new(
        claim,
        inputs,
        AuditValue::Text(OUT_OF_DOMAIN.into()),
        oracle,
    )
}

/// Runs every audit family over the given ranges, in a fixed order:
/// Eq1, C6.1, C6.2, C6.3, T6-equality, T12-harper.
pub fn audit_claims(bounds: &AuditBounds, caps: &Caps) -> Result<Vec<AuditFinding>> {
    let AuditBounds {
        k_max,
        r_max,
        n_max,
        harper_d_max,
    } = *bounds;
    let mut out = Vec::new();

    for k in 1..=k_max {
        for n in 0..=n_max {
            out.push(AuditFinding::new(
                ClaimId::ExplicitRecurrence,
                Inputs::of(&[("k", k), ("n", n)]),
                AuditValue::Int(recurrence_explicit(k, n)?),
                AuditValue::Int(recurrence(k, n)?),
            ));
        }
    }

    for k in 1..=k_max {
        let adj: Vec<u64> = (0..=r_max).map(|r| adjoint(k, r)).collect::<Result<_>>()?;
        for j in 1..=r_max {
            let inputs = Inputs::of(&[("k", k), ("j", j)]);
            let oracle = AuditValue::Int(adj[j as usize] - adj[j as usize - 1]);
            out.push(if k < 2 {
                out_of_domain(ClaimId::BackwardDifference, inputs, oracle)
            } else {
                AuditFinding::new(
                    ClaimId::BackwardDifference,
                    inputs,
                    AuditValue::Int(claim61_value(k, j)?),
                    oracle,
                )
            });
        }
    }

    for k in 1..=k_max {
        for r in 1..=r_max {
            let inputs = Inputs::of(&[("k", k), ("r", r)]);
            let oracle = AuditValue::Int(adjoint(k, r)?);
            out.push(if k < 2 {
                out_of_domain(ClaimId::AdjointClosedForm, inputs, oracle)
            } else {
                AuditFinding::new(
                    ClaimId::AdjointClosedForm,
                    inputs,
                    AuditValue::Int(claim62_value(k, r)?),
                    oracle,
                )
            });
        }
    }

    for k in 1..=k_max {
        if k >= 2 {
            // the interpolant's integer minimum on [0, k-1]; r cancels from the comparison
            out.push(AuditFinding::new(
                ClaimId::AdjointLowerBound,
                Inputs::of(&[("k", k)]).and("check", "argmin"),
                AuditValue::Int(0),
                AuditValue::Int(interpolant_argmin(k)),
            ));
            out.push(AuditFinding::new(
                ClaimId::AdjointLowerBound,
                Inputs::of(&[("k", k)]).and("check", "boundary"),
                AuditValue::relation(Ordering::Greater),
                AuditValue::relation(interpolant_cmp(k, k - 1, 0)),
            ));
        }
        for r in 1..=r_max {
            let inputs = Inputs::of(&[("k", k), ("r", r)]).and("check", "relation");
            if k < 2 {
                let n = adjoint(k, r)?;
                // 1 * (2^r - 1) compared directly
                let lower = (1u64 << r.min(63)) - 1;
                out.push(out_of_domain(
                    ClaimId::AdjointLowerBound,
                    inputs,
                    AuditValue::relation(n.cmp(&lower)),
                ));
                continue;
            }
            let predicted = if r % k == 0 {
                Ordering::Equal
            } else {
                Ordering::Greater
            };
            let actual = claim63_lower(k, r)?.compare(adjoint(k, r)?);
            out.push(AuditFinding::new(
                ClaimId::AdjointLowerBound,
                inputs,
                AuditValue::relation(predicted),
                AuditValue::relation(actual),
            ));
        }
    }

    for k in 1..=k_max {
        for n in 1..=n_max {
            let r = recurrence(k, n)?;
            out.push(AuditFinding::new(
                ClaimId::RefinedBoundEquality,
                Inputs::of(&[("k", k), ("n", n)]),
                AuditValue::Bool(is_mersenne_multiple(k, n)),
                AuditValue::Bool(bound_thm6(k, n)?.is_tight(r)),
            ));
        }
    }

    for d in 1..=harper_d_max {
        let (bw, _) = bandwidth(&hypercube(d as usize)?, caps)?;
        for (name, variant) in [
            ("printed", HarperVariant::Printed),
            ("standard", HarperVariant::Standard),
        ] {
            out.push(AuditFinding::new(
                ClaimId::HarperBandwidth,
                Inputs::of(&[("d", d)]).and("variant", name),
                AuditValue::Int(harper_bandwidth(d, variant)?),
                AuditValue::Int(bw as u64),
            ));
        }
    }

    Ok(out)
}
