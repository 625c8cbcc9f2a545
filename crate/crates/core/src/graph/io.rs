//! Edge-list text format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v        (m lines, 0 <= u < v < n)
//! ```

use std::collections::HashSet;
use std::fmt::Write;

use super::Graph;
use crate::error::{Result, WidthError};
use crate::limits::GENERATOR_MAX;

fn malformed(line: usize, message: impl Into<String>) -> WidthError {
    WidthError::MalformedInput {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split(' ');
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(malformed(
            line_no,
            format!("expected two space-separated integers, got {line:?}"),
        ));
    };
    let parse = |s: &str| {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(malformed(line_no, format!("not a decimal integer: {s:?}")));
        }
        s.parse::<usize>()
            .map_err(|e| malformed(line_no, e.to_string()))
    };
    Ok((parse(a)?, parse(b)?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header_no, header)?;
    if n > GENERATOR_MAX {
        return Err(WidthError::SizeLimitExceeded {
            what: "edge-list input",
            n,
            cap: GENERATOR_MAX,
        });
    }

    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut seen = HashSet::new();
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| {
            malformed(
                header_no,
                format!("header promises {m} edges, found {}", edges.len()),
            )
        })?;
        let (u, v) = parse_pair(line_no, line)?;
        if v >= n || u >= n {
            return Err(malformed(
                line_no,
                format!("vertex id out of range for n = {n}"),
            ));
        }
        if u >= v {
            return Err(malformed(
                line_no,
                format!("edge must satisfy u < v, got {u} {v}"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(malformed(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if let Some((line_no, line)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(malformed(
            line_no,
            format!("unexpected trailing line {line:?}"),
        ));
    }
    Graph::from_edges(n, edges).map_err(|e| malformed(header_no, e.to_string()))
}

/// Canonical form: header, then edges in lexicographic order.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
