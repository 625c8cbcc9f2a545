use std::io::Write;

use serde::Serialize;
use serde_json::json;

use super::{
    read_input, CliError, Command, FamilyArg, Format, RunConfig, TableKind, EXIT_OK,
    EXIT_VERIFY_FAILED,
};
use crate::closed_forms::{
    adjoint, audit_claims, hypercube_report, recurrence, AuditBounds, AuditFinding, AuditSummary,
};
use crate::corpus;
use crate::graph::{self, parse_edge_list, serialize_edge_list, Graph};
use crate::limits::Caps;
use crate::separators::{
    check_separator, chordal_clique_separator, min_balanced_separator, separator_number,
};
use crate::width::{
    bandwidth, cycle_rank, is_valid_ranking, pathwidth, separator_ranking, treewidth, verify_chain,
};

type Out<'a> = &'a mut Vec<u8>;

pub(super) fn dispatch(config: &RunConfig, out: Out) -> Result<i32, CliError> {
    let caps = &config.caps;
    match &config.command {
        Command::Gen {
            family,
            n,
            k,
            d,
            p,
            width,
        } => gen(config, out, *family, *n, *k, *d, *p, *width),
        Command::Compute { input, params } => compute(config, out, &load(input)?, params),
        Command::VerifyChain { input } => verify(config, out, &load(input)?),
        Command::Table { what, k, n, r } => {
            table(config, out, *what, k, n.as_deref(), r.as_deref())
        }
        Command::Audit {
            k_max,
            r_max,
            n_max,
            harper_d_max,
        } => {
            let bounds = AuditBounds {
                k_max: *k_max,
                r_max: *r_max,
                n_max: *n_max,
                harper_d_max: *harper_d_max,
            };
            audit(config, out, &bounds)
        }
        Command::Corpus { count, n_max } => run_corpus(config, out, *count, *n_max),
        Command::HypercubeReport { d } => {
            let report = hypercube_report(*d, caps, config.deep)?;
            emit_json(out, config, &report)?;
            Ok(EXIT_OK)
        }
        Command::Rank { input, k } => rank(config, out, &load(input)?, *k),
        Command::Separator {
            input,
            strict,
            chordal_clique,
            x,
        } => separator(
            config,
            out,
            &load(input)?,
            *strict,
            *chordal_clique,
            x.as_deref(),
        ),
    }
}

fn load(input: &str) -> Result<Graph, CliError> {
    Ok(parse_edge_list(&read_input(input)?)?)
}

fn emit_json<T: Serialize>(out: Out, config: &RunConfig, result: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, &json!({ "config": config, "result": result }))?;
    out.push(b'\n');
    Ok(())
}

/// A one-line config echo for CSV and text outputs.
fn config_line(config: &RunConfig) -> Result<String, CliError> {
    Ok(format!("# config: {}\n", serde_json::to_string(config)?))
}

fn csv_rows(
    out: Out,
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn warn_separator_cost(caps: &Caps, n: usize) {
    if caps.separator_number > Caps::default().separator_number
        && n > Caps::default().separator_number
    {
        eprintln!(
            "note: separator number on n = {n} examines up to 3^n = {:.3e} (subgraph, separator) pairs",
            3f64.powi(n as i32)
        );
    }
}

#[allow(clippy::too_many_arguments)]
fn gen(
    config: &RunConfig,
    out: Out,
    family: FamilyArg,
    n: Option<usize>,
    k: Option<usize>,
    d: Option<usize>,
    p: Option<f64>,
    width: Option<usize>,
) -> Result<i32, CliError> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this family")))
    };
    let seed = config.seed;
    let g = match family {
        FamilyArg::Path => graph::path(need(n, "n")?),
        FamilyArg::PathPower => graph::path_power(need(n, "n")?, need(k, "k")?)?,
        FamilyArg::Cycle => graph::cycle(need(n, "n")?)?,
        FamilyArg::Hypercube => graph::hypercube(need(d, "d")?)?,
        FamilyArg::Star => graph::star(need(n, "n")?)?,
        FamilyArg::Complete => graph::complete(need(n, "n")?)?,
        FamilyArg::BinaryTree => graph::complete_binary_tree(need(d, "d")?)?,
        FamilyArg::Edgeless => graph::edgeless(need(n, "n")?),
        FamilyArg::Random => {
            let p = p.ok_or_else(|| CliError::Usage("--p is required for random graphs".into()))?;
            graph::random_graph(need(n, "n")?, p, seed)?
        }
        FamilyArg::Tree => graph::random_tree(need(n, "n")?, seed)?,
        FamilyArg::Chordal => graph::random_chordal(need(n, "n")?, need(width, "width")?, seed)?,
    };
    out.extend_from_slice(config_line(config)?.as_bytes());
    out.extend_from_slice(serialize_edge_list(&g).as_bytes());
    Ok(EXIT_OK)
}

fn compute(config: &RunConfig, out: Out, g: &Graph, params: &[String]) -> Result<i32, CliError> {
    let caps = &config.caps;
    let mut values = serde_json::Map::new();
    let mut witnesses = serde_json::Map::new();
    for param in params {
        let (value, witness) = match param.as_str() {
            "r" => {
                let (r, ranking) = cycle_rank(g, caps)?;
                (json!(r), json!(ranking.levels))
            }
            "tw" => {
                let (w, order) = treewidth(g, caps)?;
                (json!(w), json!(order))
            }
            "pw" => {
                let (w, order) = pathwidth(g, caps)?;
                (json!(w), json!(order))
            }
            "bw" => {
                let (w, order) = bandwidth(g, caps)?;
                (json!(w), json!(order))
            }
            "s" | "s_strict" => {
                warn_separator_cost(caps, g.n());
                let s = separator_number(g, param == "s_strict", caps)?;
                (
                    json!(s.value),
                    json!({ "q": s.witness_q, "x": s.witness_x }),
                )
            }
            other => return Err(CliError::Usage(format!("unknown parameter {other:?}"))),
        };
        values.insert(param.clone(), value);
        witnesses.insert(param.clone(), witness);
    }
    match config.format.unwrap_or(Format::Json) {
        Format::Json => emit_json(
            out,
            config,
            &json!({ "n": g.n(), "m": g.edge_count(), "values": values, "witnesses": witnesses }),
        )?,
        Format::Csv => {
            out.extend_from_slice(config_line(config)?.as_bytes());
            csv_rows(
                out,
                &["param", "value", "witness"],
                values
                    .iter()
                    .map(|(k, v)| vec![k.clone(), v.to_string(), witnesses[k].to_string()]),
            )?;
        }
        Format::Text => {
            for (k, v) in &values {
                writeln!(out, "{k} = {v}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify(config: &RunConfig, out: Out, g: &Graph) -> Result<i32, CliError> {
    warn_separator_cost(&config.caps, g.n());
    let report = verify_chain(g, &config.caps)?;
    match config.format.unwrap_or(Format::Json) {
        Format::Json => emit_json(out, config, &report)?,
        Format::Csv => {
            out.extend_from_slice(config_line(config)?.as_bytes());
            let row = vec![
                report.n.to_string(),
                report.s.to_string(),
                report.s_strict.to_string(),
                report.tw.to_string(),
                report.pw.to_string(),
                report.bw.to_string(),
                report.r.to_string(),
                report.thm9_ok.to_string(),
                report.thm2_ok.to_string(),
                format!("{:.6}", report.bounds.thm9.display),
                format!("{:.6}", report.bounds.thm2.display),
            ];
            csv_rows(
                out,
                &[
                    "n",
                    "s",
                    "s_strict",
                    "tw",
                    "pw",
                    "bw",
                    "r",
                    "thm9_ok",
                    "thm2_ok",
                    "thm9_bound",
                    "thm2_bound",
                ],
                [row],
            )?;
        }
        Format::Text => {
            writeln!(
                out,
                "n={} s={} s_strict={} tw={} pw={} bw={} r={}",
                report.n, report.s, report.s_strict, report.tw, report.pw, report.bw, report.r
            )?;
            writeln!(
                out,
                "s <= tw <= pw <= r <= {:.4}: {}",
                report.bounds.thm9.display, report.thm9_ok
            )?;
            writeln!(
                out,
                "s~ - 1 <= tw, r <= {:.4}: {}",
                report.bounds.thm2.display, report.thm2_ok
            )?;
        }
    }
    Ok(if report.thm9_ok && report.thm2_ok {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn parse_range(spec: &str, flag: &str) -> Result<(u64, u64), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "--{flag} expects an integer or lo:hi, got {spec:?}"
        ))
    };
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    let (lo, hi) = match spec.split_once(':') {
        Some((a, b)) => (parse(a)?, parse(b)?),
        None => {
            let v = parse(spec)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

const TABLE_MAX_ROWS: u64 = 1 << 20;

fn table(
    config: &RunConfig,
    out: Out,
    what: TableKind,
    k: &str,
    n: Option<&str>,
    r: Option<&str>,
) -> Result<i32, CliError> {
    let (k_lo, k_hi) = parse_range(k, "k")?;
    let (label, range) = match what {
        TableKind::R => (
            "n",
            n.ok_or_else(|| CliError::Usage("table R needs --n".into()))?,
        ),
        TableKind::N => (
            "r",
            r.ok_or_else(|| CliError::Usage("table N needs --r".into()))?,
        ),
    };
    let (lo, hi) = parse_range(range, label)?;
    if (k_hi - k_lo + 1).saturating_mul(hi - lo + 1) > TABLE_MAX_ROWS {
        return Err(CliError::Usage(format!(
            "table larger than {TABLE_MAX_ROWS} entries"
        )));
    }
    let mut rows = Vec::new();
    for k in k_lo..=k_hi {
        let mut values = Vec::new();
        for x in lo..=hi {
            values.push(match what {
                TableKind::R => recurrence(k, x)?,
                TableKind::N => adjoint(k, x)?,
            });
        }
        rows.push((k, values));
    }
    let name = match what {
        TableKind::R => "R",
        TableKind::N => "N",
    };
    match config.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            out.extend_from_slice(config_line(config)?.as_bytes());
            csv_rows(
                out,
                &["k", label, name],
                rows.iter().flat_map(|(k, values)| {
                    values
                        .iter()
                        .zip(lo..)
                        .map(move |(v, x)| vec![k.to_string(), x.to_string(), v.to_string()])
                }),
            )?;
        }
        Format::Text => {
            for (k, values) in &rows {
                let joined: Vec<String> = values.iter().map(u64::to_string).collect();
                writeln!(out, "k={k}: {}", joined.join(","))?;
            }
        }
        Format::Json => {
            let tables: Vec<_> = rows
                .iter()
                .map(|(k, v)| json!({ "k": k, "from": lo, "values": v }))
                .collect();
            emit_json(out, config, &json!({ "table": name, "rows": tables }))?;
        }
    }
    Ok(EXIT_OK)
}

fn audit(config: &RunConfig, out: Out, bounds: &AuditBounds) -> Result<i32, CliError> {
    let findings = audit_claims(bounds, &config.caps)?;
    let summary = AuditSummary::from_findings(&findings);
    match config.format.unwrap_or(Format::Csv) {
        Format::Json => emit_json(
            out,
            config,
            &json!({ "findings": findings, "summary": summary }),
        )?,
        Format::Csv => {
            out.extend_from_slice(config_line(config)?.as_bytes());
            let row = |f: &AuditFinding| {
                vec![
                    f.claim.to_string(),
                    f.inputs.to_string(),
                    f.printed.to_string(),
                    f.oracle.to_string(),
                    f.agree.to_string(),
                ]
            };
            csv_rows(
                out,
                &["claim", "inputs", "printed", "oracle", "agree"],
                findings.iter().map(row),
            )?;
            out.push(b'\n');
            summary_csv(out, &summary)?;
        }
        Format::Text => summary_csv(out, &summary)?,
    }
    Ok(EXIT_OK)
}

fn summary_csv(out: Out, summary: &AuditSummary) -> Result<(), CliError> {
    csv_rows(
        out,
        &["claim", "agree", "disagree", "out_of_domain"],
        summary.claims.iter().map(|(id, t)| {
            vec![
                id.to_string(),
                t.agree.to_string(),
                t.disagree.to_string(),
                t.out_of_domain.to_string(),
            ]
        }),
    )
}

fn run_corpus(config: &RunConfig, out: Out, count: usize, n_max: usize) -> Result<i32, CliError> {
    if n_max > config.caps.chain() {
        return Err(crate::WidthError::SizeLimitExceeded {
            what: "corpus",
            n: n_max,
            cap: config.caps.chain(),
        }
        .into());
    }
    let entries = corpus::mixed(count, n_max, config.seed)?;
    eprintln!("checking {} corpus graphs", entries.len());
    let outcomes = corpus::check_all(&entries, &config.caps)?;
    let failing: Vec<usize> = outcomes
        .iter()
        .filter(|o| !o.violations.is_empty())
        .map(|o| o.index)
        .collect();
    let violations: usize = outcomes.iter().map(|o| o.violations.len()).sum();
    match config.format.unwrap_or(Format::Json) {
        Format::Json => emit_json(
            out,
            config,
            &json!({
                "graphs": outcomes,
                "summary": { "count": outcomes.len(), "violations": violations, "failing": failing },
            }),
        )?,
        Format::Csv | Format::Text => {
            out.extend_from_slice(config_line(config)?.as_bytes());
            csv_rows(
                out,
                &[
                    "index",
                    "family",
                    "n",
                    "m",
                    "seed",
                    "s",
                    "s_strict",
                    "tw",
                    "pw",
                    "bw",
                    "r",
                    "thm9_ok",
                    "thm2_ok",
                    "violations",
                ],
                outcomes.iter().map(|o| {
                    let family = serde_json::to_value(o.family).unwrap()["family"]
                        .as_str()
                        .unwrap_or("")
                        .to_string();
                    vec![
                        o.index.to_string(),
                        family,
                        o.n.to_string(),
                        o.m.to_string(),
                        o.seed.to_string(),
                        o.s.to_string(),
                        o.s_strict.to_string(),
                        o.tw.to_string(),
                        o.pw.to_string(),
                        o.bw.to_string(),
                        o.r.to_string(),
                        o.thm9_ok.to_string(),
                        o.thm2_ok.to_string(),
                        o.violations.join(" | "),
                    ]
                }),
            )?;
        }
    }
    Ok(if violations == 0 {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn rank(config: &RunConfig, out: Out, g: &Graph, k: Option<usize>) -> Result<i32, CliError> {
    let caps = &config.caps;
    let k = match k {
        Some(k) => k,
        None => {
            warn_separator_cost(caps, g.n());
            separator_number(g, false, caps)?.value.max(1)
        }
    };
    let ranking = separator_ranking(g, k, caps)?;
    let valid = is_valid_ranking(g, &ranking)?;
    let bound = recurrence(k as u64, g.n() as u64)?;
    emit_json(
        out,
        config,
        &json!({
            "k": k,
            "height": ranking.height(),
            "recurrence_bound": bound,
            "valid": valid.is_valid(),
            "levels": ranking.levels,
        }),
    )?;
    Ok(if valid.is_valid() && ranking.height() as u64 <= bound {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn separator(
    config: &RunConfig,
    out: Out,
    g: &Graph,
    strict: bool,
    chordal_clique: bool,
    x: Option<&[usize]>,
) -> Result<i32, CliError> {
    let caps = &config.caps;
    if chordal_clique {
        let c = chordal_clique_separator(g, caps)?;
        emit_json(out, config, &c)?;
        return Ok(EXIT_OK);
    }
    let x = match x {
        Some(x) => x.to_vec(),
        None => min_balanced_separator(g, strict, caps)?.1.to_vec(),
    };
    let certificate = check_separator(g, &x)?;
    emit_json(out, config, &certificate)?;
    Ok(EXIT_OK)
}
