use std::io::Write;
use std::process::{Command, Output, Stdio};

fn widthlab(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_widthlab"))
        .args(args)
        .env_remove("WIDTHLAB_CAP_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn generated(args: &[&str]) -> String {
    let o = widthlab(args, "");
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn table_column(text: &str) -> Vec<u64> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect()
}

#[test]
fn recurrence_tables() {
    assert_eq!(
        table_column(&generated(&["table", "R", "--k", "1", "--n", "1:8"])),
        [1, 2, 2, 3, 3, 3, 3, 4]
    );
    assert_eq!(
        table_column(&generated(&["table", "N", "--k", "2", "--r", "1:6"])),
        [1, 2, 3, 5, 7, 11]
    );
    assert_eq!(
        table_column(&generated(&["table", "R", "--k", "5", "--n", "1:6"])),
        [1, 2, 3, 4, 5, 6]
    );
    let o = widthlab(&["table", "R", "--k", "3:1", "--n", "1:4"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_chain_exit_codes() {
    for family in [["path", "--n", "8"], ["star", "--n", "4"]] {
        let g = generated(&[&["gen"], &family[..]].concat());
        let o = widthlab(&["verify-chain"], &g);
        assert_eq!(o.status.code(), Some(0), "{family:?}");
        let report = json(&o);
        assert_eq!(report["result"]["thm9_ok"], true);
        assert_eq!(report["config"]["subcommand"], "verify-chain");
    }
    let single = generated(&["gen", "edgeless", "--n", "1"]);
    assert_eq!(widthlab(&["verify-chain"], &single).status.code(), Some(2));

    // s(Q_3) = 4 exceeds tw(Q_3) = 3, so the refined chain fails
    let q3 = generated(&["gen", "hypercube", "--d", "3"]);
    let o = widthlab(&["verify-chain"], &q3);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["result"]["checks"]["s_le_tw"], false);
}

#[test]
fn malformed_input_exits_3() {
    for bad in [
        "",
        "3 1\n0 5\n",
        "3 1\n1 0\n",
        "3 2\n0 1\n0 1\n",
        "3 1\n0 1\n1 2\n",
        "x y\n",
        "3 1\n0  1\n",
    ] {
        let o = widthlab(&["compute", "--params", "tw"], bad);
        assert_eq!(o.status.code(), Some(3), "{bad:?}");
        assert!(
            String::from_utf8_lossy(&o.stderr).contains("line"),
            "{bad:?}"
        );
    }
}

#[test]
fn size_caps_exit_4() {
    assert_eq!(
        widthlab(&["hypercube-report", "--d", "5"], "")
            .status
            .code(),
        Some(4)
    );
    let big = generated(&["gen", "path", "--n", "30"]);
    assert_eq!(
        widthlab(&["compute", "--params", "r"], &big).status.code(),
        Some(4)
    );
    let huge = generated(&["gen", "path", "--n", "31"]);
    assert_eq!(
        widthlab(&["--cap-n", "40", "compute", "--params", "tw"], &huge)
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        widthlab(
            &["compute", "--params", "tw", "--cap-n", "8"],
            &generated(&["gen", "path", "--n", "9"])
        )
        .status
        .code(),
        Some(4)
    );
}

#[test]
fn cap_flag_beats_environment() {
    let g = generated(&["gen", "path", "--n", "9"]);
    let run = |env: &str, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_widthlab"));
        cmd.args(extra)
            .args(["compute", "--params", "tw", "--input", "-"])
            .env("WIDTHLAB_CAP_N", env);
        let mut child = cmd
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(g.as_bytes()).unwrap();
        child.wait_with_output().unwrap().status.code()
    };
    assert_eq!(run("8", &[]), Some(4));
    assert_eq!(run("8", &["--cap-n", "9"]), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(widthlab(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(
        widthlab(&["gen", "path-power", "--n", "5"], "")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        widthlab(&["compute", "--params", "xyz"], "2 1\n0 1\n")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        widthlab(
            &["separator", "--chordal-clique"],
            &generated(&["gen", "cycle", "--n", "5"])
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn compute_named_values() {
    let o = widthlab(&["compute"], &generated(&["gen", "cycle", "--n", "6"]));
    assert_eq!(o.status.code(), Some(0));
    let values = &json(&o)["result"]["values"];
    assert_eq!(values["tw"], 2);
    assert_eq!(values["pw"], 2);
    assert_eq!(values["bw"], 2);
    assert_eq!(values["r"], 4);

    let o = widthlab(
        &["compute", "--format", "csv", "--params", "bw"],
        &generated(&["gen", "star", "--n", "5"]),
    );
    let text = stdout(&o);
    assert!(text.starts_with("# config: "));
    assert!(text.lines().any(|l| l.starts_with("bw,3,")), "{text}");
}

#[test]
fn generators_are_seeded() {
    let a = generated(&["--seed", "7", "gen", "random", "--n", "12", "--p", "0.3"]);
    let b = generated(&["gen", "random", "--n", "12", "--p", "0.3", "--seed", "7"]);
    let c = generated(&["gen", "random", "--n", "12", "--p", "0.3", "--seed", "8"]);
    let body = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with('#'))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(body(&a), body(&b));
    assert_ne!(body(&a), body(&c));
    let chordal = generated(&["gen", "chordal", "--n", "10", "--width", "2", "--seed", "5"]);
    let o = widthlab(&["separator", "--chordal-clique"], &chordal);
    assert!(matches!(o.status.code(), Some(0 | 1)));
}

#[test]
fn audit_reports_known_findings() {
    let o = widthlab(&["audit"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "C6.2,k=2;r=4,6,5,false"));
    assert!(text.lines().any(|l| l == "Eq1,260,0,0"));
    let o = widthlab(&["audit", "--format", "json"], "");
    let report = json(&o);
    let findings = report["result"]["findings"].as_array().unwrap();
    assert!(findings.iter().any(|f| f["claim"] == "C6.1"
        && f["inputs"]["k"] == 2
        && f["inputs"]["j"] == 3
        && f["printed"] == 2
        && f["oracle"] == 1));
    assert_eq!(
        stdout(&widthlab(&["audit", "--format", "json"], "")),
        stdout(&o)
    );
}

#[test]
fn corpus_is_reproducible() {
    let empty = widthlab(&["corpus", "--count", "0"], "");
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(
        json(&empty)["result"]["graphs"].as_array().unwrap().len(),
        0
    );

    let a = widthlab(
        &["corpus", "--count", "40", "--n-max", "8", "--seed", "1"],
        "",
    );
    let b = widthlab(
        &["corpus", "--count", "40", "--n-max", "8", "--seed", "1"],
        "",
    );
    assert_eq!(a.stdout, b.stdout);
    let report = json(&a);
    let violations = report["result"]["summary"]["violations"].as_u64().unwrap();
    assert_eq!(a.status.code(), Some(if violations == 0 { 0 } else { 1 }));
}

#[test]
fn rank_and_output_file() {
    let dir = std::env::temp_dir().join(format!("widthlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rank.json");
    let g = generated(&["gen", "path", "--n", "9"]);
    let o = widthlab(&["rank", "--output", path.to_str().unwrap()], &g);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(report["result"]["valid"], true);
    assert_eq!(report["result"]["height"], 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn hypercube_report_contrasts_harper_variants() {
    let o = widthlab(&["hypercube-report", "--d", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let r = &json(&o)["result"];
    assert_eq!(r["bandwidth_exact"], 4);
    assert_eq!(r["harper_standard"], 4);
    assert_eq!(r["harper_printed"], 12);
}
