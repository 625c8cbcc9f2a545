//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failed, 2 usage or precondition
//! error, 3 malformed input, 4 size cap exceeded.

mod commands;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::WidthError;
use crate::limits::Caps;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;
pub const EXIT_SIZE_CAP: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "widthlab",
    version,
    about = "Exact graph width parameters and bound audits"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GlobalArgs {
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Vertex-count cap applied to every exact solver.
    #[arg(long, global = true, env = "WIDTHLAB_CAP_N")]
    pub cap_n: Option<usize>,
    /// Raise solver caps and allow the 4-cube.
    #[arg(long, global = true)]
    pub deep: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyArg {
    Path,
    PathPower,
    Cycle,
    Hypercube,
    Star,
    Complete,
    BinaryTree,
    Edgeless,
    Random,
    Tree,
    Chordal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum TableKind {
    /// The separator recurrence R_k(n).
    #[value(name = "R", alias = "r")]
    R,
    /// Its adjoint N_k(r).
    #[value(name = "N", alias = "n")]
    N,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Command {
    /// Write a generated graph in edge-list format.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        width: Option<usize>,
    },
    /// Compute selected parameters (r, tw, pw, bw, s, s_strict).
    Compute {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_delimiter = ',', default_value = "s,s_strict,tw,pw,bw,r")]
        params: Vec<String>,
    },
    /// Check both width chains; exit 0 iff both hold.
    VerifyChain {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Tabulate R_k(n) or N_k(r).
    Table {
        #[arg(value_enum)]
        what: TableKind,
        /// k or a range lo:hi.
        #[arg(long, default_value = "1")]
        k: String,
        /// n range for R.
        #[arg(long)]
        n: Option<String>,
        /// r range for N.
        #[arg(long)]
        r: Option<String>,
    },
    /// Compare printed closed forms against brute-force oracles.
    Audit {
        #[arg(long, default_value_t = 4)]
        k_max: u64,
        #[arg(long, default_value_t = 20)]
        r_max: u64,
        #[arg(long, default_value_t = 64)]
        n_max: u64,
        #[arg(long, default_value_t = 3)]
        harper_d_max: u64,
    },
    /// Run the chain and property checks over a seeded corpus.
    Corpus {
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Exact parameters and bounds for the d-cube.
    HypercubeReport {
        #[arg(long)]
        d: usize,
    },
    /// Emit the separator-based ranking.
    Rank {
        #[arg(long, default_value = "-")]
        input: String,
        /// Separator size; defaults to the balanced separator number.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Emit separator certificates.
    Separator {
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        chordal_clique: bool,
        /// Certify this set instead of searching.
        #[arg(long, value_delimiter = ',')]
        x: Option<Vec<usize>>,
    },
}

/// Everything that determines a run's output, echoed into reports.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
    pub seed: u64,
    pub cap_n: Option<usize>,
    pub deep: bool,
    pub caps: Caps,
}

impl RunConfig {
    fn from_cli(cli: &Cli) -> Self {
        let g = &cli.global;
        let caps = match (g.cap_n, g.deep) {
            (Some(n), _) => Caps::uniform(n),
            (None, true) => Caps::deep(),
            (None, false) => Caps::default(),
        };
        RunConfig {
            command: cli.command.clone(),
            output: g.output.clone(),
            format: g.format,
            seed: g.seed,
            cap_n: g.cap_n,
            deep: g.deep,
            caps,
        }
    }
}

#[derive(Debug)]
pub(crate) enum CliError {
    Width(WidthError),
    Usage(String),
    Io(io::Error),
}

impl From<WidthError> for CliError {
    fn from(e: WidthError) -> Self {
        CliError::Width(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Width(WidthError::MalformedInput { .. }) => EXIT_MALFORMED,
            CliError::Width(WidthError::SizeLimitExceeded { .. } | WidthError::Overflow(_)) => {
                EXIT_SIZE_CAP
            }
            CliError::Width(WidthError::AuditViolation(_)) => EXIT_VERIFY_FAILED,
            CliError::Width(_) | CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Width(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

pub(crate) fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    }
    Ok(text)
}

/// Parses `args` (including the program name), runs the command, and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let config = RunConfig::from_cli(&cli);
    let mut out: Vec<u8> = Vec::new();
    let result = commands::dispatch(&config, &mut out);
    let write_result = match &config.output {
        Some(path) => std::fs::write(path, &out),
        None => io::stdout().write_all(&out),
    };
    if let Err(e) = write_result {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
