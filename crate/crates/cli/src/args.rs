use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use laglab_core::lagrangian::DEFAULT_SEED;

const SOURCE_HELP: &str = "\
Graph sources:
  PATH                              edge-list file (`r n m` header, one edge per line, `#` comments)
  -                                 edge list on stdin
  colex:r=R,m=M[,n=N]               the first M r-sets in colex order
  complete:r=R,t=T                  all r-subsets of [T]
  family:NAME,t=T[,i=I][,a=A]       a configuration 3-graph; NAME is one of
                                    thm1.10 (needs i, a), lemma3.3, lemma3.4, lemma3.6 (need a),
                                    lemma3.5, lemma3.7, case1..case6 (need a)";

const EXIT_HELP: &str = "\
Exit codes: 0 success or pass, 1 usage or parse error, 2 uncertified or failed numeric check, \
3 incomplete sweep (enumeration budget exhausted).";

#[derive(Debug, Parser)]
#[command(name = "laglab", version, about = "Lagrangians of 3-graphs and colex-initial extremality checks")]
#[command(after_help = EXIT_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Global seed for random starts (decimal or 0x-prefixed hex).
    #[arg(long, global = true, env = "LAGLAB_SEED", value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Convergence tolerance on the objective between gradient steps.
    #[arg(long, global = true, value_parser = parse_tolerance)]
    pub tol: Option<f64>,

    /// Certification bound on the stationarity residual.
    #[arg(long = "kkt-tol", global = true, value_parser = parse_tolerance)]
    pub kkt_tol: Option<f64>,

    /// Number of solver starts (uniform plus random).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub starts: Option<u64>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Output file (a directory for `sweep` and `enumerate --list`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the Lagrangian of one graph.
    #[command(after_help = SOURCE_HELP)]
    Compute {
        /// Edge-list path, `-`, or builtin spec.
        source: String,
        /// Default uniformity for builtin specs that omit `r`.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Verify every cell (t, m) with 4 ≤ t ≤ t-max.
    Sweep {
        #[arg(long = "t-max")]
        t_max: u32,
        /// Per-cell cap on enumerated graphs.
        #[arg(long = "max-graphs")]
        max_graphs: Option<usize>,
    },
    /// Build a configuration graph and compare it with the colex graph.
    #[command(name = "verify-config")]
    VerifyConfig {
        #[arg(long)]
        family: String,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        a: Option<u32>,
    },
    /// Count (and optionally list) left-compressed 3-graphs on [t] with m edges.
    Enumerate {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        m: usize,
        /// Emit every graph in edge-list format.
        #[arg(long)]
        list: bool,
    },
    /// Run one cell and check the support-size and symmetric-difference bounds on its witnesses.
    Check {
        #[arg(long)]
        t: u32,
        /// Number of edges.
        #[arg(long, conflicts_with = "a", required_unless_present = "a")]
        m: Option<u64>,
        /// Missing triples, m = C(t,3) − a.
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(long = "max-graphs")]
        max_graphs: Option<usize>,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
        Ok(_) => Err(format!("tolerance must be finite and non-negative, got {s}")),
        Err(e) => Err(format!("invalid tolerance `{s}`: {e}")),
    }
}
