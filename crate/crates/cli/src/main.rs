//! Batch command-line front end: solve, cop numbers, kernelization,
//! bounds, generators, playouts, and the kernel-versus-direct benchmark.
//!
//! Exit codes: 0 solved/success, 1 robber-win or no-instance where a
//! verdict is the output (and benchmark disagreement), 2 usage error,
//! 3 budget exceeded, 4 malformed input.

mod commands;

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "copwin", version, about = "Pursuit games on graphs: exact solving, kernelization, bounds, generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether k cops win on a graph under a rule set.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        /// Rule-set config (TOML); classic rules when omitted.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        /// State budget override (else COPWIN_STATE_BUDGET, else 5M).
        #[arg(long)]
        state_budget: Option<usize>,
    },
    /// Search the minimum winning cop count.
    Copnumber {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Search cap; defaults to a parameter-based bound (vertex count as
        /// the last resort).
        #[arg(long)]
        upper: Option<usize>,
        #[arg(long)]
        state_budget: Option<usize>,
    },
    /// Shrink an instance with one of the kernelization pipelines.
    Kernelize {
        /// Pipeline: vc | cvd | dts | nd | directed | general.
        #[arg(long)]
        param: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Deletion-set file (one line of vertex ids); computed exactly
        /// when omitted.
        #[arg(long)]
        cover: Option<PathBuf>,
        /// Rule-set config for the general pipeline.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Reduced graph output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Applied-rule trace output path.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        node_budget: Option<usize>,
    },
    /// Print upper bounds and the cop plan realizing them.
    Bound {
        #[arg(long)]
        graph: PathBuf,
        /// Parameter: vc | cvd | dts | nd.
        #[arg(long)]
        param: String,
        #[arg(long)]
        cover: Option<PathBuf>,
        #[arg(long)]
        node_budget: Option<usize>,
    },
    /// Emit benchmark-family instances.
    #[command(subcommand)]
    Generate(GenerateCmd),
    /// Play a solved cop strategy against a chosen robber policy.
    Simulate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        /// Robber policy: optimal | greedy | random.
        #[arg(long, default_value = "optimal")]
        robber: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Round cap; defaults to the state-space size plus one.
        #[arg(long)]
        max_rounds: Option<usize>,
        /// Trace output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        state_budget: Option<usize>,
    },
    /// Time direct solving against kernelize-then-solve over a corpus
    /// directory of edge-list files.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        k: usize,
        /// Also lift each kernel strategy and validate it by playout.
        #[arg(long, default_value_t = false)]
        lift: bool,
        /// Report output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        state_budget: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GenerateCmd {
    /// High-girth block-bipartite grid.
    Hpqr {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Domination-to-pursuit reduction (undirected).
    RbdsReduction {
        /// Instance file: first line `T N k`, then `terminal dominator`
        /// pairs. The instance is augmented automatically.
        #[arg(long)]
        inst: PathBuf,
        /// Block-size override below the full bound (flagged in output).
        #[arg(long)]
        q_override: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Domination-to-pursuit reduction (strongly connected oriented).
    OrientedReduction {
        #[arg(long)]
        inst: PathBuf,
        #[arg(long)]
        q_override: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Twin augmentation of a base graph.
    Twins {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        rounds: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// mixed | false-only
        #[arg(long, default_value = "mixed")]
        mode: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
