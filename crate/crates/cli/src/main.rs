use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hyperspan::commands::{
    cmd_bench, cmd_check, cmd_components, cmd_konig, cmd_span, cmd_verify, BenchArgs, Outcome,
    SpanFlags, VerifyArgs,
};

/// Optimal spanning hyperforests of weighted q-uniform hypergraphs.
#[derive(Parser)]
#[command(name = "hyperspan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum (or maximum) weight skeleton.
    Span {
        instance: PathBuf,
        #[arg(long)]
        max: bool,
        /// Print every greedy decision.
        #[arg(long)]
        trace: bool,
        /// Probe all q removal subsets of the candidate's vertices.
        #[arg(long)]
        strict_removals: bool,
        /// Keep one matching across the run instead of rebuilding.
        #[arg(long)]
        incremental: bool,
    },
    /// Independence of a set of edges.
    Check {
        instance: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<String>,
    },
    /// Connected components and links of the minimum skeleton.
    Components { instance: PathBuf },
    /// Edge/vertex incidence graph as DOT.
    Konig {
        instance: PathBuf,
        /// Edge labels (default: all edges).
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<String>>,
        /// 1-based vertices to mark as removed.
        #[arg(long, value_delimiter = ',')]
        remove: Vec<usize>,
    },
    /// Randomized cross-checks between independent oracles.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
        #[arg(long, default_value_t = 7)]
        max_edges: usize,
        #[arg(long)]
        csv: bool,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Greedy timing on seeded random instances, as CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count for every row (default: edges / 5).
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long)]
        incremental: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome: Outcome = match cli.command {
        Command::Span {
            instance,
            max,
            trace,
            strict_removals,
            incremental,
        } => cmd_span(
            &instance,
            SpanFlags {
                max,
                trace,
                strict_removals,
                incremental,
            },
        ),
        Command::Check { instance, edges } => cmd_check(&instance, &edges),
        Command::Components { instance } => cmd_components(&instance),
        Command::Konig {
            instance,
            edges,
            remove,
        } => cmd_konig(&instance, edges.as_deref(), &remove),
        Command::Verify {
            seed,
            count,
            q,
            max_vertices,
            max_edges,
            csv,
            inject_fault,
        } => cmd_verify(&VerifyArgs {
            seed,
            count,
            q,
            max_vertices,
            max_edges,
            csv,
            inject_fault,
        }),
        Command::Bench {
            sizes,
            q,
            seed,
            vertices,
            incremental,
        } => cmd_bench(&BenchArgs {
            sizes,
            q,
            seed,
            vertices,
            incremental,
        }),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
