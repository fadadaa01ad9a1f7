//! `chibound`: cut ranks, exact rank-width, chi-bounded colorings and instance
//! generation from the command line.
//!
//! Exit codes: 0 success, 1 a `verify` check failed, 2 malformed input or
//! arguments, 3 a search exceeded its size limit, 4 a precondition or
//! guarantee was violated. Search limits come from `CHIBOUND_CLIQUE_LIMIT`,
//! `CHIBOUND_CHI_LIMIT`, `CHIBOUND_VMINOR_LIMIT` and `CHIBOUND_RW_LIMIT`.

mod commands;
mod failure;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chibound::oracles::Limits;
use clap::{Parser, Subcommand};

use commands::GenMode;
use failure::{Failure, Kind};

#[derive(Parser)]
#[command(
    name = "chibound",
    version,
    about = "Chi-bounded coloring via low-rank decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the GF(2) rank and diversity of the cut (W, V \ W).
    Cutrank {
        graph: PathBuf,
        /// Comma-separated vertex ids of W.
        #[arg(long, allow_hyphen_values = true)]
        side: String,
    },
    /// Exact rank-width by exhaustive search over cubic trees.
    Rankwidth {
        graph: PathBuf,
        /// Write the witness decomposition here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// Proper coloring along a decomposition, re-verified before exit.
    Color {
        graph: PathBuf,
        decomposition: PathBuf,
        /// Piece color budget as a function of clique number: const:N or table:a,b,...
        #[arg(long)]
        f: String,
        /// Decomposition rank budget.
        #[arg(long)]
        r: usize,
        /// Write the coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
    },
    /// Check a coloring, and optionally a rank-decomposition.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        decomp: Option<PathBuf>,
        /// Fail the width check above this value.
        #[arg(long)]
        max_width: Option<usize>,
    },
    /// Write seeded random instances.
    Gen {
        #[arg(long, value_enum)]
        mode: GenMode,
        /// Vertices (er, rw) or pieces (jointree).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Edge probability.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Largest piece in jointree mode.
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Decide whether the graph has the target as a vertex-minor.
    Vminor {
        graph: PathBuf,
        /// w5, w7, cube, cube- or a graph file.
        #[arg(long)]
        target: String,
    },
}

fn run(cli: Cli, limits: &Limits) -> Result<(String, bool), Failure> {
    let ok = |s: String| Ok((s, true));
    match cli.command {
        Command::Cutrank { graph, side } => ok(commands::cutrank(&graph, &side)?),
        Command::Rankwidth {
            graph,
            out,
            sequential,
        } => ok(commands::rankwidth(
            &graph,
            out.as_deref(),
            limits,
            sequential,
        )?),
        Command::Color {
            graph,
            decomposition,
            f,
            r,
            out,
            sequential,
        } => ok(commands::color(
            &commands::ColorArgs {
                graph: &graph,
                decomposition: &decomposition,
                f: &f,
                r,
                out: out.as_deref(),
                sequential,
            },
            limits,
        )?),
        Command::Verify {
            graph,
            coloring,
            decomp,
            max_width,
        } => commands::verify(&graph, &coloring, decomp.as_deref(), max_width),
        Command::Gen {
            mode,
            n,
            seed,
            p,
            max_size,
            out_dir,
        } => ok(commands::generate(
            &commands::GenArgs {
                mode,
                n,
                seed,
                p,
                max_size,
                out_dir: &out_dir,
            },
            limits,
        )?),
        Command::Vminor { graph, target } => ok(commands::vminor(&graph, &target, limits)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(Kind::Parse as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli, &Limits::from_env()) {
        Ok((out, passed)) => {
            print!("{out}");
            let _ = std::io::stdout().flush();
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(f) => {
            eprintln!("chibound: {f}");
            f.exit_code()
        }
    }
}
