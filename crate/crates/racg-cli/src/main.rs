//! racg: decide whether the boundary of the Davis complex of a right-angled
//! Coxeter system is minimal, and inspect the word combinatorics behind the
//! decision.
//!
//! The system is described by a small TOML file listing the generators and
//! the commuting pairs; see `format` for the exact layout. Four subcommands
//! cover the surface: `reduce` solves the word problem, `analyze` reports
//! the structural verdict, `witness` constructs and certifies a
//! quasi-density witness (or exhibits holes for split systems), and
//! `verify` runs the exhaustive structural check suites on a Cayley ball.

mod commands;
mod format;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable text.
    Text,
    /// One JSON document on stdout.
    Machine,
}

#[derive(Parser)]
#[command(
    name = "racg",
    version,
    about = "Right-angled Coxeter systems: normal forms, descent combinatorics, and boundary-minimality certificates"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a word to its ShortLex normal form and report its descents.
    Reduce {
        /// Presentation file.
        file: PathBuf,
        /// Space-separated generator names; empty for the identity.
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Report components, maximal spherical subsets, and the minimality
    /// verdict.
    Analyze {
        /// Presentation file.
        file: PathBuf,
        /// Also decide parabolic orbit density for this subset
        /// (space-separated generator names).
        #[arg(long)]
        subset: Option<String>,
        /// Write the commutation graph in DOT form to this path.
        #[arg(long)]
        dot_commutation: Option<PathBuf>,
        /// Write the infinity graph in DOT form to this path.
        #[arg(long)]
        dot_infinity: Option<PathBuf>,
    },
    /// Construct a quasi-density witness and certify it on a Cayley ball,
    /// or report a splitting with per-generator holes.
    Witness {
        /// Presentation file.
        file: PathBuf,
        /// Certification ball radius.
        #[arg(long, default_value_t = 8)]
        radius: usize,
        /// Density bound for the hole search on splitting outcomes.
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Ball radius for the hole search on splitting outcomes.
        #[arg(long, default_value_t = 12)]
        falsify_radius: usize,
    },
    /// Run the structural check suites over a Cayley ball.
    Verify {
        /// Presentation file.
        file: PathBuf,
        /// Ball radius for the exhaustive checks.
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Comma-separated list of checks to run (default: all of
        /// length-step, descent-clique, singleton-shift,
        /// commuting-sandwich, descent-step, max-clique-density).
        #[arg(long)]
        lemmas: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match commands::run(cli.command, format) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            failure.emit(format);
            ExitCode::from(failure.exit_code())
        }
    }
}
