mod commands;
mod output;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::{CliError, CommandResult};

/// Analyses of edge-colored graphs encoding PL manifolds.
#[derive(Parser, Debug)]
#[command(name = "gemkit", version, about)]
pub struct Cli {
    /// Render human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a gem file and check the graph invariants.
    Validate { path: PathBuf },
    /// Order, residue counts, Euler characteristic, classification, Betti numbers.
    Info { path: PathBuf },
    /// Regular genus for every cyclic permutation, or the minimum.
    Genus(GenusArgs),
    /// Condition (*), trisection reports and genus bounds (dimension 4).
    Trisect {
        path: PathBuf,
        /// Number of switches that produced this graph from a closed
        /// crystallization; checks the closed-manifold bound against it.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Combinatorial moves; results are written beside the input.
    #[command(subcommand)]
    Moves(MovesCommand),
    /// Trisection-genus bounds from Kirby diagram data.
    Bounds(BoundsArgs),
    /// Test two gems for isomorphism.
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// Also allow renaming colors.
        #[arg(long)]
        colors: bool,
    },
}

#[derive(Args, Debug)]
pub struct GenusArgs {
    pub path: PathBuf,
    /// One row per cyclic permutation.
    #[arg(long, conflicts_with = "min")]
    pub all: bool,
    /// The minimum with its witness (default).
    #[arg(long)]
    pub min: bool,
    /// Work on the unique residue missing this color.
    #[arg(long, value_name = "COLOR")]
    pub residue: Option<usize>,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Output gem path (default: beside the input with a numbered suffix).
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum MovesCommand {
    /// List ρ-pairs of one color.
    RhoList {
        path: PathBuf,
        #[arg(long)]
        color: usize,
        /// Only pairs involving at least these colors, e.g. `4` or `1,2`.
        #[arg(long, value_name = "COLORS")]
        involved: Option<String>,
        /// Only pairs involving exactly the `--involved` colors.
        #[arg(long, requires = "involved")]
        exact: bool,
    },
    /// Switch the ρ-pair formed by the edges of one color at two vertices.
    RhoSwitch {
        path: PathBuf,
        #[arg(long)]
        color: usize,
        /// Endpoints `x,y` of the two edges.
        #[arg(long, value_name = "X,Y")]
        at: String,
        /// a, b or canonical.
        #[arg(long, default_value = "canonical")]
        variant: String,
        #[command(flatten)]
        out: Output,
    },
    /// List dipoles.
    DipoleList {
        path: PathBuf,
        /// Number of parallel edges; all sizes when omitted.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Cancel the proper dipole formed by two vertices.
    DipoleCancel {
        path: PathBuf,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Insert a dipole, cutting one edge per remaining color.
    DipoleInsert {
        path: PathBuf,
        /// Colors of the dipole, e.g. `0,1,2`.
        #[arg(long)]
        colors: String,
        /// `color:x:y` per remaining color, comma separated.
        #[arg(long)]
        attach: String,
        #[command(flatten)]
        out: Output,
    },
    /// Graph connected sum of two gems.
    Consum {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, default_value_t = 0)]
        v1: usize,
        #[arg(long, default_value_t = 0)]
        v2: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Repeated switches of ρ₁-pairs involving color 4, with every check.
    Pipeline {
        path: PathBuf,
        #[arg(long)]
        color: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Replay a move log from a starting gem and verify every line.
    Replay {
        path: PathBuf,
        log: PathBuf,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    /// Crossing number.
    #[arg(long)]
    pub s: u64,
    /// Number of connected components.
    #[arg(long, default_value_t = 1)]
    pub c: u64,
    /// Number of α-colored regions.
    #[arg(long = "m-alpha")]
    pub m_alpha: Option<u64>,
    /// The diagram has dotted components.
    #[arg(long)]
    pub dotted: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let name = commands::name(&cli.command);
    let result = std::panic::catch_unwind(|| commands::run(&cli.command))
        .unwrap_or_else(|_| Err(CliError::internal("panic", "internal error")));
    let report = CommandResult::from_outcome(name, result);
    let text = if cli.pretty { render::pretty(&report) } else { report.to_json() };
    // A closed pipe is not an error worth reporting.
    let _ = writeln!(std::io::stdout(), "{text}");
    ExitCode::from(report.exit_code())
}
