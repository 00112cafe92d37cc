//! `puddle`: command-line front end. JSON goes to standard output, a short
//! human summary to standard error.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "puddle", version, about = "Arc-spline curves, incircles and unit-disk fitting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a curve and report length, curvature, diameter and two-disk fit.
    Check {
        /// Curve JSON file, or `-` for standard input.
        input: PathBuf,
        /// Also compute sampling oracles and their deltas.
        #[arg(long)]
        oracle: bool,
    },
    /// Emit a named gallery curve.
    Gallery(GalleryArgs),
    /// Run the supporting-point bisection from the incircle at `t`.
    Lemma {
        input: PathBuf,
        /// Arclength parameter of the base point.
        #[arg(long)]
        t: f64,
    },
    /// Two disjoint unit disks for a curve with |kappa| ≤ 1 and diameter ≥ 4.
    Witness {
        input: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Search for k disjoint unit disks.
    Fit {
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Multi-start search for extremal curves.
    Search(SearchArgs),
    /// Render a curve as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
pub struct GalleryArgs {
    /// circle, stadium, dumbbell, three-circle-border or rounded-reuleaux.
    pub name: String,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long = "R")]
    pub big_r: Option<f64>,
    #[arg(long)]
    pub l: Option<f64>,
    #[arg(long)]
    pub width: Option<f64>,
    #[arg(long)]
    pub rho: Option<f64>,
    /// Replace this segment (curvature ±1/3) by three unit arcs.
    #[arg(long)]
    pub exchange: Option<usize>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SearchArgs {
    /// min_length_given_diameter or min_diameter_given_length.
    #[arg(long)]
    pub objective: String,
    #[arg(long, default_value_t = 8)]
    pub segments: usize,
    #[arg(long, default_value_t = 20)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Objective evaluations per restart.
    #[arg(long, default_value_t = 20_000)]
    pub max_iters: usize,
    /// Curve JSON used as the start of restart 0.
    #[arg(long)]
    pub start: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct RenderArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Render spec JSON (size, stroke, overlays).
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Witness JSON whose centers are drawn as unit circles.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    #[arg(long)]
    pub width: Option<u32>,
    #[arg(long)]
    pub height: Option<u32>,
    #[arg(long)]
    pub stroke: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = io::tolerance().and_then(|tol| match cli.command {
        Command::Check { input, oracle } => commands::check(&input, oracle, tol),
        Command::Gallery(args) => commands::gallery(&args, tol),
        Command::Lemma { input, t } => commands::lemma(&input, t, tol),
        Command::Witness { input, svg } => commands::witness(&input, svg.as_deref(), tol),
        Command::Fit { input, k } => commands::fit(&input, k, tol),
        Command::Search(args) => commands::search(&args, tol),
        Command::Render(args) => commands::render(&args, tol),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
