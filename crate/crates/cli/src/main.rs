//! Command-line front end for exact lattice-polygon geometry.
//!
//! Exit codes: 0 success (and every check passed), 1 invalid polygon or
//! other domain error (or a failed check), 2 unreadable/unparseable
//! input, 3 overflow.

mod commands;
mod report;
mod svg;

use clap::{Parser, Subcommand, ValueEnum};
use commands::{AreaMethod, CliError};
use report::Report;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "latticepick",
    version,
    about = "Exact geometry of lattice polygons on Z²"
)]
struct Cli {
    /// Report rendering
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Pick,
    Shoelace,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Polygon area from point counts, the surveyor formula, or both
    Area {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Boundary and interior lattice-point counts
    Counts { file: PathBuf },
    /// Partition into elementary triangles, optionally drawing an SVG
    Triangulate {
        file: PathBuf,
        /// Write the figure to this path
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Extended Euclidean algorithm: the identity g = s*a + t*b
    Bezout { a: i64, b: i64 },
    /// Partner vector spanning a primitive cell with (x, y)
    Partner { x: i64, y: i64 },
    /// The Farey sequence of order n, ascending
    Farey {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Interior counts of the k-scaled polygon for k = 1..=k_max
    Scale {
        file: PathBuf,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
    },
    /// Full cross-validation battery on one polygon
    Check { file: PathBuf },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Area { file, method } => {
            let method = match method {
                Method::Pick => AreaMethod::Pick,
                Method::Shoelace => AreaMethod::Shoelace,
                Method::Both => AreaMethod::Both,
            };
            commands::cmd_area(file, method)
        }
        Command::Counts { file } => commands::cmd_counts(file),
        Command::Triangulate { file, svg } => commands::cmd_triangulate(file, svg.as_deref()),
        Command::Bezout { a, b } => commands::cmd_bezout(*a, *b),
        Command::Partner { x, y } => commands::cmd_partner(*x, *y),
        Command::Farey { n } => commands::cmd_farey(*n),
        Command::Scale { file, k_max } => commands::cmd_scale(file, *k_max),
        Command::Check { file } => commands::cmd_check(file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Json => println!("{}", report.to_json_string()),
            }
            if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
