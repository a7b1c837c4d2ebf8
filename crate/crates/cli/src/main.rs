//! `peskine`: marking lattices, association criteria, and the trivector-to-cubic pipeline.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::RunReport;

#[derive(Parser)]
#[command(name = "peskine", version, about = "Discriminants, markings and the Peskine cubic pipeline")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    K3,
    Cubic,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Gram matrix and discriminant form of the marking of discriminant d
    Marking {
        #[arg(long)]
        d: i64,
    },
    /// Associated K3 surface / cubic fourfold, closed form against the congruence scan
    Assoc {
        #[arg(long)]
        d: i64,
        #[arg(long, value_enum, default_value = "both")]
        kind: Kind,
    },
    /// Association table over a range or list of discriminants (default: the reference rows)
    Table {
        /// Inclusive range such as 22..100
        #[arg(long, conflicts_with = "list")]
        range: Option<String>,
        /// Comma-separated discriminants
        #[arg(long, value_delimiter = ',')]
        list: Option<Vec<i64>>,
        /// Compare against the embedded reference table
        #[arg(long)]
        fixture_check: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Computations on a trivector file
    Peskine {
        sigma: PathBuf,
        #[command(subcommand)]
        action: PeskineAction,
    },
    /// Run the embedded example end to end: flag, rank, cubic, smoothness
    VerifyAppendix {
        /// Primes for the smoothness check (repeatable); defaults to 10007 and 31013
        #[arg(long = "prime")]
        primes: Vec<u64>,
        /// Replace the embedded trivector
        #[arg(long)]
        sigma: Option<PathBuf>,
        /// Replace the embedded cubic
        #[arg(long)]
        cubic: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
pub enum PeskineAction {
    /// The 45 Pfaffian quartics
    Equations,
    /// Rank of the contraction at a point (`e3` or ten comma-separated integers)
    Rank {
        #[arg(long)]
        at: String,
    },
    /// Check the flag condition
    FlagVerify {
        /// Shorthand like e1:e1..e6, or a file with 7 rows of 10 integers
        #[arg(long, default_value = "e1:e1..e6")]
        flag: String,
    },
    /// Extract the cubic cut out on P(W6)
    Cubic {
        #[arg(long, default_value = "e1:e1..e6")]
        flag: String,
    },
    /// Extract the cubic and certify smoothness at two primes
    Smooth {
        #[arg(long, default_value = "e1:e1..e6")]
        flag: String,
        #[arg(long = "prime")]
        primes: Vec<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = RunReport::default();
    let result = match cli.command {
        Command::Marking { d } => commands::marking(&mut report, d),
        Command::Assoc { d, kind } => commands::assoc(&mut report, d, kind),
        Command::Table {
            range,
            list,
            fixture_check,
            format,
        } => commands::table(&mut report, range.as_deref(), list, fixture_check, format),
        Command::Peskine { sigma, action } => commands::peskine(&mut report, &sigma, action),
        Command::VerifyAppendix { primes, sigma, cubic } => {
            commands::verify_appendix(&mut report, primes, sigma.as_deref(), cubic.as_deref())
        }
    };
    // a closed pipe (e.g. `| head`) is not an error
    let _ = std::io::stdout().write_all(report.render().as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}
