use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fbvp_cli::{CaseSelection, Options};

#[derive(Parser)]
#[command(
    name = "fbvp",
    version,
    about = "Fuzzy boundary value problems via the fuzzy Laplace transform"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file and write summary, report and CSV files.
    Run(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Problem file.
    file: PathBuf,
    /// Differentiability case: 11, 22, 12, 21 or all.
    #[arg(long)]
    case: Option<CaseSelection>,
    /// Number of r levels in the CSV and the checks.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    r_levels: Option<u32>,
    /// Number of x samples in the CSV and the checks.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    x_samples: Option<u32>,
    /// Cross-check against the finite-difference solver.
    #[arg(long)]
    oracle: bool,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let Command::Run(args) = Cli::parse().command;
    let opts = Options {
        case: args.case,
        r_levels: args.r_levels.map(|n| n as usize),
        x_samples: args.x_samples.map(|n| n as usize),
        oracle: args.oracle,
    };
    match fbvp_cli::run(&args.file, &opts, &args.out) {
        Ok(run) => {
            print!("{}", run.report);
            let failures = run.failures();
            if run.exit_code() != 0 {
                eprintln!("fbvp: all requested cases failed");
                for (case, reason) in failures {
                    eprintln!("  case {}: {reason}", case.tag());
                }
            }
            eprintln!("fbvp: wrote outputs to {}", args.out.display());
            ExitCode::from(run.exit_code())
        }
        Err(e) => {
            eprintln!("fbvp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
