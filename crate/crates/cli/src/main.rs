use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

use monodromy_cli::{
    cmd_homology, cmd_invariants, cmd_suspend, cmd_sweep, cmd_theorem1, cmd_tower_search, CliError,
    Report, Status,
};
use monodromy_core::group::DEFAULT_GROUP_BOUND;

#[derive(Parser)]
#[command(name = "monodromy", version, about = "Monodromy and normalization invariants of branched covers of the sphere")]
struct Cli {
    /// Largest permutation group materialized before giving up.
    #[arg(long, global = true, env = "MONODROMY_GROUP_BOUND", default_value_t = DEFAULT_GROUP_BOUND)]
    group_bound: usize,

    /// Emit the JSON report on stdout; `--json false` prints a summary instead.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set, num_args = 0..=1, default_missing_value = "true")]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of branch data given as {"degree": n, "branch": [...]}.
    Invariants {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Compose two winding covers and check the suspension obstructions.
    Theorem1 { inner_degree: usize, outer_degree: usize },
    /// Exhaustive check over all branch data up to the given bounds.
    Sweep {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[arg(long)]
        override_budget: bool,
    },
    /// First torus-domain covers with and without local degree three.
    TowerSearch {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Integral homology of a complex given as {"simplices": [[..], ..]}.
    Homology {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// Suspension of a complex and its homology.
    Suspend {
        #[arg(long, default_value = "-")]
        input: String,
    },
}

fn read_input(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Parse(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let bound = cli.group_bound;
    match &cli.command {
        Command::Invariants { input } => cmd_invariants(&read_input(input)?, bound),
        Command::Theorem1 { inner_degree, outer_degree } => cmd_theorem1(*inner_degree, *outer_degree, bound),
        Command::Sweep { n_max, k_max, override_budget } => cmd_sweep(*n_max, *k_max, *override_budget, bound),
        Command::TowerSearch { n_max } => cmd_tower_search(*n_max, bound),
        Command::Homology { input } => cmd_homology(&read_input(input)?),
        Command::Suspend { input } => cmd_suspend(&read_input(input)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            for v in &report.verdicts {
                eprintln!("{}: {:?}", v.claim, v.status);
            }
            let text = if cli.json {
                report.to_json()
            } else {
                let refuted = report.verdicts.iter().filter(|v| v.status == Status::Refuted).count();
                format!("{}: {} verdicts, {} refuted", report.command, report.verdicts.len(), refuted)
            };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
