use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use treextremal::enumerate::EnumerationBudget;
use treextremal::verify::{default_max_n, DEFAULT_MAX_K};
use treextremal::{Claim, DegreeSequence, Error};

mod commands;
mod output;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "treextremal", version, about = "Subtree counts and extremal trees for degree sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. CSV emits the command's main table.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Largest number of labeled trees a brute-force search may walk.
    #[arg(long, env = "TREEXTREMAL_BUDGET", global = true)]
    budget_labeled: Option<u64>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count subtrees of one tree.
    Count(CountArgs),
    /// Find the trees with fewest or most subtrees for a degree sequence.
    Extremal(ExtremalArgs),
    /// List all trees (up to isomorphism) with a degree sequence.
    Enumerate(EnumerateArgs),
    /// Evaluate the closed-form minimum for two to five internal vertices.
    ClosedForm(ClosedFormArgs),
    /// Check a claim exhaustively over small degree sequences.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Serialize)]
#[group(required = true, multiple = false)]
struct CountArgs {
    /// Edge-list file: vertex count on the first line, then one edge per line. "-" reads stdin.
    file: Option<PathBuf>,
    /// Pendant counts of a caterpillar, e.g. "1,0,0".
    #[arg(long)]
    caterpillar: Option<String>,
}

#[derive(Args, Debug, Serialize)]
struct ExtremalArgs {
    /// Degree sequence, e.g. "3,2,2,1*3".
    #[arg(long, value_parser = parse_degseq)]
    degseq: DegreeSequence,
    #[arg(long, value_enum, default_value_t = ObjectiveArg::Min)]
    objective: ObjectiveArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
}

#[derive(Args, Debug, Serialize)]
struct EnumerateArgs {
    #[arg(long, value_parser = parse_degseq)]
    degseq: DegreeSequence,
    /// Only caterpillars, searched by pendant arrangement.
    #[arg(long)]
    caterpillars_only: bool,
}

#[derive(Args, Debug, Serialize)]
struct ClosedFormArgs {
    #[arg(long, value_parser = parse_degseq)]
    degseq: DegreeSequence,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    /// Claim id, e.g. thm-2.1 or wiener-correspondence.
    #[arg(value_parser = parse_claim)]
    claim: Claim,
    /// Largest order swept; defaults depend on the claim.
    #[arg(long)]
    max_n: Option<usize>,
    /// Largest number of internal vertices for the shape claims.
    #[arg(long, default_value_t = DEFAULT_MAX_K)]
    max_k: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum ObjectiveArg {
    Min,
    Max,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum MethodArg {
    Auto,
    Brute,
    Caterpillar,
    ClosedForm,
}

fn parse_degseq(s: &str) -> Result<DegreeSequence, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_claim(s: &str) -> Result<Claim, String> {
    s.parse().map_err(|e: Error| {
        let known: Vec<&str> = Claim::ALL.iter().map(|c| c.id()).collect();
        format!("{e}; known claims: {}", known.join(", "))
    })
}

/// Failure modes mapped onto the exit-code contract.
enum Failure {
    Input(String),
    Budget(String),
    Verification,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::TooLarge { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let budget = cli
        .budget_labeled
        .map_or_else(EnumerationBudget::default, EnumerationBudget::with_max_labeled);
    let (doc, passed) = match &cli.command {
        Command::Count(args) => {
            let text = args.file.as_ref().map(read_input).transpose()?;
            (commands::count(args, text.as_deref())?, true)
        }
        Command::Extremal(args) => (commands::extremal(args, &budget)?, true),
        Command::Enumerate(args) => (commands::enumerate(args, &budget)?, true),
        Command::ClosedForm(args) => (commands::closed_form(args)?, true),
        Command::Verify(args) => {
            let max_n = args.max_n.unwrap_or_else(|| default_max_n(args.claim));
            commands::verify(args, max_n, &budget)?
        }
    };
    let rendered = output::render(&doc, cli.format).map_err(Failure::Input)?;
    match &cli.out {
        Some(path) => fs::write(path, rendered)?,
        None => io::stdout().lock().write_all(rendered.as_bytes())?,
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
