mod commands;
mod suites;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use ultrafree::{Error, SearchBudget};

#[derive(Parser)]
#[command(name = "ultrafree", version, about = "Exact invariants of ultra maximal K_r-free graphs")]
struct Cli {
    /// Abort any single exhaustive search after this many nodes.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Abort any single exhaustive search after this many milliseconds.
    #[arg(long, global = true, env = "ULTRAFREE_BUDGET_MS")]
    budget_ms: Option<u64>,
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named construction.
    Gen(commands::GenArgs),
    /// Compute graph invariants.
    Analyze(commands::AnalyzeArgs),
    /// Compute set-system invariants.
    Setsys(commands::SetsysArgs),
    /// Radon, Helly and weak-net computations on a convexity space.
    Space(commands::SpaceArgs),
    /// Decompose a graph as a blow-up.
    Decompose(commands::DecomposeArgs),
    /// Run a verification suite.
    Verify(suites::VerifyArgs),
}

/// What a command produced: a JSON document, its plain-text rendering, and whether
/// every check in it passed.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 3,
        Some(Error::Parse { .. } | Error::SelfLoop { .. } | Error::Invalid(_)) => 2,
        Some(_) => 1,
        // Unreadable files and malformed arguments.
        None => 2,
    }
}

fn error_kind(err: &anyhow::Error) -> &'static str {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => "budget-exceeded",
        Some(Error::Infeasible(_)) => "infeasible",
        Some(Error::Precondition(_)) => "precondition-violated",
        Some(Error::ClaimViolation(_)) => "claim-violation",
        Some(Error::InternalContradiction(_)) => "internal-contradiction",
        Some(Error::NotCliqueFree { .. }) => "not-clique-free",
        Some(Error::Parse { .. }) => "parse-error",
        Some(Error::SelfLoop { .. }) => "self-loop-rejected",
        Some(Error::Invalid(_)) => "invalid-input",
        None if err.downcast_ref::<std::io::Error>().is_some() => "io-error",
        None => "usage",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let budget = SearchBudget {
        max_nodes: cli.budget_nodes,
        max_millis: cli.budget_ms,
    };
    let result = match cli.command {
        Command::Gen(args) => commands::gen(args),
        Command::Analyze(args) => commands::analyze(args, budget),
        Command::Setsys(args) => commands::setsys(args, budget),
        Command::Space(args) => commands::space(args, budget),
        Command::Decompose(args) => commands::decompose(args, budget),
        Command::Verify(args) => suites::verify(args, budget),
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json output"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(err) => {
            if cli.json {
                let doc = json!({"error": {"kind": error_kind(&err), "message": format!("{err:#}")}});
                println!("{}", serde_json::to_string_pretty(&doc).expect("json output"));
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
