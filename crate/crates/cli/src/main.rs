mod commands;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use commands::{Command, Outcome};

/// Splitting types on P^1, Schur calculus, Borel-Weil-Bott degrees and tautological
/// vanishing checks on Quot schemes.
#[derive(Parser, Debug)]
#[command(name = "splitquot", version)]
struct Cli {
    /// Print only the headline value instead of the JSON report.
    #[arg(long, global = true)]
    plain: bool,

    /// Add wall-clock timing (milliseconds) to the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    inputs: Value,
    outputs: Value,
    counterexamples: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, inputs) = cli.command.describe();
    let outcome = match cli.command.run() {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let elapsed = start.elapsed();
    let failed = !outcome.counterexamples.is_empty();
    let text = if cli.plain {
        plain_text(&outcome)
    } else {
        let Outcome {
            outputs,
            counterexamples,
            ..
        } = outcome;
        let report = Report {
            command: &name,
            inputs,
            outputs,
            counterexamples,
            timing_ms: cli.timing.then_some(elapsed.as_secs_f64() * 1e3),
        };
        serde_json::to_string_pretty(&report).expect("report serializes")
    };
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn plain_text(o: &Outcome) -> String {
    match &o.plain {
        Some(s) => s.clone(),
        None => o.outputs.to_string(),
    }
}
