use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use invcx::cli::{exit, run_text, spec::parse_j1, CliError, Command, J1Choice, Options};

/// Classify, construct and verify invariant complex structures on g/h.
#[derive(Debug, Parser)]
#[command(name = "invcx", version)]
struct Args {
    /// Problem file (JSON).
    #[arg(long)]
    spec: PathBuf,

    #[arg(long, value_enum)]
    command: Command,

    /// Parabolic to use for `construct`; overrides the spec.
    #[arg(long)]
    parabolic_index: Option<usize>,

    /// `default`, or a path to a JSON matrix for the fiber structure.
    #[arg(long)]
    j1: Option<String>,

    /// Seed for the randomized trials of `verify`.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Report destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn j1_option(arg: &str) -> Result<J1Choice, CliError> {
    if arg == "default" {
        return Ok(J1Choice::Default);
    }
    let text = read(&PathBuf::from(arg))?;
    let value = serde_json::from_str(&text).map_err(|e| CliError::Parse {
        path: arg.into(),
        line: Some((e.line(), e.column())),
        message: e.to_string(),
    })?;
    parse_j1("--j1", value)
}

fn emit(report: &serde_json::Value, out: Option<&PathBuf>) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = (|| {
        let j1 = args.j1.as_deref().map(j1_option).transpose()?;
        let text = read(&args.spec)?;
        let opts = Options {
            parabolic_index: args.parabolic_index,
            j1,
            seed: args.seed,
        };
        Ok::<_, CliError>(run_text(args.command, &text, &opts))
    })()
    .unwrap_or_else(|e: CliError| invcx::cli::Outcome {
        report: serde_json::json!({
            "command": args.command.name(),
            "error": { "kind": e.kind(), "message": e.to_string() },
        }),
        exit: e.exit_code(),
    });
    if let Some(err) = outcome.report.get("error") {
        eprintln!("invcx: {}", err["message"].as_str().unwrap_or("error"));
    }
    if let Err(e) = emit(&outcome.report, args.out.as_ref()) {
        eprintln!("invcx: cannot write report: {e}");
        return ExitCode::from(exit::INPUT);
    }
    ExitCode::from(outcome.exit)
}
