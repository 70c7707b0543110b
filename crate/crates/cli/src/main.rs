//! `bifrac`: check (BF) conditions, saturate classes, localize finite strict
//! 2-categories and compare groupoids up to Morita equivalence.

mod catalog;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{Flags, GroupoidCheck, Target};
use report::{write_atomic, Report, Status};

#[derive(Parser, Debug)]
#[command(name = "bifrac", version, about)]
struct Cli {
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Emit the report as JSON (the only format).
    #[arg(long, global = true)]
    json: bool,
    /// Require choice tables to satisfy (C3) (default).
    #[arg(long, global = true, overrides_with = "no_c3")]
    c3: bool,
    /// Allow choice tables that violate (C3).
    #[arg(long, global = true, overrides_with = "c3")]
    no_c3: bool,
    /// Run the (X1)/(X2) weak-equivalence checks where applicable.
    #[arg(long, global = true)]
    xchecks: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the 2-category axioms of a document.
    Validate { path: PathBuf },
    /// Check the (BF) conditions for the document's class W.
    CheckBf { path: PathBuf },
    /// Compute the right saturation of W.
    Saturate { path: PathBuf },
    /// Build the bicategory of fractions and count its cells per hom.
    Localize { path: PathBuf },
    /// Decide whether a span `(apex,w,f)` is an internal equivalence.
    Equiv { path: PathBuf, span: String },
    /// Decide whether two representatives `(A,v1,v2,alpha,beta)` give the same 2-cell.
    CellEq {
        path: PathBuf,
        #[arg(long = "from")]
        source: String,
        #[arg(long = "to")]
        target: String,
        rep1: String,
        rep2: String,
    },
    /// Transport a strict 2-functor to the localizations.
    Induce {
        src: PathBuf,
        dst: PathBuf,
        functor: PathBuf,
        #[arg(long, value_enum, default_value = "sat")]
        target: Target,
    },
    /// Morita equivalence checks on groupoid documents.
    Groupoid {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        #[arg(long, value_enum)]
        check: GroupoidCheck,
        #[arg(long)]
        functor: Option<PathBuf>,
    },
    /// Write a built-in document.
    Fixtures { name: String, out: PathBuf },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::CheckBf { .. } => "check-bf",
            Command::Saturate { .. } => "saturate",
            Command::Localize { .. } => "localize",
            Command::Equiv { .. } => "equiv",
            Command::CellEq { .. } => "cell-eq",
            Command::Induce { .. } => "induce",
            Command::Groupoid { .. } => "groupoid",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<report::Outcome> {
    let flags = Flags {
        c3: !cli.no_c3,
        xchecks: cli.xchecks,
    };
    match &cli.command {
        Command::Validate { path } => commands::validate(path),
        Command::CheckBf { path } => commands::check_bf_cmd(path),
        Command::Saturate { path } => commands::saturate_cmd(path),
        Command::Localize { path } => commands::localize_cmd(path, &flags),
        Command::Equiv { path, span } => commands::equiv(path, span, &flags),
        Command::CellEq {
            path,
            source,
            target,
            rep1,
            rep2,
        } => commands::cell_eq(path, source, target, [rep1, rep2], &flags),
        Command::Induce {
            src,
            dst,
            functor,
            target,
        } => commands::induce_cmd(src, dst, functor, *target, &flags),
        Command::Groupoid {
            paths,
            check,
            functor,
        } => commands::groupoid(paths, *check, functor.as_deref()),
        Command::Fixtures { name, out } => commands::fixtures(name, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    let timing_ms = start.elapsed().as_millis() as u64;
    let args: Vec<String> = std::env::args().skip(1).collect();
    let report = match result {
        Ok(o) => Report {
            command: cli.command.name().to_string(),
            args,
            status: o.status(),
            verdicts: o.verdicts,
            data: o.data,
            error: o.note,
            timing_ms,
        },
        Err(e) => Report {
            command: cli.command.name().to_string(),
            args,
            status: Status::Error,
            verdicts: Vec::new(),
            data: serde_json::Value::Null,
            error: Some(format!("{e:#}")),
            timing_ms,
        },
    };
    let text = bifrac::doc::to_pretty(&report);
    match &cli.output {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                eprintln!("bifrac: {e:#}");
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if let Some(msg) = &report.error {
        eprintln!("bifrac: {msg}");
    }
    ExitCode::from(report.status.exit_code() as u8)
}
