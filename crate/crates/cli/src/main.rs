mod args;
mod commands;
mod defaults;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use output::Report;

/// Why a run stopped; decides the exit status.
#[derive(Debug)]
pub enum Failure {
    Invalid(String),
    Library(ptwell::Error),
    Output(String),
}

impl From<ptwell::Error> for Failure {
    fn from(e: ptwell::Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Library(e) if e.is_numerical() => 2,
            _ => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Invalid(_) => "InvalidArgument",
            Failure::Output(_) => "OutputError",
            Failure::Library(e) => match e {
                ptwell::Error::SingularPoint { .. } => "SingularPoint",
                ptwell::Error::OutOfRange { .. } => "OutOfRange",
                ptwell::Error::UnsupportedFamily(..) => "UnsupportedFamily",
                ptwell::Error::NonNormalizable(_) => "NonNormalizable",
                ptwell::Error::BlowUp { .. } => "BlowUp",
                ptwell::Error::ZeroEnergy(_) => "ZeroEnergy",
                ptwell::Error::GridMismatch(_) => "GridMismatch",
                ptwell::Error::NoConvergence(_) => "NoConvergence",
                ptwell::Error::DegenerateBox(_) => "DegenerateBox",
                ptwell::Error::InvalidParameter(_) => "InvalidParameter",
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Invalid(m) | Failure::Output(m) => m.clone(),
            Failure::Library(e) => e.to_string(),
        }
    }
}

fn report_failure(failure: &Failure) -> ExitCode {
    let code = failure.exit_code();
    let doc = json!({
        "error": { "kind": failure.kind(), "message": failure.message() },
        "exit_code": code,
    });
    eprintln!("{doc}");
    ExitCode::from(code)
}

fn destination(out: &PathBuf) -> PathBuf {
    match std::env::var_os(defaults::OUT_DIR_ENV) {
        Some(dir) if out.is_relative() && !dir.is_empty() => PathBuf::from(dir).join(out),
        _ => out.clone(),
    }
}

fn emit(report: &Report, cli: &Cli) -> Result<(), Failure> {
    let bytes = report
        .render(cli.format)
        .map_err(|e| Failure::Output(format!("cannot encode CSV: {e}")))?;
    match &cli.out {
        Some(out) => {
            let path = destination(out);
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent)
                    .map_err(|e| Failure::Output(format!("cannot create {}: {e}", parent.display())))?;
            }
            std::fs::write(&path, bytes).map_err(|e| Failure::Output(format!("cannot write {}: {e}", path.display())))?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(&bytes)
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Output(format!("cannot write to stdout: {e}")))?;
        }
    }
    if let Some(summary) = report.summary_json() {
        eprintln!("{summary}");
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let report = match &cli.command {
        Command::Partner(args) => commands::partner(args)?,
        Command::Deform(args) => commands::deform(args)?,
        Command::Spectrum(args) => commands::spectrum(args)?,
        Command::Box(args) => commands::quantized_box(args)?,
        Command::Scan(args) => commands::scan(args)?,
        Command::Verify => {
            let report = commands::verify();
            emit(&report, cli)?;
            let all_passed = report.rows.iter().all(|row| row[2] == output::Cell::Bool(true));
            return Ok(all_passed);
        }
    };
    emit(&report, cli)?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report_failure(&Failure::Invalid(e.render().to_string().trim_end().to_string())),
    };
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        // a failed invariant check is a numerical failure
        Ok(false) => ExitCode::from(2),
        Err(failure) => report_failure(&failure),
    }
}
