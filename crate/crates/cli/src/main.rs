//! Command-line front end: run a job file or a built-in fixture.

mod job;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use gaquot::catalog;
use serde_json::json;

use job::{Command, Format, Job, EXIT_INPUT_ERROR, SCHEMA_VERSION};

#[derive(Parser, Debug)]
#[command(name = "gaquot", version, about = "Classify quotients of G_a-invariant hypersurfaces")]
struct Cli {
    /// Job file (JSON).
    #[arg(long, conflicts_with = "export_fixture")]
    job: Option<PathBuf>,
    /// Built-in fixture, or `family-phi(<expr>)`.
    #[arg(long)]
    fixture: Option<String>,
    /// Command to run; overrides the job file.
    #[arg(long, value_enum)]
    command: Option<Command>,
    /// Largest power tried in the localized-quotient search.
    #[arg(long)]
    kmax: Option<u32>,
    /// Degree bound of the slice search.
    #[arg(long)]
    slice_deg: Option<u32>,
    /// Degree bound of the kernel generator search.
    #[arg(long)]
    inv_deg: Option<u32>,
    /// Output format; overrides the job file.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Print a self-contained job file for a fixture and exit.
    #[arg(long, value_name = "NAME")]
    export_fixture: Option<String>,
    /// First and second phi for `family-compare`.
    #[arg(long, num_args = 2, value_names = ["PHI1", "PHI2"])]
    phi: Option<Vec<String>>,
}

fn fail(format: Format, field: &str, message: &str) -> ExitCode {
    match format {
        Format::Text => eprintln!("error: {field}: {message}"),
        Format::Structured => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schemaVersion": SCHEMA_VERSION,
                "error": { "field": field, "message": message },
                "exitCode": EXIT_INPUT_ERROR,
            }))
            .unwrap()
        ),
    }
    ExitCode::from(EXIT_INPUT_ERROR as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT_ERROR as u8) } else { ExitCode::SUCCESS };
        }
    };
    let format_hint = cli.format.unwrap_or_default();

    if let Some(name) = &cli.export_fixture {
        return match catalog::fixture(name) {
            Ok(fx) => {
                println!("{}", serde_json::to_string_pretty(&job::export_fixture(&fx)).unwrap());
                ExitCode::SUCCESS
            }
            Err(e) => fail(format_hint, "fixture", &e.to_string()),
        };
    }

    let mut job = match &cli.job {
        Some(path) => {
            let src = match std::fs::read_to_string(path) {
                Ok(s) => s,
                Err(e) => return fail(format_hint, "job", &format!("{}: {e}", path.display())),
            };
            match serde_json::from_str::<Job>(&src) {
                Ok(j) => j,
                Err(e) => return fail(format_hint, "job", &e.to_string()),
            }
        }
        None => match (cli.command, &cli.fixture) {
            (Some(c), _) => Job::new(c),
            (None, Some(_)) => Job::new(Command::Classify),
            (None, None) => return fail(format_hint, "job", "give --job, --fixture or --command"),
        },
    };
    if let Some(c) = cli.command {
        job.command = c;
    }
    if cli.fixture.is_some() {
        job.fixture = cli.fixture.clone();
    }
    if let Some(k) = cli.kmax {
        job.bounds.kmax = k;
    }
    if let Some(d) = cli.slice_deg {
        job.bounds.slice_deg = d;
    }
    if let Some(d) = cli.inv_deg {
        job.bounds.invariant_deg = d;
    }
    if let Some(f) = cli.format {
        job.output = f;
    }
    if cli.phi.is_some() {
        job.phi = cli.phi.clone();
    }

    match job::run(&job) {
        Ok(out) => {
            match job.output {
                Format::Text => print!("{}", out.text),
                Format::Structured => {
                    println!("{}", serde_json::to_string_pretty(&out.structured).unwrap())
                }
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => fail(job.output, e.field, &e.error.to_string()),
    }
}
