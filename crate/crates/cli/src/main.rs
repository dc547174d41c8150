use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, Result};
use clap::{Args, Parser, Subcommand};
use hopf_cli::{execute, Format, Quantity, Request, Settings, Theorem};
use hopf_kernel::{Field, Scalar};

/// Exact verification of Hopf-algebra identities.
#[derive(Parser)]
#[command(name = "hopf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every applicable suite.
    Verify {
        source: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Print one named quantity.
    Compute {
        source: String,
        what: Option<Quantity>,
        /// Print the source as an algebra document instead.
        #[arg(long)]
        emit_document: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run one theorem check.
    Check {
        source: String,
        theorem: Theorem,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    /// Parameter of the sweedler4 R-matrix family.
    #[arg(long, default_value = "1")]
    xi: String,
    /// Window |i| ≤ N for the laurent preset.
    #[arg(long, default_value_t = hopf_cli::source::DEFAULT_WINDOW)]
    window: i64,
    #[arg(long)]
    json: bool,
    /// Work over F_p instead of the rationals.
    #[arg(long)]
    field: Option<u64>,
    /// Stamp the output with the current time.
    #[arg(long)]
    timestamps: bool,
}

fn settings(o: &Opts) -> Result<Settings> {
    let xi: Scalar = o.xi.parse().map_err(|_| anyhow!("--xi: {:?} is not an exact rational", o.xi))?;
    let field = o.field.map(|p| Field::prime(p).map_err(|e| anyhow!("--field: {e}"))).transpose()?;
    Ok(Settings { xi, window: o.window, field })
}

fn run(cli: Cli) -> Result<hopf_cli::Output> {
    let (request, source, opts) = match cli.command {
        Command::Verify { source, opts } => (Request::Verify, source, opts),
        Command::Compute { source, what, emit_document, opts } => (Request::Compute { what, emit_document }, source, opts),
        Command::Check { source, theorem, opts } => (Request::Check(theorem), source, opts),
    };
    let timestamp = opts.timestamps.then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    execute(request, &source, &settings(&opts)?, Format { json: opts.json, timestamp })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
