//! Front end for the `hopf` binary: sources, commands and output.

pub mod commands;
pub mod document;
pub mod render;
pub mod source;

use anyhow::{bail, Result};

pub use commands::{Quantity, Theorem};
pub use document::{AlgebraDocument, FiniteSource};
pub use render::Outcome;
pub use source::{load, Loaded, Settings};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Request {
    Verify,
    Compute { what: Option<Quantity>, emit_document: bool },
    Check(Theorem),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Format {
    pub json: bool,
    /// Seconds since the epoch to stamp on the output, if any.
    pub timestamp: Option<u64>,
}

/// What to print and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

/// Runs one request. `Err` means bad input (exit code 2).
pub fn execute(request: Request, source: &str, settings: &Settings, format: Format) -> Result<Output> {
    let loaded = load(source, settings)?;
    let (command, reports) = match request {
        Request::Verify => ("verify".to_string(), commands::verify(&loaded)?),
        Request::Compute { emit_document: true, .. } => {
            let Loaded::Finite(src) = &loaded else {
                bail!("{source}: only finite-dimensional sources have a document form");
            };
            let mut text = AlgebraDocument::emit(src).to_json();
            text.push('\n');
            return Ok(Output { stdout: text, code: 0 });
        }
        Request::Compute { what: Some(q), .. } => (format!("compute {}", commands::name_of(&q)), vec![commands::compute(&loaded, q)?]),
        Request::Compute { what: None, .. } => bail!("compute: name a quantity or pass --emit-document"),
        Request::Check(t) => (format!("check {}", commands::name_of(&t)), vec![commands::check(&loaded, t)?]),
    };
    let outcome = Outcome { command, source: source.to_string(), reports };
    let stdout = match (format.json, request) {
        (true, _) => {
            let mut s = outcome.to_json(format.timestamp);
            s.push('\n');
            s
        }
        (false, Request::Compute { .. }) => outcome.to_compact_text(format.timestamp),
        (false, _) => outcome.to_text(format.timestamp),
    };
    Ok(Output { stdout, code: outcome.exit_code() })
}
