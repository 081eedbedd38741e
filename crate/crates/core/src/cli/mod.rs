//! Spec-file driven command pipeline behind the `invcx` binary.

pub mod report;
mod run;
pub mod spec;

pub use run::{run, run_text, Command, Options, Outcome};
pub use spec::{parse, resolve, J1Choice, Problem, ProblemSpec};

use crate::error::Error;

/// Process exit codes.
pub mod exit {
    pub const YES: u8 = 0;
    pub const NO: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const THEOREM: u8 = 3;
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {0}")]
    Io(String),

    #[error("parse error at {path}{}: {message}", location(*.line))]
    Parse {
        path: String,
        /// `(line, column)` when the JSON reader knows it.
        line: Option<(usize, usize)>,
        message: String,
    },

    #[error("validation error: {0}")]
    Validation(String),

    #[error(transparent)]
    Math(#[from] Error),
}

fn location(at: Option<(usize, usize)>) -> String {
    at.map(|(l, c)| format!(" (line {l}, column {c})"))
        .unwrap_or_default()
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io(_) => "IoError",
            CliError::Parse { .. } => "ParseError",
            CliError::Validation(_) => "ValidationError",
            CliError::Math(Error::TheoremViolation(_)) => "TheoremViolation",
            CliError::Math(_) => "MathError",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(Error::TheoremViolation(_)) => exit::THEOREM,
            _ => exit::INPUT,
        }
    }
}
