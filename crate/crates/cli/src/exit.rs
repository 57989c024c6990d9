//! Process exit codes and the error type that carries them.

use std::fmt;

use locdom::Error;

pub const OK: u8 = 0;
pub const VERIFICATION_FAILED: u8 = 1;
pub const PARSE_ERROR: u8 = 2;
pub const PRECONDITION: u8 = 3;
pub const INVARIANT: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(message: String) -> Self {
        CliError {
            code: PARSE_ERROR,
            message,
        }
    }

    pub fn precondition(message: String) -> Self {
        CliError {
            code: PRECONDITION,
            message,
        }
    }

    /// A library error, prefixed with where it happened.
    pub fn from_core(context: &str, e: Error) -> Self {
        let code = match e {
            Error::Graph6(_) => PARSE_ERROR,
            Error::InvariantViolated(_) => INVARIANT,
            _ => PRECONDITION,
        };
        CliError {
            code,
            message: format!("{context}: {e}"),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            code: INVARIANT,
            message: format!("output error: {e}"),
        }
    }
}
