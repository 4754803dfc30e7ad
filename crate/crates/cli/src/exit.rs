use std::fmt::Display;

use acsep_core::Error;

pub const FAILED: u8 = 1;
pub const USAGE: u8 = 2;
pub const PARSE: u8 = 3;
pub const ORACLE_CAP: u8 = 4;

/// An error with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Display) -> Self {
        Failure { code, message: message.to_string() }
    }

    pub fn usage(message: impl Display) -> Self {
        Failure::new(USAGE, message)
    }

    pub fn with_context(mut self, context: &str) -> Self {
        self.message = format!("{context}: {}", self.message);
        self
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => PARSE,
            Error::OracleCap { .. } => ORACLE_CAP,
            _ => FAILED,
        };
        Failure::new(code, e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(FAILED, e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::new(FAILED, e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::new(FAILED, e)
    }
}
