//! Command-line front end: expression parsing, printing and command dispatch.

pub mod commands;
pub mod error;
pub mod parse;
pub mod print;

pub use commands::{execute, run, Cli, Command, Report};
pub use error::CliError;
