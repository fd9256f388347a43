//! Command-line front end and record format for `fsum-core`.

pub mod args;
pub mod cli;
pub mod record;

pub use cli::{run, Cli, CliError, Command, Outcome};
pub use record::{Format, OutputRecord};
