//! Command-line front end for `quasiprob-core`: JSON workspaces, commands
//! and report rendering.

pub mod cli;
pub mod report;
pub mod workspace;

pub use cli::{run, run_with, Cli, CliError, Command};
pub use report::{Format, Report};
pub use workspace::{LoadError, Workspace};
