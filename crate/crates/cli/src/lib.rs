//! Library half of the `uqrm` command-line tool: subcommand implementations,
//! the embedded expected-values manifest, and the acceptance checks.

pub mod checks;
pub mod commands;
pub mod manifest;
