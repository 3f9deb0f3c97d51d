//! Command-line front end: ideal parsing, classification reports, corpus
//! verification and exhaustive suites.

pub mod app;
pub mod corpus;
pub mod enumerate;
pub mod parse;
pub mod report;
pub mod soundness;

pub use app::{run, Cli, CliError, Output};
