//! File formats, verification suites and the command-line front end for
//! [`csl_core`].

pub mod cli;
pub mod closure;
mod error;
pub mod formats;
pub mod names;
pub mod oracle;
pub mod sampling;
pub mod suites;
pub mod table;

pub use error::CliError;
