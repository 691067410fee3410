//! File format, rendering and command implementations behind the `bieval`
//! binary.

pub mod app;
pub mod format;
pub mod render;

pub use app::{run, Cli, CliError};
pub use format::{parse_biclustering, serialize, Document, FormatError, Record};
