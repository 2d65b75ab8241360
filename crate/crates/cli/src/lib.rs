//! File formats and command-line front end for `ttgeom-core`.

pub mod app;
pub mod dot;
pub mod format;
pub mod json;

pub use app::{run, Cli, Outcome};
pub use format::{parse_system, write_system, ParseError};
pub use json::load_system;
