//! Command-line plumbing for `balanced-core`: spec files, the bundled
//! regression fixtures, property checks and report rendering.

pub mod checks;
mod error;
pub mod render;
pub mod spec_file;
pub mod table2;

pub use error::CliError;
