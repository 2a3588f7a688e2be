//! Command line front end: element rendering, the golden tables and the
//! `verify-paper` battery.

pub mod checks;
pub mod expr;
pub mod golden;
pub mod report;
pub mod render;
pub mod cli;

pub use cli::{run, verify_report, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
