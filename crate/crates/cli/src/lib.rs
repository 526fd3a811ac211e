//! Parser and verification tasks behind the `qgrass` binary.

pub mod parse;
pub mod tasks;

pub use parse::{parse_expression, parse_indices, ParseError};
pub use tasks::{run_all, run_task, Conv, Mode, Params, Report, Task};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] qgrass_core::Error),
    #[error("{0}")]
    Usage(String),
}
