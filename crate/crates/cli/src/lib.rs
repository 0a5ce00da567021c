//! Command line front end: workspace documents in, reports out.

pub mod commands;
pub mod workspace;

pub use commands::{ExitStatus, Outcome, Selector};
pub use workspace::{parse_workspace, InputError, Workspace};
