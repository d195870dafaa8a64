//! Front end shared by the `weyl` binary and its tests.

pub mod args;
pub mod error;
pub mod report;
mod run;

pub use args::{Format, RunConfig};
pub use error::{CliError, Result};
pub use run::{run, Outcome};
