//! Command-line front end: the presentation and cover file formats, job
//! descriptions and report emission.

pub mod commands;
pub mod cover;
pub mod format;
pub mod job;
pub mod report;
pub mod run;

pub use format::{emit_dgc, parse_dgc, InputError};
pub use job::JobSpec;
pub use run::{run_job, Outcome};
