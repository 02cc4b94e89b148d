//! Input files, the computation pipeline and the report.

mod parse;
mod report;
mod run;

pub use parse::{parse_input, write_input};
pub use report::write_report;
pub use run::{run, Goals, HsopReport, Outcome, Report, RunConfig, TriangulationReport};
