//! Module-specification files, the construction pipeline, and report
//! rendering for the `wlp` command-line tool.

pub mod build;
pub mod report;
pub mod run;
pub mod spec;

pub use run::{run_check, CheckOptions, Exit};
pub use spec::{parse_spec, ModuleExpr, ModuleSpec};
