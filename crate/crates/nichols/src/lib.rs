//! Instance files, reports and the command-line front end for `nichols-core`.

pub mod cli;
pub mod parser;
pub mod report;
pub mod suites;

pub use parser::{parse_instance, Diagnostic, DiagnosticKind, Expr, InstanceSpec};
pub use report::{Doc, Field, Format};
