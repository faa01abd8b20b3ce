//! Command-line front end: input files, the staged pipeline, reports and the
//! bundled corpus.

pub mod corpus;
pub mod format;
pub mod pipeline;
pub mod report;
