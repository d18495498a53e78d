//! snipforge: mutate Java code snippets with single line- or statement-level
//! edits and measure how the edits remove, preserve, or attract performance
//! lint violations.
//!
//! The pipeline: ingest raw snippets ([`corpus`]), parse them into statement
//! trees ([`syntax`]), sample random single edits ([`edits`], [`sampler`]),
//! analyze originals and patched variants against the performance rule
//! catalog ([`rules`]), and aggregate the violation deltas ([`report`]).
//! [`cli`] ties the stages together behind the `snipforge` binary.

pub mod cli;
pub mod corpus;
pub mod edits;
pub mod report;
pub mod rules;
pub mod sampler;
pub mod syntax;
