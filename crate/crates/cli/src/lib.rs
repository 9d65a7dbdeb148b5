//! Library side of the `subcode` command-line tool: file formats, the
//! built-in reference fixtures, the verification harness, and the clap
//! surface. The binary in `main.rs` is a thin wrapper so that integration
//! tests can drive everything in-process.

pub mod app;
pub mod fixtures;
pub mod format;
pub mod harness;
