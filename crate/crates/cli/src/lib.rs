//! File formats, benchmarks and command plumbing for the `optimal1p` tool.

pub mod bench;
pub mod formats;
pub mod manifest;

pub use formats::{Format, ParseError};
