//! Graph and embedding text formats.
//!
//! * edgelist: header `n m`, then one 0-indexed `u v` pair per line.
//! * graph6: the standard printable encoding, optionally with the
//!   `>>graph6<<` header.
//! * rotation: an embedding as `v: u1 u2 ... uk` lines plus
//!   `cross: (a,b)x(c,d)` lines.
//! * dot: output only, for looking at small embeddings.
//! * trace: output only, the reductions of a run.

use std::path::Path;

use optimal1p::DynamicGraph;

pub mod dot;
pub mod edgelist;
pub mod graph6;
pub mod rotation;
pub mod trace;

/// A parse failure with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

impl Format {
    /// Guesses from the extension: `.g6` and `.graph6` are graph6,
    /// anything else an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => Format::Graph6,
            _ => Format::Edgelist,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Format::Edgelist => "edgelist",
            Format::Graph6 => "graph6",
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Edgelist => "edges",
            Format::Graph6 => "g6",
        }
    }

    pub fn parse(self, text: &str) -> Result<DynamicGraph, ParseError> {
        match self {
            Format::Edgelist => edgelist::parse(text),
            Format::Graph6 => graph6::parse(text),
        }
    }

    /// Serializes with vertices renumbered to `0..n` in id order.
    pub fn write(self, g: &DynamicGraph) -> String {
        match self {
            Format::Edgelist => edgelist::write(g),
            Format::Graph6 => graph6::write(g),
        }
    }
}
