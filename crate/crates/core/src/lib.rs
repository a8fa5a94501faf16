//! Recognition of optimal 1-planar graphs.
//!
//! An optimal 1-planar graph has `4n - 8` edges and a drawing in which every
//! edge is crossed at most once. Such a graph is a planar 3-connected
//! quadrangulation (the black skeleton) with a crossing pair of red edges in
//! every face. This crate recognizes them in linear time by reducing the
//! input with two local rewrite rules until an extended wheel graph remains:
//!
//! * `SR` merges a degree-6 vertex into one of its crossing neighbours,
//! * `CR` removes the inner 4-cycle of a crossed cube and leaves a kite.
//!
//! The crate is `no_std` and only needs `alloc`. Parsing, file formats and
//! the command line live in the companion `optimal1p-cli` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod embedding;
pub mod engine;
pub mod error;
pub mod generator;
pub mod graph;
pub mod rules;

pub use embedding::{reconstruct, verify_embedding, Color, EmbeddedGraph, Skeleton, Violation};
pub use engine::{
    recognize_5connected, recognize_linear, recognize_quadratic, recognize_with, Algorithm,
    Failure, Options, RecognitionResult, Stats, WorkOrder,
};
pub use error::{Error, Result};
pub use generator::{
    canonical_form, enumerate, enumerate_graphs, expand_cr, expand_sr, mutate_2switch,
    random_optimal, random_optimal_with, reduce_step, CanonicalForm, ExpansionKind,
    ExpansionStep, GeneratedGraph, Mix,
};
pub use graph::{precheck, DegreeVector, DynamicGraph, EdgeKey, Neighborhood, VertexId};
pub use rules::{detect_xw, make_xw, Classification, EditRecord, Reduction, XwMatch};
