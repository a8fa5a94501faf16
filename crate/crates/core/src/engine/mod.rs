//! Recognition drivers.
//!
//! [`recognize_linear`] runs the list-bank algorithm, [`recognize_quadratic`]
//! rescans every candidate after each step and serves as the oracle, and
//! [`recognize_5connected`] additionally rejects graphs with a separating
//! 4-cycle.
//! Every run that reaches an extended wheel graph replays its trace into an
//! embedding of the input and verifies it before accepting.

use alloc::vec::Vec;
use core::fmt;

use crate::embedding::{reconstruct, verify_embedding, Skeleton, Violation};
use crate::error::Error;
use crate::graph::{precheck_failure, DegreeVector, DynamicGraph, PrecheckFailure, VertexId};
use crate::rules::{detect_xw, EditRecord, XwMatch};

mod bank;
mod linear;
mod quadratic;

pub use bank::WorkOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    #[default]
    Linear,
    Quadratic,
    /// Accepts exactly the 5-connected graphs of the class.
    ///
    /// Restricting the linear engine to `SR` is not enough: an `SR` applied
    /// to a 5-connected graph can create a separating 4-cycle, after which
    /// only `CR` makes progress. So the full reduction runs, and the
    /// certified skeleton is then checked for a separating 4-cycle, which
    /// exists iff the graph has a 4-vertex cut.
    FiveConnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub algorithm: Algorithm,
    pub order: WorkOrder,
    /// Replay the trace and verify the embedding before accepting.
    pub certify: bool,
    /// Check edge count, degrees and list invariants after every step.
    /// Quadratic in the input size; meant for tests.
    pub check_invariants: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            algorithm: Algorithm::Linear,
            order: WorkOrder::Stack,
            certify: true,
            check_invariants: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub applied_sr: u64,
    pub applied_cr: u64,
    /// Entries taken from a `GOOD` list whose reduction did not apply.
    pub unsuccessful: u64,
    pub renames: u64,
    /// Reductions parked in `WAIT` without any present blocking edge.
    pub vertex_blocks: u64,
    /// Steps after which `m = 4n - 8` or the degree condition failed.
    pub conservation_violations: u64,
    /// Steps after which a list-bank invariant failed.
    pub bank_violations: u64,
    pub candidates_scanned: u64,
}

impl Stats {
    pub fn applied(&self) -> u64 {
        self.applied_sr + self.applied_cr
    }
}

/// Why a graph was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Precheck(PrecheckFailure),
    /// A candidate has a degree vector no optimal 1-planar graph has.
    DegreeVector {
        center: VertexId,
        degree_vector: DegreeVector,
    },
    /// No reduction applies and the remaining graph is no extended wheel.
    Irreducible { n: usize, m: usize },
    /// The remaining graph broke the edge-count invariant.
    EdgeCount { n: usize, m: usize },
    /// The graph is optimal 1-planar but has this 4-vertex cut.
    SeparatingCycle([VertexId; 4]),
    /// The trace could not be replayed into an embedding.
    Replay(Error),
    Embedding(Violation),
    Fault(Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Precheck(p) => write!(f, "{p}"),
            Failure::DegreeVector {
                center,
                degree_vector,
            } => write!(f, "candidate {center} has inadmissible degree vector {degree_vector:?}"),
            Failure::Irreducible { n, m } => write!(
                f,
                "irreducible: no reduction applies to the remaining graph (n={n}, m={m}) and it is no extended wheel"
            ),
            Failure::EdgeCount { n, m } => write!(f, "edge count broken during reduction (n={n}, m={m})"),
            Failure::SeparatingCycle(c) => write!(
                f,
                "not 5-connected: separating 4-cycle ({}, {}, {}, {})",
                c[0], c[1], c[2], c[3]
            ),
            Failure::Replay(e) => write!(f, "embedding replay failed: {e}"),
            Failure::Embedding(v) => write!(f, "embedding check failed: {v}"),
            Failure::Fault(e) => write!(f, "edit fault: {e}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RecognitionResult {
    pub accepted: bool,
    /// The wheel the reduction ended in.
    pub final_xw: Option<XwMatch>,
    pub trace: Vec<EditRecord>,
    pub stats: Stats,
    pub failure: Option<Failure>,
    /// Skeleton of the input's embedding, when certified.
    pub skeleton: Option<Skeleton>,
}

impl RecognitionResult {
    pub fn final_k(&self) -> Option<usize> {
        self.final_xw.as_ref().map(|m| m.k)
    }

    fn reject(trace: Vec<EditRecord>, stats: Stats, failure: Failure) -> Self {
        RecognitionResult {
            accepted: false,
            final_xw: None,
            trace,
            stats,
            failure: Some(failure),
            skeleton: None,
        }
    }
}

pub fn recognize_linear(g: &DynamicGraph) -> RecognitionResult {
    recognize_with(g, &Options::default())
}

pub fn recognize_quadratic(g: &DynamicGraph) -> RecognitionResult {
    recognize_with(
        g,
        &Options {
            algorithm: Algorithm::Quadratic,
            ..Options::default()
        },
    )
}

pub fn recognize_5connected(g: &DynamicGraph) -> RecognitionResult {
    recognize_with(
        g,
        &Options {
            algorithm: Algorithm::FiveConnected,
            ..Options::default()
        },
    )
}

pub fn recognize_with(g: &DynamicGraph, opts: &Options) -> RecognitionResult {
    if let Some(p) = precheck_failure(g) {
        return RecognitionResult::reject(Vec::new(), Stats::default(), Failure::Precheck(p));
    }
    let mut work = g.clone();
    let run = match opts.algorithm {
        Algorithm::Linear | Algorithm::FiveConnected => linear::run(&mut work, opts),
        Algorithm::Quadratic => quadratic::run(&mut work, opts),
    };
    let (trace, stats) = (run.trace, run.stats);
    if let Some(f) = run.failure {
        return RecognitionResult::reject(trace, stats, f);
    }
    let Some(xw) = detect_xw(&work) else {
        return RecognitionResult::reject(
            trace,
            stats,
            Failure::Irreducible {
                n: work.n(),
                m: work.m(),
            },
        );
    };
    let five = opts.algorithm == Algorithm::FiveConnected;
    let mut skeleton = None;
    if opts.certify || five {
        let s = match reconstruct(&trace, &xw, g.id_bound()) {
            Ok(s) => s,
            Err(e) => return RecognitionResult::reject(trace, stats, Failure::Replay(e)),
        };
        if let Err(v) = verify_embedding(g, &s.to_embedded()) {
            return RecognitionResult::reject(trace, stats, Failure::Embedding(v));
        }
        if five {
            if let Some(c) = s.separating_4cycle() {
                return RecognitionResult::reject(trace, stats, Failure::SeparatingCycle(c));
            }
        }
        skeleton = Some(s);
    }
    RecognitionResult {
        accepted: true,
        final_xw: Some(xw),
        trace,
        stats,
        failure: None,
        skeleton,
    }
}

// Outcome of the reduction phase.
struct Run {
    trace: Vec<EditRecord>,
    stats: Stats,
    failure: Option<Failure>,
}

// Edge count and degree parity after a step.
fn conserved(g: &DynamicGraph, touched: &[VertexId]) -> bool {
    g.m() + 8 == 4 * g.n()
        && touched
            .iter()
            .filter(|&&v| g.is_live(v))
            .all(|&v| g.degree(v) % 2 == 0 && g.degree(v) >= 6)
}

fn touched(rec: &EditRecord) -> Vec<VertexId> {
    match *rec {
        EditRecord::Sr {
            target,
            chord,
            attached,
            ..
        } => {
            let mut v = Vec::from(attached);
            v.extend(chord);
            v.push(target);
            v
        }
        EditRecord::Cr { outer, .. } => Vec::from(outer),
    }
}
