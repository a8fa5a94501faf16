//! Rescan baseline: after every step, look at all candidates again.

use alloc::vec::Vec;

use super::{conserved, touched, Failure, Options, Run, Stats};
use crate::graph::{DynamicGraph, VertexId};
use crate::rules::{self, classify, EditRecord};

pub(super) fn run(g: &mut DynamicGraph, opts: &Options) -> Run {
    let mut stats = Stats::default();
    let mut trace = Vec::new();
    let failure = 'outer: loop {
        let mut applied = None;
        for x in 0..g.id_bound() as VertexId {
            if !g.is_live(x) || g.degree(x) != 6 {
                continue;
            }
            stats.candidates_scanned += 1;
            match classify(g, x) {
                Err(rej) => {
                    break 'outer Some(Failure::DegreeVector {
                        center: rej.center,
                        degree_vector: rej.degree_vector,
                    })
                }
                Ok(Some(report)) => {
                    if let Some(r) = report.first_good() {
                        applied = Some(r);
                        break;
                    }
                }
                Ok(None) => {}
            }
        }
        let Some(r) = applied else {
            break None;
        };
        let rec = match rules::apply(g, &r) {
            Ok(rec) => rec,
            Err(e) => break Some(Failure::Fault(e)),
        };
        match rec {
            EditRecord::Sr { .. } => stats.applied_sr += 1,
            EditRecord::Cr { .. } => stats.applied_cr += 1,
        }
        let ok = if opts.check_invariants {
            g.m() + 8 == 4 * g.n() && g.vertices().all(|v| g.degree(v) % 2 == 0 && g.degree(v) >= 6)
        } else {
            conserved(g, &touched(&rec))
        };
        if !ok {
            stats.conservation_violations += 1;
        }
        trace.push(rec);
    };
    Run {
        trace,
        stats,
        failure,
    }
}
