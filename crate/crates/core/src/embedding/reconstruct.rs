//! Undo a reduction trace on the embedding of the final wheel.

use super::Skeleton;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::rules::{EditRecord, XwMatch};

/// Rebuilds the skeleton of the input graph from the wheel the reduction
/// ended in and the edit records in the order they were applied.
///
/// The wheel's labelling fixes the graph but not its embedding, so each
/// embedding of the wheel is tried as a starting point.
///
/// Each `SR` is undone by splitting its target, each `CR` by inserting a cube
/// into the face whose diagonals it created. Both choices are forced by the
/// record up to one local ambiguity, which is settled by comparing the
/// resulting neighbourhood with the record.
pub fn reconstruct(trace: &[EditRecord], xw: &XwMatch, id_bound: usize) -> Result<Skeleton> {
    let mut last = Error::Replay("no wheel labelling");
    for start in xw.variants() {
        match replay(trace, start.skeleton(id_bound)) {
            Ok(s) => return Ok(s),
            Err(e) => last = e,
        }
    }
    Err(last)
}

fn replay(trace: &[EditRecord], mut s: Skeleton) -> Result<Skeleton> {
    for rec in trace.iter().rev() {
        match *rec {
            EditRecord::Sr {
                center,
                target,
                chord,
                attached,
            } => undo_sr(&mut s, center, target, chord, attached)?,
            EditRecord::Cr { inner, outer } => undo_cr(&mut s, inner, outer)?,
        }
    }
    Ok(s)
}

fn same_set<const N: usize>(mut a: [VertexId; N], mut b: [VertexId; N]) -> bool {
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

fn undo_sr(
    s: &mut Skeleton,
    center: VertexId,
    target: VertexId,
    chord: [VertexId; 2],
    attached: [VertexId; 3],
) -> Result<()> {
    // The arc to x1 sits between the arcs to the chord ends; x2 and x6 are
    // the opposite corners of the two faces beside it.
    let site = s.arcs(target).find(|&m| {
        let (p, q) = (s.rot_prev(m), s.rot_next(m));
        same_set([s.head(p), s.head(q)], chord)
            && same_set([s.head(m), s.opposite(p), s.opposite(m)], attached)
    });
    let m = site.ok_or(Error::Replay("no split site matches a star record"))?;
    s.split(m, center)
}

fn undo_cr(s: &mut Skeleton, inner: [VertexId; 4], outer: [VertexId; 4]) -> Result<()> {
    let [v1, v2, v3, v4] = outer;
    let f = s
        .arcs(v1)
        .find(|&a| {
            let face = s.face(a);
            face[2] == v3 && same_set([face[1], face[3]], [v2, v4])
        })
        .ok_or(Error::Replay("no face carries the diagonals of a cube record"))?;
    let [x1, x2, x3, x4] = inner;
    let xs = if s.head(f) == v2 {
        [x1, x2, x3, x4]
    } else {
        [x1, x4, x3, x2]
    };
    s.insert_cube(f, xs)
}
