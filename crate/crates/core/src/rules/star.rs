//! The `SR` rule: merge a candidate into one of its crossing neighbours.
//!
//! The left-hand side is the crossed star: a center `x`, a ring
//! `x1..x6`, black neighbours `x1, x3, x5` forming a triangle of crossing
//! edges, and red neighbours `x2, x4, x6`. `SR(x -> x4)` removes `x` and the
//! edge `(x3, x5)` and joins `x4` to `x1, x2, x6`.

use arrayvec::ArrayVec;

use super::{Classification, EditRecord};
use crate::graph::{DynamicGraph, EdgeKey, Neighborhood, VertexId};
use crate::Result;

/// `SR(center -> target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrReduction {
    pub center: VertexId,
    pub target: VertexId,
    /// The two black neighbours of the target on the ring (`x3`, `x5`).
    pub chord: [VertexId; 2],
    /// The ring vertices the target gets joined to (`x1`, `x2`, `x6`).
    pub attached: [VertexId; 3],
    assoc: [EdgeKey; 5],
    assoc_len: u8,
}

impl SrReduction {
    /// Edges from the target to the other red neighbours of the center.
    /// Usually two; more when the ring admits several crossed-star matchings.
    pub fn associated(&self) -> &[EdgeKey] {
        &self.assoc[..self.assoc_len as usize]
    }
}

// A crossed-star matching of the ring, by member index (1..=6).
#[derive(Default, Clone, Copy)]
struct TargetInfo {
    seen: bool,
    chord: u8,
    attached: u8,
    consistent: bool,
    black: bool,
    others: u8,
}

/// Every `SR` reduction at the center of `nb`, one per possible target.
pub fn sr_targets(g: &DynamicGraph, nb: &Neighborhood) -> ArrayVec<(SrReduction, Classification), 6> {
    let mut info = [TargetInfo::default(); 7];
    let adj = |a: u8, b: u8| nb.adjacent(a as usize, b as usize);

    for i in 1..=6u8 {
        for j in i + 1..=6 {
            if !adj(i, j) {
                continue;
            }
            for k in j + 1..=6 {
                if !adj(i, k) || !adj(j, k) {
                    continue;
                }
                let black = [i, j, k];
                let mut red = [0u8; 3];
                let mut r = 0;
                for v in 1..=6u8 {
                    if v != i && v != j && v != k {
                        red[r] = v;
                        r += 1;
                    }
                }
                for perm in PERMS {
                    let in_gap = |t: usize| red[perm[t]];
                    let fits = (0..3).all(|t| {
                        let v = in_gap(t);
                        adj(v, black[t]) && adj(v, black[(t + 1) % 3])
                    });
                    if !fits {
                        continue;
                    }
                    for t in 0..3 {
                        let target = in_gap(t);
                        let opposite = black[(t + 2) % 3];
                        let chord = bit(black[t]) | bit(black[(t + 1) % 3]);
                        let others = bit(in_gap((t + 1) % 3)) | bit(in_gap((t + 2) % 3));
                        let attached = others | bit(opposite);
                        let slot = &mut info[target as usize];
                        if !slot.seen {
                            *slot = TargetInfo {
                                seen: true,
                                chord,
                                attached,
                                consistent: true,
                                black: false,
                                others: 0,
                            };
                        } else if slot.chord != chord || slot.attached != attached {
                            slot.consistent = false;
                        }
                        slot.black |= adj(target, opposite);
                        slot.others |= others;
                    }
                }
            }
        }
    }

    let mut out = ArrayVec::new();
    for (t, slot) in info.iter().enumerate().skip(1) {
        if !slot.seen {
            continue;
        }
        let target = nb.member(t);
        let mut assoc = [EdgeKey::new(0, 0); 5];
        let mut assoc_len = 0u8;
        let mut present = 0u8;
        for o in members(slot.others) {
            if nb.adjacent(t, o) {
                present |= 1 << assoc_len;
            }
            assoc[assoc_len as usize] = EdgeKey::new(target, nb.member(o));
            assoc_len += 1;
        }
        let mut chord = [0; 2];
        for (c, m) in chord.iter_mut().zip(members(slot.chord)) {
            *c = nb.member(m);
        }
        let mut attached = [0; 3];
        for (a, m) in attached.iter_mut().zip(members(slot.attached)) {
            *a = nb.member(m);
        }
        let class = if slot.black {
            Classification::BlockedBlack
        } else if present != 0 {
            Classification::BlockedRed(present)
        } else if !slot.consistent || chord.iter().any(|&c| g.degree(c) < 8) {
            Classification::BlockedVertex
        } else {
            Classification::Good
        };
        out.push((
            SrReduction {
                center: nb.center,
                target,
                chord,
                attached,
                assoc,
                assoc_len,
            },
            class,
        ));
    }
    out
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

#[inline]
fn bit(member: u8) -> u8 {
    1 << member
}

fn members(mask: u8) -> impl Iterator<Item = usize> {
    (1..=6).filter(move |&i| mask & (1 << i) != 0)
}

/// Applies `SR(center -> target)`: `n` drops by 1 and `m` by 4.
pub fn apply_sr(g: &mut DynamicGraph, r: &SrReduction) -> Result<EditRecord> {
    g.remove_vertex(r.center)?;
    g.remove_edge(r.chord[0], r.chord[1])?;
    for &a in &r.attached {
        g.add_edge(r.target, a)?;
    }
    Ok(EditRecord::Sr {
        center: r.center,
        target: r.target,
        chord: r.chord,
        attached: r.attached,
    })
}
