//! The `CR` rule: remove the inner 4-cycle of a crossed cube.
//!
//! In a crossed cube the inner vertices `x1..x4` are mutually adjacent and
//! each one misses exactly one outer vertex: `x_i` misses `v_{i+2}`. The
//! rewrite deletes the inner vertices and inserts the outer diagonals
//! `(v1, v3)` and `(v2, v4)`, which become the crossing pair of a kite.

use super::{Classification, EditRecord};
use crate::graph::{DynamicGraph, EdgeKey, Neighborhood, VertexId};
use crate::Result;

/// `CR(x1, x2, x3, x4)` with outer cycle `(v1, v2, v3, v4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrReduction {
    /// `inner[i]` is adjacent to `outer[i]`, `outer[i+1]`, `outer[i-1]`.
    pub inner: [VertexId; 4],
    pub outer: [VertexId; 4],
    assoc: [EdgeKey; 2],
}

impl CrReduction {
    fn new(inner: [VertexId; 4], outer: [VertexId; 4]) -> Self {
        CrReduction {
            inner,
            outer,
            assoc: [
                EdgeKey::new(outer[0], outer[2]),
                EdgeKey::new(outer[1], outer[3]),
            ],
        }
    }

    /// The two outer diagonals `d = (v1, v3)` and `d' = (v2, v4)`.
    pub fn associated(&self) -> &[EdgeKey] {
        &self.assoc
    }

    /// Inner vertices in ascending order; identifies the cube.
    pub fn inner_set(&self) -> [VertexId; 4] {
        let mut s = self.inner;
        s.sort_unstable();
        s
    }

    pub fn classify(&self, g: &DynamicGraph) -> Classification {
        let mut present = 0u8;
        for (i, d) in self.assoc.iter().enumerate() {
            if g.has_edge(d.lo(), d.hi()) {
                present |= 1 << i;
            }
        }
        if present != 0 {
            Classification::BlockedRed(present)
        } else if self.outer.iter().any(|&v| g.degree(v) < 8) {
            Classification::BlockedVertex
        } else {
            Classification::Good
        }
    }
}

const SPLITS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 1, 3, 2]];

/// Finds the crossed cube whose inner cycle contains the center of `nb`.
///
/// The inner vertices are the center and three mutually adjacent degree-6
/// ring vertices; the outer cycle is what remains of their neighbourhoods.
/// Each inner vertex must miss a different outer vertex. Which inner pairs
/// are opposite follows from which outer pairs are non-adjacent.
pub fn match_cc(g: &DynamicGraph, nb: &Neighborhood) -> Option<CrReduction> {
    let x = nb.center;
    let mut cands = [0usize; 6];
    let mut nc = 0;
    for i in 1..=6 {
        if g.degree(nb.member(i)) == 6 {
            cands[nc] = i;
            nc += 1;
        }
    }
    let cands = &cands[..nc];
    for (ai, &a) in cands.iter().enumerate() {
        for (bi, &b) in cands.iter().enumerate().skip(ai + 1) {
            if !nb.adjacent(a, b) {
                continue;
            }
            for &c in &cands[bi + 1..] {
                if !nb.adjacent(a, c) || !nb.adjacent(b, c) {
                    continue;
                }
                let inner = [x, nb.member(a), nb.member(b), nb.member(c)];
                if let Some(cr) = match_outer(g, nb, inner, [a, b, c]) {
                    return Some(cr);
                }
            }
        }
    }
    None
}

fn match_outer(
    g: &DynamicGraph,
    nb: &Neighborhood,
    inner: [VertexId; 4],
    members: [usize; 3],
) -> Option<CrReduction> {
    // The center's outer vertices are its ring minus the three inner ones.
    let mut outer = [0 as VertexId; 4];
    let mut no = 0;
    for i in 1..=6 {
        if !members.contains(&i) {
            outer[no] = nb.member(i);
            no += 1;
        }
    }
    // Membership bitmask over `outer` per inner vertex.
    let mut seen = [0u8; 4];
    seen[0] = 0b0111;
    for (k, &y) in inner.iter().enumerate().skip(1) {
        let mut count = 0;
        for &w in g.neighbors(y) {
            if inner.contains(&w) {
                continue;
            }
            count += 1;
            let slot = match outer[..no].iter().position(|&o| o == w) {
                Some(p) => p,
                None if no < 4 => {
                    outer[no] = w;
                    no += 1;
                    no - 1
                }
                None => return None,
            };
            seen[k] |= 1 << slot;
        }
        if count != 3 {
            return None;
        }
    }
    if no != 4 {
        return None;
    }
    // The outer vertex each inner vertex misses.
    let mut missed = [0 as VertexId; 4];
    let mut used = 0u8;
    for k in 0..4 {
        let miss = (!seen[k] & 0b1111).trailing_zeros() as usize;
        if used & (1 << miss) != 0 {
            return None;
        }
        used |= 1 << miss;
        missed[k] = outer[miss];
    }
    let mut found: Option<CrReduction> = None;
    for s in SPLITS {
        // Opposite inner pairs (s0, s2) and (s1, s3); the outer cycle
        // needs every edge between the two missed pairs.
        let (o0, o1, o2, o3) = (missed[s[0]], missed[s[1]], missed[s[2]], missed[s[3]]);
        if g.has_edge(o0, o1) && g.has_edge(o1, o2) && g.has_edge(o2, o3) && g.has_edge(o3, o0) {
            if found.is_none() {
                let x = [inner[s[0]], inner[s[1]], inner[s[2]], inner[s[3]]];
                // v_i is the vertex missed by x_{i+2}.
                let v = [o2, o3, o0, o1];
                found = Some(CrReduction::new(x, v));
            }
        }
    }
    found
}

/// Applies `CR`: `n` drops by 4 and `m` by 16.
pub fn apply_cr(g: &mut DynamicGraph, r: &CrReduction) -> Result<EditRecord> {
    for &x in &r.inner {
        g.remove_vertex(x)?;
    }
    let [v1, v2, v3, v4] = r.outer;
    g.add_edge(v1, v3)?;
    g.add_edge(v2, v4)?;
    Ok(EditRecord::Cr {
        inner: r.inner,
        outer: r.outer,
    })
}
