//! The two rewrite rules and their classification.
//!
//! Every decision here is made from local degrees inside the closed
//! neighbourhood of a candidate (a degree-6 vertex); edge colours are never
//! stored. The engine decides *when* to apply a reduction, this module only
//! answers *whether* one applies and what it edits.

use arrayvec::ArrayVec;

use crate::graph::{DegreeVector, DynamicGraph, EdgeKey, Neighborhood, VertexId};

mod cube;
mod star;
mod wheel;

pub use cube::{apply_cr, match_cc, CrReduction};
pub use star::{apply_sr, sr_targets, SrReduction};
pub use wheel::{detect_xw, make_xw, XwMatch};

/// A pending rewrite anchored at one or four candidates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    Sr(SrReduction),
    Cr(CrReduction),
}

impl Reduction {
    /// The red edges whose presence blocks this reduction.
    pub fn associated(&self) -> &[EdgeKey] {
        match self {
            Reduction::Sr(r) => r.associated(),
            Reduction::Cr(r) => r.associated(),
        }
    }

    pub fn is_cr(&self) -> bool {
        matches!(self, Reduction::Cr(_))
    }
}

/// Outcome of checking one reduction against the current graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Good,
    /// Bit `i` set iff `associated()[i]` is present.
    BlockedRed(u8),
    /// The target is joined to the ring vertex opposite to it.
    BlockedBlack,
    /// A vertex would drop to degree 4, or the local embedding does not
    /// determine a unique edit.
    BlockedVertex,
}

/// Where one entry of a reduction is stored in the engine's list bank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Good,
    Bad,
    Wait,
}

impl Classification {
    pub fn is_good(self) -> bool {
        self == Classification::Good
    }

    /// Role of each associated edge, or `None` when nothing is stored.
    ///
    /// Present edges go to `BAD`; absent edges go to `GOOD` when nothing
    /// blocks, otherwise to `WAIT`.
    pub fn placements(self, arity: usize) -> Option<ArrayVec<Role, 5>> {
        let mut out = ArrayVec::new();
        match self {
            Classification::BlockedBlack => return None,
            Classification::Good => out.extend((0..arity).map(|_| Role::Good)),
            Classification::BlockedVertex => out.extend((0..arity).map(|_| Role::Wait)),
            Classification::BlockedRed(mask) => out.extend((0..arity).map(|i| {
                if mask & (1 << i) != 0 {
                    Role::Bad
                } else {
                    Role::Wait
                }
            })),
        }
        Some(out)
    }
}

/// Everything a candidate offers at the current graph state.
#[derive(Debug, Clone)]
pub struct CandidateReport {
    pub center: VertexId,
    pub degree_vector: DegreeVector,
    /// A matched crossed cube. When present, `sr` is empty: the inner
    /// vertices of a crossed cube are never centers of a good `SR`.
    pub cr: Option<(CrReduction, Classification)>,
    pub sr: ArrayVec<(SrReduction, Classification), 6>,
}

impl CandidateReport {
    pub fn reductions(&self) -> impl Iterator<Item = (Reduction, Classification)> + '_ {
        self.cr
            .iter()
            .map(|&(r, c)| (Reduction::Cr(r), c))
            .chain(self.sr.iter().map(|&(r, c)| (Reduction::Sr(r), c)))
    }

    pub fn first_good(&self) -> Option<Reduction> {
        self.reductions().find(|(_, c)| c.is_good()).map(|(r, _)| r)
    }
}

/// The candidate's degree vector is not one an optimal 1-planar graph can have.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reject {
    pub center: VertexId,
    pub degree_vector: DegreeVector,
}

/// Classifies every reduction anchored at the candidate `x`.
///
/// Returns `Ok(None)` if `x` is not a live degree-6 vertex.
pub fn classify(g: &DynamicGraph, x: VertexId) -> Result<Option<CandidateReport>, Reject> {
    if !g.is_live(x) || g.degree(x) != 6 {
        return Ok(None);
    }
    let nb = Neighborhood::of(g, x).expect("degree checked");
    let dv = nb.degree_vector();
    if !dv.is_admissible() {
        return Err(Reject {
            center: x,
            degree_vector: dv,
        });
    }
    let mut report = CandidateReport {
        center: x,
        degree_vector: dv,
        cr: None,
        sr: ArrayVec::new(),
    };
    if dv.tau() >= 4 {
        if let Some(cr) = match_cc(g, &nb) {
            let class = cr.classify(g);
            // Both diagonals only occur in XW_6; there the cube is no reduction.
            if class != Classification::BlockedRed(0b11) {
                report.cr = Some((cr, class));
                return Ok(Some(report));
            }
        }
    }
    report.sr = sr_targets(g, &nb);
    Ok(Some(report))
}

/// What a single applied reduction changed; enough to undo it on an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditRecord {
    /// `center` was merged into `target`; the edge `chord` was removed and
    /// `target` was joined to the three `attached` ring vertices.
    Sr {
        center: VertexId,
        target: VertexId,
        chord: [VertexId; 2],
        attached: [VertexId; 3],
    },
    /// The inner cycle was removed and the outer diagonals inserted.
    /// `inner[i]` is adjacent to every outer vertex except `outer[(i + 2) % 4]`.
    Cr {
        inner: [VertexId; 4],
        outer: [VertexId; 4],
    },
}

impl EditRecord {
    pub fn removed_vertices(&self) -> &[VertexId] {
        match self {
            EditRecord::Sr { center, .. } => core::slice::from_ref(center),
            EditRecord::Cr { inner, .. } => inner,
        }
    }
}

/// Applies a reduction whose classification is `Good`.
pub fn apply(g: &mut DynamicGraph, r: &Reduction) -> crate::Result<EditRecord> {
    match r {
        Reduction::Sr(r) => apply_sr(g, r),
        Reduction::Cr(r) => apply_cr(g, r),
    }
}
