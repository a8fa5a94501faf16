use core::fmt;

use super::{DynamicGraph, VertexId};
use crate::error::{Error, Result};

/// The seven degree vectors a candidate of an optimal 1-planar graph can have.
pub const ADMISSIBLE: [[u8; 7]; 7] = [
    [3, 3, 3, 5, 5, 5, 6],
    [3, 3, 4, 5, 5, 6, 6],
    [3, 4, 4, 5, 5, 5, 6],
    [3, 4, 5, 5, 5, 6, 6],
    [4, 4, 5, 5, 5, 5, 6],
    [4, 4, 5, 5, 6, 6, 6],
    [5, 5, 5, 5, 5, 5, 6],
];

/// Why a graph fails the static precheck.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrecheckFailure {
    TooSmall { n: usize },
    NineVertices,
    EdgeCount { n: usize, m: usize },
    OddDegree { vertex: VertexId, degree: usize },
    LowDegree { vertex: VertexId, degree: usize },
}

impl fmt::Display for PrecheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PrecheckFailure::TooSmall { n } => {
                write!(f, "precheck: too few vertices ({n} < 8)")
            }
            PrecheckFailure::NineVertices => {
                write!(f, "precheck: no optimal 1-planar graph has 9 vertices")
            }
            PrecheckFailure::EdgeCount { n, m } => {
                write!(f, "precheck: edge count {m} != 4n-8 = {}", (4 * n).saturating_sub(8))
            }
            PrecheckFailure::OddDegree { vertex, degree } => {
                write!(f, "precheck: vertex {vertex} has odd degree {degree}")
            }
            PrecheckFailure::LowDegree { vertex, degree } => {
                write!(f, "precheck: vertex {vertex} has degree {degree} < 6")
            }
        }
    }
}

/// First reason `g` cannot be optimal 1-planar by counting alone, if any.
/// The edge count is checked before the degrees.
pub fn precheck_failure(g: &DynamicGraph) -> Option<PrecheckFailure> {
    let (n, m) = (g.n(), g.m());
    if m + 8 != 4 * n {
        return Some(PrecheckFailure::EdgeCount { n, m });
    }
    if n < 8 {
        return Some(PrecheckFailure::TooSmall { n });
    }
    if n == 9 {
        return Some(PrecheckFailure::NineVertices);
    }
    for v in g.vertices() {
        let degree = g.degree(v);
        if degree % 2 == 1 {
            return Some(PrecheckFailure::OddDegree { vertex: v, degree });
        }
        if degree < 6 {
            return Some(PrecheckFailure::LowDegree { vertex: v, degree });
        }
    }
    None
}

/// `m = 4n - 8`, all degrees even and at least 6, `n >= 8` and `n != 9`.
pub fn precheck(g: &DynamicGraph) -> bool {
    precheck_failure(g).is_none()
}

/// The subgraph induced by a degree-6 vertex and its six neighbours.
///
/// Index 0 is the center, indices 1..=6 are the ring in adjacency-list order.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Neighborhood {
    pub center: VertexId,
    pub ring: [VertexId; 6],
    /// `adj[i]` has bit `j` set iff members `i` and `j` are adjacent.
    adj: [u8; 7],
}

impl Neighborhood {
    /// Builds the induced structure. Ring members of small degree are
    /// scanned; only pairs of two high-degree members cost a hash probe.
    pub fn of(g: &DynamicGraph, center: VertexId) -> Result<Self> {
        const SCAN: usize = 24;
        let nbrs = g.neighbors(center);
        if !g.is_live(center) {
            return Err(Error::DeadVertex(center));
        }
        if nbrs.len() != 6 {
            return Err(Error::NotACandidate {
                vertex: center,
                degree: nbrs.len(),
            });
        }
        let mut ring = [0; 6];
        ring.copy_from_slice(nbrs);
        let mut adj = [0u8; 7];
        adj[0] = 0b111_1110;
        let mut small = [false; 6];
        for i in 0..6 {
            adj[i + 1] |= 1;
            let list = g.neighbors(ring[i]);
            if list.len() > SCAN {
                continue;
            }
            small[i] = true;
            for &u in list {
                if let Some(j) = ring.iter().position(|&r| r == u) {
                    adj[i + 1] |= 1 << (j + 1);
                    adj[j + 1] |= 1 << (i + 1);
                }
            }
        }
        for i in 0..6 {
            for j in i + 1..6 {
                if !small[i] && !small[j] && g.has_edge(ring[i], ring[j]) {
                    adj[i + 1] |= 1 << (j + 1);
                    adj[j + 1] |= 1 << (i + 1);
                }
            }
        }
        Ok(Neighborhood { center, ring, adj })
    }

    /// Whether members `i` and `j` (0 = center) are adjacent.
    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1 << j) != 0
    }

    /// Bitmask over member indices adjacent to member `i`.
    #[inline]
    pub fn mask(&self, i: usize) -> u8 {
        self.adj[i]
    }

    #[inline]
    pub fn local_degree(&self, i: usize) -> u8 {
        self.adj[i].count_ones() as u8
    }

    /// Member vertex id; 0 is the center.
    #[inline]
    pub fn member(&self, i: usize) -> VertexId {
        if i == 0 {
            self.center
        } else {
            self.ring[i - 1]
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree_vector(&self) -> DegreeVector {
        let mut d = [0u8; 7];
        for (i, slot) in d.iter_mut().enumerate() {
            *slot = self.local_degree(i);
        }
        d.sort_unstable();
        DegreeVector(d)
    }
}

impl fmt::Debug for Neighborhood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Neighborhood")
            .field("center", &self.center)
            .field("ring", &self.ring)
            .field("degree_vector", &self.degree_vector())
            .finish()
    }
}

/// Sorted local degrees of a candidate's closed neighbourhood.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeVector(pub [u8; 7]);

impl DegreeVector {
    /// Smallest entry, the type of the candidate.
    #[inline]
    pub fn tau(&self) -> u8 {
        self.0[0]
    }

    /// Whether the vector can occur at a candidate of an optimal 1-planar graph.
    pub fn is_admissible(&self) -> bool {
        ADMISSIBLE.contains(&self.0)
    }
}

impl fmt::Debug for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.0;
        write!(f, "({},{},{},{},{},{},{})", d[0], d[1], d[2], d[3], d[4], d[5], d[6])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> DynamicGraph {
        let mut g = DynamicGraph::with_vertices(n);
        for a in 0..n as VertexId {
            for b in a + 1..n as VertexId {
                g.add_edge(a, b).unwrap();
            }
        }
        g
    }

    #[test]
    fn k6_fails_on_edge_count() {
        let g = k(6);
        assert!(!precheck(&g));
        assert_eq!(
            precheck_failure(&g),
            Some(PrecheckFailure::EdgeCount { n: 6, m: 15 })
        );
    }

    #[test]
    fn neighborhood_requires_degree_six() {
        let g = k(5);
        assert_eq!(
            Neighborhood::of(&g, 0).unwrap_err(),
            Error::NotACandidate { vertex: 0, degree: 4 }
        );
    }

    #[test]
    fn neighborhood_uses_constant_probes() {
        let g = k(7);
        g.reset_probes();
        let nb = Neighborhood::of(&g, 3).unwrap();
        assert!(g.adjacency_probes() <= 21);
        assert_eq!(nb.edge_count(), 21);
        assert_eq!(nb.local_degree(0), 6);
        assert_eq!(nb.degree_vector().0, [6; 7]);
        assert!(!nb.degree_vector().is_admissible());
    }
}
