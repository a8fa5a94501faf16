//! Dynamic simple-graph storage and the constant-time local probes used by
//! the rewrite rules.

use alloc::vec::Vec;
use core::cell::Cell;
use core::fmt;

use hashbrown::HashMap;

use crate::error::{Error, Result};

mod local;

pub use local::{precheck, precheck_failure, DegreeVector, Neighborhood, PrecheckFailure};

/// Dense vertex index. Ids of deleted vertices are never handed out again.
pub type VertexId = u32;

/// An undirected edge with its endpoints stored in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeKey(VertexId, VertexId);

impl EdgeKey {
    #[inline]
    pub fn new(a: VertexId, b: VertexId) -> Self {
        if a <= b {
            EdgeKey(a, b)
        } else {
            EdgeKey(b, a)
        }
    }

    #[inline]
    pub fn lo(self) -> VertexId {
        self.0
    }

    #[inline]
    pub fn hi(self) -> VertexId {
        self.1
    }

    #[inline]
    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.0, self.1)
    }

    #[inline]
    pub fn contains(self, v: VertexId) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Debug for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Mutable simple undirected graph.
///
/// Every vertex keeps its neighbours in a vector; a single hash map from edge
/// to the two slot positions gives expected O(1) adjacency tests, insertion and
/// removal (removal swaps the last slot into the hole).
#[derive(Clone, Default)]
pub struct DynamicGraph {
    adj: Vec<Vec<VertexId>>,
    live: Vec<bool>,
    slots: HashMap<EdgeKey, (u32, u32)>,
    n: usize,
    probes: Cell<u64>,
}

impl DynamicGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph with vertices `0..n` and no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        g.adj.resize_with(n, Vec::new);
        g.live.resize(n, true);
        g.n = n;
        g
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        g.slots.reserve(edges.len());
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = self.adj.len() as VertexId;
        self.adj.push(Vec::new());
        self.live.push(true);
        self.n += 1;
        id
    }

    /// Number of live vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> usize {
        self.slots.len()
    }

    /// Upper bound (exclusive) on the ids ever handed out.
    #[inline]
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn is_live(&self, v: VertexId) -> bool {
        self.live.get(v as usize).copied().unwrap_or(false)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.live
            .iter()
            .enumerate()
            .filter(|(_, &l)| l)
            .map(|(v, _)| v as VertexId)
    }

    /// Each edge once, in no particular order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeKey> + '_ {
        self.slots.keys().copied()
    }

    /// Edges sorted lexicographically; handy for serialization and tests.
    pub fn sorted_edges(&self) -> Vec<EdgeKey> {
        let mut e: Vec<_> = self.edges().collect();
        e.sort_unstable();
        e
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(v as usize).map_or(0, Vec::len)
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adj.get(v as usize).map_or(&[], Vec::as_slice)
    }

    /// Adjacency test. Each call is counted by [`adjacency_probes`](Self::adjacency_probes).
    #[inline]
    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.probes.set(self.probes.get() + 1);
        self.slots.contains_key(&EdgeKey::new(a, b))
    }

    pub fn adjacency_probes(&self) -> u64 {
        self.probes.get()
    }

    pub fn reset_probes(&self) {
        self.probes.set(0);
    }

    fn check_live(&self, v: VertexId) -> Result<()> {
        if self.is_live(v) {
            Ok(())
        } else {
            Err(Error::DeadVertex(v))
        }
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.check_live(a)?;
        self.check_live(b)?;
        let key = EdgeKey::new(a, b);
        if self.slots.contains_key(&key) {
            return Err(Error::DuplicateEdge(key.lo(), key.hi()));
        }
        let (lo, hi) = key.endpoints();
        let plo = self.adj[lo as usize].len() as u32;
        let phi = self.adj[hi as usize].len() as u32;
        self.adj[lo as usize].push(hi);
        self.adj[hi as usize].push(lo);
        self.slots.insert(key, (plo, phi));
        Ok(())
    }

    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> Result<()> {
        let key = EdgeKey::new(a, b);
        let Some((plo, phi)) = self.slots.remove(&key) else {
            return Err(Error::MissingEdge(key.lo(), key.hi()));
        };
        let (lo, hi) = key.endpoints();
        self.detach_slot(lo, plo);
        self.detach_slot(hi, phi);
        Ok(())
    }

    // Swap-removes slot `pos` of `v` and repairs the slot index of the moved neighbour.
    fn detach_slot(&mut self, v: VertexId, pos: u32) {
        let list = &mut self.adj[v as usize];
        list.swap_remove(pos as usize);
        if let Some(&moved) = list.get(pos as usize) {
            let key = EdgeKey::new(v, moved);
            let entry = self.slots.get_mut(&key).expect("slot index out of sync");
            if v == key.lo() {
                entry.0 = pos;
            } else {
                entry.1 = pos;
            }
        }
    }

    /// Removes `v` with all incident edges. The id stays retired.
    pub fn remove_vertex(&mut self, v: VertexId) -> Result<()> {
        self.check_live(v)?;
        while let Some(&u) = self.adj[v as usize].last() {
            self.remove_edge(v, u)?;
        }
        self.live[v as usize] = false;
        self.n -= 1;
        Ok(())
    }

    /// Applies removals first, then insertions. Stops at the first fault; the
    /// graph is then left partially edited, which callers treat as a failed run.
    pub fn mutate_edges(
        &mut self,
        removals: &[(VertexId, VertexId)],
        insertions: &[(VertexId, VertexId)],
    ) -> Result<()> {
        for &(a, b) in removals {
            self.remove_edge(a, b)?;
        }
        for &(a, b) in insertions {
            self.add_edge(a, b)?;
        }
        Ok(())
    }

    /// Sorted degree sequence of the live vertices.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Relabels the live vertices densely as `0..n`, preserving order.
    /// Returns the compacted graph and the old id of every new vertex.
    pub fn compacted(&self) -> (DynamicGraph, Vec<VertexId>) {
        let old: Vec<VertexId> = self.vertices().collect();
        let mut new_id = alloc::vec![VertexId::MAX; self.id_bound()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v as usize] = i as VertexId;
        }
        let mut g = DynamicGraph::with_vertices(old.len());
        for e in self.sorted_edges() {
            g.add_edge(new_id[e.lo() as usize], new_id[e.hi() as usize])
                .expect("compaction preserves simplicity");
        }
        (g, old)
    }
}

impl fmt::Debug for DynamicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DynamicGraph")
            .field("n", &self.n)
            .field("m", &self.m())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_edit() {
        // a - b, then remove (a,b) and insert (a,c)
        let mut g = DynamicGraph::from_edges(3, &[(0, 1)]).unwrap();
        g.mutate_edges(&[(0, 1)], &[(0, 2)]).unwrap();
        assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (1, 0, 1));
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn structural_faults() {
        let mut g = DynamicGraph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(g.add_edge(1, 0), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(g.remove_edge(1, 2), Err(Error::MissingEdge(1, 2)));
        assert_eq!(g.add_edge(2, 2), Err(Error::SelfLoop(2)));
    }

    #[test]
    fn removed_ids_are_not_reused() {
        let mut g = DynamicGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        g.remove_vertex(1).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
        assert!(!g.is_live(1));
        assert_eq!(g.add_vertex(), 3);
        assert_eq!(g.add_edge(1, 3), Err(Error::DeadVertex(1)));
    }

    #[test]
    fn slot_repair_after_swap_remove() {
        let mut g = DynamicGraph::with_vertices(5);
        for v in 1..5 {
            g.add_edge(0, v).unwrap();
        }
        g.remove_edge(0, 1).unwrap();
        g.remove_edge(0, 4).unwrap();
        g.remove_edge(3, 0).unwrap();
        assert_eq!(g.neighbors(0), &[2]);
        g.remove_edge(0, 2).unwrap();
        assert_eq!(g.m(), 0);
    }
}
