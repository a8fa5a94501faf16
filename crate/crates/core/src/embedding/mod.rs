//! Embeddings of optimal 1-planar graphs.
//!
//! The working representation is the black [`Skeleton`]; an
//! [`EmbeddedGraph`] is the explicit form used for output and verification.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::graph::{EdgeKey, VertexId};

mod reconstruct;
mod skeleton;
mod verify;

pub use reconstruct::reconstruct;
pub use skeleton::{ArcId, Skeleton};
pub use verify::{verify_embedding, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    /// Uncrossed; part of the planar skeleton.
    Black,
    /// Crossed exactly once.
    Red,
}

/// A 1-planar embedding given as a rotation system with edge colours and
/// crossing pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EmbeddedGraph {
    /// Counter-clockwise neighbour order per vertex id; empty for unused ids.
    pub rotation: Vec<Vec<VertexId>>,
    pub color: HashMap<EdgeKey, Color>,
    pub crossings: Vec<(EdgeKey, EdgeKey)>,
}

impl EmbeddedGraph {
    pub fn with_id_bound(id_bound: usize) -> Self {
        EmbeddedGraph {
            rotation: vec![Vec::new(); id_bound],
            ..Default::default()
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.rotation
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_empty())
            .map(|(v, _)| v as VertexId)
    }

    pub fn color(&self, a: VertexId, b: VertexId) -> Option<Color> {
        self.color.get(&EdgeKey::new(a, b)).copied()
    }

    pub fn edge_count(&self) -> usize {
        self.color.len()
    }

    /// Sorted list of every edge with its colour.
    pub fn sorted_edges(&self) -> Vec<(EdgeKey, Color)> {
        let mut e: Vec<_> = self.color.iter().map(|(&k, &c)| (k, c)).collect();
        e.sort_unstable_by_key(|&(k, _)| k);
        e
    }

    pub fn set_color(&mut self, a: VertexId, b: VertexId, c: Color) {
        self.color.insert(EdgeKey::new(a, b), c);
    }
}
