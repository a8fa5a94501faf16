//! The black skeleton of an optimal 1-planar embedding as a half-edge
//! structure.
//!
//! Every face of the skeleton is a quadrangle and carries one crossing pair
//! (its two diagonals), so the red edges are implied and never stored.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{Color, EmbeddedGraph};
use crate::error::{Error, Result};
use crate::graph::{EdgeKey, VertexId};

pub type ArcId = u32;
const NONE: u32 = u32::MAX;

/// Planar quadrangulation with a rotation system.
///
/// Arcs come in twin pairs `a`, `a ^ 1`. `next`/`prev` walk the rotation
/// around the tail counter-clockwise; the face to one side of an arc is
/// traced by [`face_next`](Self::face_next).
#[derive(Clone, Debug, Default)]
pub struct Skeleton {
    head: Vec<VertexId>,
    next: Vec<ArcId>,
    prev: Vec<ArcId>,
    first: Vec<ArcId>,
    degree: Vec<u32>,
    n: usize,
}

impl Skeleton {
    /// Builds from counter-clockwise neighbour lists. Every edge must be
    /// listed from both ends.
    pub fn from_rotations(id_bound: usize, rotations: &[(VertexId, Vec<VertexId>)]) -> Result<Self> {
        let mut s = Skeleton {
            first: vec![NONE; id_bound],
            degree: vec![0; id_bound],
            ..Default::default()
        };
        let mut pending: HashMap<(VertexId, VertexId), ArcId> = HashMap::new();
        for (v, rot) in rotations {
            s.ensure(*v);
            let mut arcs = Vec::with_capacity(rot.len());
            for &u in rot {
                s.ensure(u);
                let a = match pending.remove(&(u, *v)) {
                    Some(b) => b ^ 1,
                    None => {
                        let a = s.alloc_pair(u, *v);
                        pending.insert((*v, u), a);
                        a
                    }
                };
                arcs.push(a);
            }
            for (i, &a) in arcs.iter().enumerate() {
                let nx = arcs[(i + 1) % arcs.len()];
                s.next[a as usize] = nx;
                s.prev[nx as usize] = a;
            }
            if let Some(&a) = arcs.first() {
                s.first[*v as usize] = a;
                s.degree[*v as usize] = arcs.len() as u32;
                s.n += 1;
            }
        }
        if !pending.is_empty() {
            return Err(Error::Replay("rotation system lists an edge from one side only"));
        }
        Ok(s)
    }

    fn ensure(&mut self, v: VertexId) {
        let need = v as usize + 1;
        if self.first.len() < need {
            self.first.resize(need, NONE);
            self.degree.resize(need, 0);
        }
    }

    // Allocates arcs `tail -> head` (returned) and its twin.
    fn alloc_pair(&mut self, head: VertexId, tail: VertexId) -> ArcId {
        let a = self.head.len() as ArcId;
        self.head.extend([head, tail]);
        self.next.extend([NONE, NONE]);
        self.prev.extend([NONE, NONE]);
        a
    }

    #[inline]
    pub fn head(&self, a: ArcId) -> VertexId {
        self.head[a as usize]
    }

    #[inline]
    pub fn tail(&self, a: ArcId) -> VertexId {
        self.head[(a ^ 1) as usize]
    }

    #[inline]
    pub fn twin(a: ArcId) -> ArcId {
        a ^ 1
    }

    #[inline]
    pub fn rot_next(&self, a: ArcId) -> ArcId {
        self.next[a as usize]
    }

    #[inline]
    pub fn rot_prev(&self, a: ArcId) -> ArcId {
        self.prev[a as usize]
    }

    /// Next arc along the face: clockwise neighbour of the twin.
    #[inline]
    pub fn face_next(&self, a: ArcId) -> ArcId {
        self.prev[(a ^ 1) as usize]
    }

    /// The vertex across the quadrangle from the tail of `a`.
    #[inline]
    pub fn opposite(&self, a: ArcId) -> VertexId {
        self.head(self.face_next(a))
    }

    /// The four corners of the face of `a`, starting at its tail.
    pub fn face(&self, a: ArcId) -> [VertexId; 4] {
        let b = self.face_next(a);
        let c = self.face_next(b);
        [self.tail(a), self.head(a), self.head(b), self.head(c)]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of black edges.
    pub fn edge_count(&self) -> usize {
        self.head.len() / 2
    }

    pub fn arc_count(&self) -> usize {
        self.head.len()
    }

    pub fn id_bound(&self) -> usize {
        self.first.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.first.get(v as usize).is_some_and(|&a| a != NONE)
    }

    /// Black degree; the full degree is twice this.
    pub fn degree(&self, v: VertexId) -> usize {
        self.degree.get(v as usize).map_or(0, |&d| d as usize)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.first
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != NONE)
            .map(|(v, _)| v as VertexId)
    }

    /// Outgoing arcs of `v` in counter-clockwise order.
    pub fn arcs(&self, v: VertexId) -> impl Iterator<Item = ArcId> + '_ {
        let start = self.first.get(v as usize).copied().unwrap_or(NONE);
        let mut cur = start;
        let mut done = start == NONE;
        core::iter::from_fn(move || {
            if done {
                return None;
            }
            let a = cur;
            cur = self.next[a as usize];
            done = cur == start;
            Some(a)
        })
    }

    pub fn find_arc(&self, from: VertexId, to: VertexId) -> Option<ArcId> {
        self.arcs(from).find(|&a| self.head(a) == to)
    }

    fn link_after(&mut self, a: ArcId, new: ArcId) {
        let b = self.next[a as usize];
        self.next[a as usize] = new;
        self.prev[new as usize] = a;
        self.next[new as usize] = b;
        self.prev[b as usize] = new;
    }

    fn link_before(&mut self, a: ArcId, new: ArcId) {
        let p = self.prev[a as usize];
        self.link_after(p, new);
    }

    /// Splits the tail `v` of `m = v -> b`: a new vertex `x` takes over the
    /// edge to `b` and is joined to the rotation neighbours `a`, `c` of `b`
    /// around `v`. A new face `(v, a, x, c)` appears between them.
    ///
    /// Requires black degree at least 4 at `v` and a fresh id `x`.
    pub fn split(&mut self, m: ArcId, x: VertexId) -> Result<()> {
        let v = self.tail(m);
        if self.degree(v) < 4 {
            return Err(Error::InvalidSite("split vertex needs black degree >= 4"));
        }
        if self.contains(x) {
            return Err(Error::InvalidSite("split target id already in use"));
        }
        self.ensure(x);
        let p = self.prev[m as usize];
        let q = self.next[m as usize];
        let (a, c) = (self.head(p), self.head(q));
        // Detach m from v; its tail becomes x.
        self.next[p as usize] = q;
        self.prev[q as usize] = p;
        if self.first[v as usize] == m {
            self.first[v as usize] = p;
        }
        self.head[(m ^ 1) as usize] = x;
        self.degree[v as usize] -= 1;

        let xa = self.alloc_pair(a, x);
        let xc = self.alloc_pair(c, x);
        // Around x: a, b, c counter-clockwise.
        self.next[xa as usize] = m;
        self.prev[m as usize] = xa;
        self.next[m as usize] = xc;
        self.prev[xc as usize] = m;
        self.next[xc as usize] = xa;
        self.prev[xa as usize] = xc;
        self.first[x as usize] = m;
        self.degree[x as usize] = 3;
        self.n += 1;
        // At a the new edge sits just clockwise of (a, v); at c just counter-clockwise.
        self.link_before(p ^ 1, xa ^ 1);
        self.link_after(q ^ 1, xc ^ 1);
        self.degree[a as usize] += 1;
        self.degree[c as usize] += 1;
        Ok(())
    }

    /// Inserts a cube into the face of `f`: four new vertices `xs[i]`, each
    /// joined to the `i`-th corner of the face (starting at the tail of `f`)
    /// and to its two neighbours on a new 4-cycle.
    pub fn insert_cube(&mut self, f: ArcId, xs: [VertexId; 4]) -> Result<()> {
        for &x in &xs {
            if self.contains(x) {
                return Err(Error::InvalidSite("cube vertex id already in use"));
            }
            self.ensure(x);
        }
        let mut e = [f; 4];
        for i in 1..4 {
            e[i] = self.face_next(e[i - 1]);
        }
        if self.face_next(e[3]) != f {
            return Err(Error::InvalidSite("face is not a quadrangle"));
        }
        let mut spoke_in = [0; 4]; // x_i -> v_i
        let mut ring_fwd = [0; 4]; // x_i -> x_{i+1}
        for i in 0..4 {
            let v = self.tail(e[i]);
            let s = self.alloc_pair(xs[i], v);
            self.link_after(e[i], s);
            self.degree[v as usize] += 1;
            spoke_in[i] = s ^ 1;
            ring_fwd[i] = self.alloc_pair(xs[(i + 1) % 4], xs[i]);
        }
        for i in 0..4 {
            let to_prev = ring_fwd[(i + 3) % 4] ^ 1; // x_i -> x_{i-1}
            let rot = [to_prev, spoke_in[i], ring_fwd[i]];
            for j in 0..3 {
                let (a, b) = (rot[j], rot[(j + 1) % 3]);
                self.next[a as usize] = b;
                self.prev[b as usize] = a;
            }
            self.first[xs[i] as usize] = spoke_in[i];
            self.degree[xs[i] as usize] = 3;
        }
        self.n += 4;
        Ok(())
    }

    /// Counts faces by walking every arc once.
    pub fn faces(&self) -> Vec<ArcId> {
        let mut seen = vec![false; self.head.len()];
        let mut reps = Vec::new();
        for a in 0..self.head.len() as ArcId {
            if seen[a as usize] || self.next[a as usize] == NONE {
                continue;
            }
            reps.push(a);
            let mut b = a;
            while !seen[b as usize] {
                seen[b as usize] = true;
                b = self.face_next(b);
            }
        }
        reps
    }

    /// Checks that every face is a quadrangle and Euler's formula holds.
    pub fn check(&self) -> core::result::Result<(), &'static str> {
        let faces = self.faces();
        for &f in &faces {
            let mut b = f;
            for _ in 0..4 {
                b = self.face_next(b);
            }
            if b != f || self.face_next(self.face_next(f)) == f {
                return Err("face is not a quadrangle");
            }
        }
        if self.n + faces.len() != self.edge_count() + 2 {
            return Err("Euler characteristic is not 2");
        }
        Ok(())
    }

    /// A 4-cycle of the skeleton that is not a face, if any.
    ///
    /// Every 4-cycle is found from its vertex processed first in order of
    /// decreasing degree; the work is bounded by the arboricity times the
    /// edge count, which is linear for planar graphs.
    pub fn separating_4cycle(&self) -> Option<[VertexId; 4]> {
        let mut order: Vec<VertexId> = self.vertices().collect();
        order.sort_unstable_by_key(|&v| core::cmp::Reverse(self.degree(v)));
        let mut rank = vec![u32::MAX; self.id_bound()];
        for (i, &v) in order.iter().enumerate() {
            rank[v as usize] = i as u32;
        }
        let mut common: Vec<Vec<VertexId>> = vec![Vec::new(); self.id_bound()];
        let mut touched = Vec::new();
        for &a in &order {
            let ra = rank[a as usize];
            for ab in self.arcs(a) {
                let b = self.head(ab);
                if rank[b as usize] < ra {
                    continue;
                }
                for bc in self.arcs(b) {
                    let c = self.head(bc);
                    if c == a || rank[c as usize] < ra {
                        continue;
                    }
                    if common[c as usize].is_empty() {
                        touched.push(c);
                    }
                    common[c as usize].push(b);
                }
            }
            let mut found = None;
            for &c in &touched {
                let l = &common[c as usize];
                if found.is_none() && l.len() >= 2 {
                    if l.len() >= 3 || !self.is_face(a, l[0], c, l[1]) {
                        found = Some([a, l[0], c, l[1]]);
                    }
                }
            }
            for c in touched.drain(..) {
                common[c as usize].clear();
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn is_face(&self, a: VertexId, b: VertexId, c: VertexId, d: VertexId) -> bool {
        let Some(ab) = self.find_arc(a, b) else {
            return false;
        };
        [ab, ab ^ 1].iter().any(|&e| {
            let f = self.face(e);
            let mut f = [f[0], f[1], f[2], f[3]];
            let mut q = [a, b, c, d];
            f.sort_unstable();
            q.sort_unstable();
            f == q
        })
    }

    /// Every edge of the optimal 1-planar graph: black skeleton edges plus
    /// the two diagonals of every face.
    pub fn full_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut e = Vec::with_capacity(self.edge_count() * 2);
        for a in (0..self.head.len() as ArcId).step_by(2) {
            e.push((self.tail(a), self.head(a)));
        }
        for f in self.faces() {
            let [a, b, c, d] = self.face(f);
            e.push((a, c));
            e.push((b, d));
        }
        e
    }

    /// Explicit rotation system with colours and crossing pairs.
    pub fn to_embedded(&self) -> EmbeddedGraph {
        let mut emb = EmbeddedGraph::with_id_bound(self.id_bound());
        for v in self.vertices() {
            let rot = &mut emb.rotation[v as usize];
            for a in self.arcs(v) {
                rot.push(self.head(a));
                rot.push(self.opposite(a));
            }
        }
        for a in (0..self.head.len() as ArcId).step_by(2) {
            emb.color.insert(EdgeKey::new(self.tail(a), self.head(a)), Color::Black);
        }
        for f in self.faces() {
            let [a, b, c, d] = self.face(f);
            let (e1, e2) = (EdgeKey::new(a, c), EdgeKey::new(b, d));
            emb.color.insert(e1, Color::Red);
            emb.color.insert(e2, Color::Red);
            emb.crossings.push((e1, e2));
        }
        emb
    }
}
