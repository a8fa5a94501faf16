//! Independent checker for claimed optimal 1-planar embeddings.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use super::{Color, EmbeddedGraph};
use crate::graph::{DynamicGraph, EdgeKey, VertexId};

/// The first property a claimed embedding fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The rotation system does not list exactly the edges of the graph.
    Structure(&'static str),
    /// (b) A face of the black skeleton is not a quadrangle.
    SkeletonFace { length: usize },
    /// (c) A skeleton face does not carry its diagonals as a listed crossing,
    /// or the crossing list is inconsistent.
    Kite(&'static str),
    /// (d) The black skeleton has an odd cycle.
    NotBipartite,
    /// (e) Colours do not alternate around a vertex.
    Alternation(VertexId),
    /// (a) The planarization is not a connected genus-0 map.
    NotPlanar { vertices: usize, edges: usize, faces: usize },
}

impl Violation {
    /// Letter of the violated property; `'-'` for structural mismatches.
    pub fn clause(&self) -> char {
        match self {
            Violation::Structure(_) => '-',
            Violation::NotPlanar { .. } => 'a',
            Violation::SkeletonFace { .. } => 'b',
            Violation::Kite(_) => 'c',
            Violation::NotBipartite => 'd',
            Violation::Alternation(_) => 'e',
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Structure(s) => write!(f, "rotation system does not match graph: {s}"),
            Violation::NotPlanar { vertices, edges, faces } => write!(
                f,
                "(a) planarization has V - E + F = {} - {} + {} != 2",
                vertices, edges, faces
            ),
            Violation::SkeletonFace { length } => {
                write!(f, "(b) skeleton face of length {length}")
            }
            Violation::Kite(s) => write!(f, "(c) {s}"),
            Violation::NotBipartite => write!(f, "(d) skeleton is not bipartite"),
            Violation::Alternation(v) => write!(f, "(e) colours do not alternate at vertex {v}"),
        }
    }
}

// Rotation system over `0..len`, with twin lookup.
struct Map {
    rot: Vec<Vec<VertexId>>,
    pos: HashMap<(VertexId, VertexId), u32>,
}

impl Map {
    fn new(rot: Vec<Vec<VertexId>>) -> Option<Self> {
        let mut pos = HashMap::new();
        for (u, r) in rot.iter().enumerate() {
            for (i, &w) in r.iter().enumerate() {
                if pos.insert((u as VertexId, w), i as u32).is_some() {
                    return None;
                }
            }
        }
        Some(Map { rot, pos })
    }

    // Face lengths, each face traced with face_next = cw neighbour of twin.
    fn faces(&self) -> Option<Vec<usize>> {
        let mut seen: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut out = Vec::new();
        for u in 0..self.rot.len() {
            for i in 0..self.rot[u].len() {
                if seen[u][i] {
                    continue;
                }
                let (mut cu, mut ci) = (u, i);
                let mut len = 0;
                while !seen[cu][ci] {
                    seen[cu][ci] = true;
                    len += 1;
                    let w = self.rot[cu][ci];
                    let j = *self.pos.get(&(w, cu as VertexId))? as usize;
                    let d = self.rot[w as usize].len();
                    cu = w as usize;
                    ci = (j + d - 1) % d;
                }
                if (cu, ci) != (u, i) {
                    return None;
                }
                out.push(len);
            }
        }
        Some(out)
    }

    fn black_faces(&self) -> Option<Vec<Vec<VertexId>>> {
        let mut seen: Vec<Vec<bool>> = self.rot.iter().map(|r| vec![false; r.len()]).collect();
        let mut out = Vec::new();
        for u in 0..self.rot.len() {
            for i in 0..self.rot[u].len() {
                if seen[u][i] {
                    continue;
                }
                let (mut cu, mut ci) = (u, i);
                let mut face = Vec::new();
                while !seen[cu][ci] {
                    seen[cu][ci] = true;
                    face.push(cu as VertexId);
                    let w = self.rot[cu][ci];
                    let j = *self.pos.get(&(w, cu as VertexId))? as usize;
                    let d = self.rot[w as usize].len();
                    cu = w as usize;
                    ci = (j + d - 1) % d;
                }
                out.push(face);
            }
        }
        Some(out)
    }
}

/// Checks that `emb` is an optimal 1-planar embedding of `g`.
///
/// The properties are checked in the order: rotation matches the graph,
/// (b) quadrangular skeleton faces, (c) one crossing pair per face,
/// (d) bipartite skeleton, (e) alternating colours, (a) the planarization
/// (crossings replaced by degree-4 vertices) has genus 0.
pub fn verify_embedding(g: &DynamicGraph, emb: &EmbeddedGraph) -> Result<(), Violation> {
    let bound = g.id_bound().max(emb.rotation.len());
    // Structure.
    let mut count = 0usize;
    for v in 0..bound as VertexId {
        let rot: &[VertexId] = emb.rotation.get(v as usize).map_or(&[], |r| r.as_slice());
        if !g.is_live(v) {
            if !rot.is_empty() {
                return Err(Violation::Structure("rotation at a vertex not in the graph"));
            }
            continue;
        }
        if rot.len() != g.degree(v) {
            return Err(Violation::Structure("rotation length differs from degree"));
        }
        let mut seen = HashSet::with_capacity(rot.len());
        for &u in rot {
            if !seen.insert(u) || !g.is_live(u) || !g.has_edge(u, v) {
                return Err(Violation::Structure("rotation lists a non-edge or repeats one"));
            }
            if emb.color(u, v).is_none() {
                return Err(Violation::Structure("edge without colour"));
            }
        }
        count += rot.len();
    }
    if count != 2 * g.m() || emb.color.len() != g.m() {
        return Err(Violation::Structure("edge count differs"));
    }

    let black_rot: Vec<Vec<VertexId>> = (0..bound)
        .map(|v| {
            emb.rotation.get(v).map_or(Vec::new(), |r| {
                r.iter()
                    .copied()
                    .filter(|&u| emb.color(u, v as VertexId) == Some(Color::Black))
                    .collect()
            })
        })
        .collect();
    let black = Map::new(black_rot).ok_or(Violation::Structure("duplicate rotation entry"))?;

    // (b)
    let faces = black
        .black_faces()
        .ok_or(Violation::Structure("rotation system is not symmetric"))?;
    if let Some(f) = faces.iter().find(|f| f.len() != 4) {
        return Err(Violation::SkeletonFace { length: f.len() });
    }

    // (c)
    let mut pair_of: HashMap<EdgeKey, usize> = HashMap::with_capacity(2 * emb.crossings.len());
    for (i, &(e, f)) in emb.crossings.iter().enumerate() {
        for k in [e, f] {
            if emb.color.get(&k) != Some(&Color::Red) {
                return Err(Violation::Kite("crossing lists an edge that is not red"));
            }
            if pair_of.insert(k, i).is_some() {
                return Err(Violation::Kite("red edge crossed twice"));
            }
        }
        let (a, b) = e.endpoints();
        if f.contains(a) || f.contains(b) {
            return Err(Violation::Kite("crossing edges share an endpoint"));
        }
    }
    let reds = emb.color.values().filter(|&&c| c == Color::Red).count();
    if reds != pair_of.len() {
        return Err(Violation::Kite("red edge without a crossing"));
    }
    if faces.len() != emb.crossings.len() {
        return Err(Violation::Kite("number of crossings differs from number of faces"));
    }
    let mut used = vec![false; emb.crossings.len()];
    for f in &faces {
        let (d1, d2) = (EdgeKey::new(f[0], f[2]), EdgeKey::new(f[1], f[3]));
        match (pair_of.get(&d1), pair_of.get(&d2)) {
            (Some(&i), Some(&j)) if i == j && !used[i] => used[i] = true,
            _ => return Err(Violation::Kite("face diagonals are not a crossing pair")),
        }
    }

    // (d)
    let mut side = vec![u8::MAX; bound];
    for s in g.vertices() {
        if side[s as usize] != u8::MAX {
            continue;
        }
        side[s as usize] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &black.rot[v as usize] {
                if side[u as usize] == u8::MAX {
                    side[u as usize] = side[v as usize] ^ 1;
                    stack.push(u);
                } else if side[u as usize] == side[v as usize] {
                    return Err(Violation::NotBipartite);
                }
            }
        }
    }

    // (e)
    for v in g.vertices() {
        let rot = &emb.rotation[v as usize];
        let d = rot.len();
        let alternates = d % 2 == 0
            && (0..d).all(|i| emb.color(v, rot[i]) != emb.color(v, rot[(i + 1) % d]));
        if !alternates {
            return Err(Violation::Alternation(v));
        }
    }

    // (a) Planarization: crossing i becomes vertex bound + i.
    let c = emb.crossings.len();
    let mut prot: Vec<Vec<VertexId>> = vec![Vec::new(); bound + c];
    let partner = |u: VertexId, k: EdgeKey| if k.lo() == u { k.hi() } else { k.lo() };
    for v in g.vertices() {
        prot[v as usize] = emb.rotation[v as usize]
            .iter()
            .map(|&u| match pair_of.get(&EdgeKey::new(u, v)) {
                Some(&i) => (bound + i) as VertexId,
                None => u,
            })
            .collect();
    }
    for (i, &(e, f)) in emb.crossings.iter().enumerate() {
        let z = (bound + i) as VertexId;
        let other = |u: VertexId| if e.contains(u) { partner(u, e) } else { partner(u, f) };
        // Around the crossing the next endpoint is the one just clockwise of
        // the red edge at the current endpoint.
        let succ = |u: VertexId| -> VertexId {
            let r = &emb.rotation[u as usize];
            let p = r.iter().position(|&w| w == other(u)).unwrap_or(0);
            r[(p + r.len() - 1) % r.len()]
        };
        let mut cyc = vec![e.lo()];
        for _ in 0..3 {
            let nx = succ(*cyc.last().unwrap());
            cyc.push(nx);
        }
        let mut sorted = cyc.clone();
        sorted.sort_unstable();
        let mut ends = [e.lo(), e.hi(), f.lo(), f.hi()];
        ends.sort_unstable();
        if sorted != ends || succ(cyc[3]) != cyc[0] {
            return Err(Violation::NotPlanar {
                vertices: g.n() + c,
                edges: g.m() + 2 * c,
                faces: 0,
            });
        }
        prot[z as usize] = cyc;
    }
    let planar = Map::new(prot).ok_or(Violation::Structure("duplicate rotation entry"))?;
    let nfaces = planar
        .faces()
        .ok_or(Violation::Structure("rotation system is not symmetric"))?
        .len();
    let (nv, ne) = (g.n() + c, g.m() + 2 * c);
    if !connected(g) || nv + nfaces != ne + 2 {
        return Err(Violation::NotPlanar {
            vertices: nv,
            edges: ne,
            faces: nfaces,
        });
    }
    Ok(())
}

fn connected(g: &DynamicGraph) -> bool {
    let Some(s) = g.vertices().next() else {
        return true;
    };
    let mut seen = vec![false; g.id_bound()];
    seen[s as usize] = true;
    let mut stack = vec![s];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if !seen[u as usize] {
                seen[u as usize] = true;
                reached += 1;
                stack.push(u);
            }
        }
    }
    reached == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::make_xw;

    #[test]
    fn wheels_verify() {
        for k in 3..10 {
            let (g, s) = make_xw(k).unwrap();
            assert_eq!(verify_embedding(&g, &s.to_embedded()), Ok(()));
        }
    }

    #[test]
    fn flipped_crossing_fails_skeleton_faces() {
        let (g, s) = make_xw(5).unwrap();
        let mut emb = s.to_embedded();
        let (e, f) = emb.crossings.pop().unwrap();
        emb.color.insert(e, Color::Black);
        emb.color.insert(f, Color::Black);
        assert_eq!(verify_embedding(&g, &emb).unwrap_err().clause(), 'b');
    }

    #[test]
    fn reversed_rotation_fails() {
        let (g, s) = make_xw(4).unwrap();
        let mut emb = s.to_embedded();
        // Swap two neighbours of one vertex: the colours stop alternating
        // or the faces break.
        emb.rotation[0].swap(0, 1);
        assert!(verify_embedding(&g, &emb).is_err());
    }

    #[test]
    fn mirrored_embedding_verifies() {
        let (g, s) = make_xw(4).unwrap();
        let mut emb = s.to_embedded();
        for r in &mut emb.rotation {
            r.reverse();
        }
        assert_eq!(verify_embedding(&g, &emb), Ok(()));
    }
}
