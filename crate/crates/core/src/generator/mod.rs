//! Test-corpus construction by inverse reductions.
//!
//! Every optimal 1-planar graph arises from an extended wheel graph by
//! splitting vertices (inverse `SR`) and inserting crossed cubes into kites
//! (inverse `CR`). Both operate on the graph and its skeleton together so
//! sites are read off the embedding.

use alloc::vec::Vec;

use arrayvec::ArrayVec;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embedding::{ArcId, EmbeddedGraph, Skeleton};
use crate::error::{Error, Result};
use crate::graph::{DynamicGraph, Neighborhood, VertexId};
use crate::rules::{apply_cr, apply_sr, make_xw, match_cc, sr_targets, EditRecord};

mod canon;
mod enumerate;

pub use canon::{canonical_form, CanonicalForm};
pub use enumerate::{enumerate, enumerate_graphs, MAX_ENUMERATION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpansionKind {
    /// Vertex split, inverse of `SR`.
    SrInverse,
    /// Cube insertion into a kite, inverse of `CR`.
    CrInverse,
}

/// One expansion as applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionStep {
    pub kind: ExpansionKind,
    /// For a split, `[v, b, a, c]`: the split vertex, the neighbour handed
    /// to the new vertex and its two rotation neighbours. For a cube, the
    /// face corners in order.
    pub site: [VertexId; 4],
    pub added: ArrayVec<VertexId, 4>,
    /// Random draws consumed before this step.
    pub draws: u64,
}

/// Splits the tail of the skeleton arc `site`.
///
/// `v -> b` becomes `x -> b` for a new vertex `x` that also takes the black
/// edges to the rotation neighbours `a`, `c` of `b` and crosses `v`.
/// Invalid if `v` has degree 6 or `a` and `c` are already adjacent.
pub fn expand_sr(g: &mut DynamicGraph, s: &mut Skeleton, site: ArcId) -> Result<ExpansionStep> {
    if site as usize >= s.arc_count() {
        return Err(Error::InvalidSite("arc out of range"));
    }
    let v = s.tail(site);
    if s.degree(v) < 4 {
        return Err(Error::InvalidSite("split vertex has degree 6"));
    }
    let (p, q) = (s.rot_prev(site), s.rot_next(site));
    let (a, b, c) = (s.head(p), s.head(site), s.head(q));
    if g.has_edge(a, c) {
        return Err(Error::InvalidSite("split would create a parallel edge"));
    }
    let (w1, w2) = (s.opposite(p), s.opposite(site));
    let x = g.add_vertex();
    s.split(site, x)?;
    g.mutate_edges(
        &[(v, b), (v, w1), (v, w2)],
        &[(x, a), (x, b), (x, c), (x, v), (x, w1), (x, w2), (a, c)],
    )?;
    Ok(ExpansionStep {
        kind: ExpansionKind::SrInverse,
        site: [v, b, a, c],
        added: [x].into_iter().collect(),
        draws: 0,
    })
}

/// Inserts a crossed cube into the face of the skeleton arc `face`.
pub fn expand_cr(g: &mut DynamicGraph, s: &mut Skeleton, face: ArcId) -> Result<ExpansionStep> {
    if face as usize >= s.arc_count() {
        return Err(Error::InvalidSite("arc out of range"));
    }
    let v = s.face(face);
    let x: [VertexId; 4] = core::array::from_fn(|_| g.add_vertex());
    s.insert_cube(face, x)?;
    let mut add = Vec::with_capacity(18);
    for i in 0..4 {
        let (nx, pv, nv) = (x[(i + 1) % 4], v[(i + 3) % 4], v[(i + 1) % 4]);
        add.extend([(x[i], nx), (x[i], v[i]), (x[i], pv), (x[i], nv)]);
    }
    add.extend([(x[0], x[2]), (x[1], x[3])]);
    g.mutate_edges(&[(v[0], v[2]), (v[1], v[3])], &add)?;
    Ok(ExpansionStep {
        kind: ExpansionKind::CrInverse,
        site: v,
        added: x.into_iter().collect(),
        draws: 0,
    })
}

/// Applies the reduction that undoes `step` on `g`, the graph it produced.
pub fn reduce_step(g: &mut DynamicGraph, step: &ExpansionStep) -> Result<EditRecord> {
    let x = step.added[0];
    let nb = Neighborhood::of(g, x)?;
    match step.kind {
        ExpansionKind::SrInverse => {
            let v = step.site[0];
            let (r, _) = sr_targets(g, &nb)
                .into_iter()
                .find(|(r, _)| r.target == v)
                .ok_or(Error::InvalidSite("no star reduction onto the split vertex"))?;
            apply_sr(g, &r)
        }
        ExpansionKind::CrInverse => {
            let r = match_cc(g, &nb).ok_or(Error::InvalidSite("no crossed cube at the inserted vertices"))?;
            apply_cr(g, &r)
        }
    }
}

/// A generated optimal 1-planar graph with its embedding and history.
#[derive(Debug, Clone)]
pub struct GeneratedGraph {
    pub graph: DynamicGraph,
    pub skeleton: Skeleton,
    pub start_k: usize,
    pub log: Vec<ExpansionStep>,
    pub seed: u64,
}

impl GeneratedGraph {
    pub fn embedding(&self) -> EmbeddedGraph {
        self.skeleton.to_embedded()
    }

    pub fn uses_cr(&self) -> bool {
        self.cube_count() > 0
    }

    pub fn cube_count(&self) -> usize {
        self.log.iter().filter(|s| s.kind == ExpansionKind::CrInverse).count()
    }

    pub fn from_xw(k: usize) -> Result<Self> {
        let (graph, skeleton) = make_xw(k)?;
        Ok(GeneratedGraph {
            graph,
            skeleton,
            start_k: k,
            log: Vec::new(),
            seed: 0,
        })
    }
}

// Largest starting wheel for random graphs.
const MAX_START_K: usize = 12;

fn reachable(n: usize) -> bool {
    n >= 8 && n != 9
}

/// Counts random draws so steps can report them.
struct Draws {
    rng: ChaCha8Rng,
    used: u64,
}

impl Draws {
    fn below(&mut self, n: usize) -> usize {
        self.used += 1;
        self.rng.gen_range(0..n)
    }
}

/// A random optimal 1-planar graph on exactly `n` vertices.
///
/// Starts from `XW_2k` for a random feasible `k`, then applies a random mix
/// of splits and cube insertions at uniformly sampled valid sites.
/// Deterministic in `seed`.
pub fn random_optimal(n: usize, seed: u64) -> Result<GeneratedGraph> {
    random_optimal_with(n, seed, Mix::Any)
}

/// How [`random_optimal_with`] combines splits and cube insertions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mix {
    /// A random number of cubes in random order.
    Any,
    /// Exactly this many cubes in random order; `Cubes(0)` uses splits only.
    Cubes(usize),
    /// Exactly this many cubes, inserted after all splits. The last cube's
    /// outer cycle then still separates it from the rest.
    CubesLast(usize),
}

/// Like [`random_optimal`] with control over the cube insertions.
pub fn random_optimal_with(n: usize, seed: u64, mix: Mix) -> Result<GeneratedGraph> {
    if !reachable(n) {
        return Err(Error::UnreachableSize(n));
    }
    let mut d = Draws {
        rng: ChaCha8Rng::seed_from_u64(seed),
        used: 0,
    };
    let kmax = ((n - 2) / 2).min(MAX_START_K);
    // Whether b cubes reach n from XW_2k. XW_6 has no split site, so it
    // needs a cube before any split.
    let feasible = |k: usize, b: usize| {
        let Some(r) = n.checked_sub(2 * k + 2) else {
            return false;
        };
        if 4 * b > r {
            return false;
        }
        let splits = r - 4 * b;
        match mix {
            Mix::CubesLast(_) => k > 3 || splits == 0,
            _ => k > 3 || splits == 0 || b > 0,
        }
    };
    let ks: Vec<usize> = (3..=kmax)
        .filter(|&k| match mix {
            Mix::Cubes(b) | Mix::CubesLast(b) => feasible(k, b),
            Mix::Any => feasible(k, (n - 2 * k - 2) / 4),
        })
        .collect();
    if ks.is_empty() {
        return Err(Error::UnreachableSize(n));
    }
    let k = ks[d.below(ks.len())];
    let r = n - 2 * k - 2;
    let b = match mix {
        Mix::Cubes(b) | Mix::CubesLast(b) => b,
        Mix::Any => {
            let lo = usize::from(k == 3 && r > 0);
            lo + d.below(r / 4 - lo + 1)
        }
    };
    let a = r - 4 * b;
    let mut plan: Vec<ExpansionKind> = Vec::with_capacity(a + b);
    plan.extend(core::iter::repeat(ExpansionKind::SrInverse).take(a));
    plan.extend(core::iter::repeat(ExpansionKind::CrInverse).take(b));
    if !matches!(mix, Mix::CubesLast(_)) {
        plan.shuffle(&mut d.rng);
        d.used += 1;
        if k == 3 && a > 0 {
            let first = plan.iter().position(|&p| p == ExpansionKind::CrInverse).unwrap();
            plan.swap(0, first);
        }
    }

    let mut gen = GeneratedGraph::from_xw(k)?;
    gen.seed = seed;
    gen.log.reserve(plan.len());
    for kind in plan {
        let draws = d.used;
        let mut step = match kind {
            ExpansionKind::CrInverse => {
                let f = d.below(gen.skeleton.arc_count()) as ArcId;
                expand_cr(&mut gen.graph, &mut gen.skeleton, f)?
            }
            ExpansionKind::SrInverse => loop {
                let m = d.below(gen.skeleton.arc_count()) as ArcId;
                match expand_sr(&mut gen.graph, &mut gen.skeleton, m) {
                    Ok(st) => break st,
                    Err(Error::InvalidSite(_)) => continue,
                    Err(e) => return Err(e),
                }
            },
        };
        step.draws = draws;
        gen.log.push(step);
    }
    Ok(gen)
}

/// Replaces two disjoint edges `(a, b)`, `(c, d)` by `(a, c)`, `(b, d)`.
/// Degrees are unchanged.
pub fn mutate_2switch(g: &DynamicGraph, seed: u64) -> Result<DynamicGraph> {
    const TRIES: usize = 10_000;
    let edges = g.sorted_edges();
    if edges.len() < 2 {
        return Err(Error::NoSwitch(TRIES));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..TRIES {
        let e = edges[rng.gen_range(0..edges.len())];
        let f = edges[rng.gen_range(0..edges.len())];
        let (a, b) = if rng.gen() { e.endpoints() } else { (e.hi(), e.lo()) };
        let (c, d) = if rng.gen() { f.endpoints() } else { (f.hi(), f.lo()) };
        if a == c || a == d || b == c || b == d || g.has_edge(a, c) || g.has_edge(b, d) {
            continue;
        }
        let mut h = g.clone();
        h.mutate_edges(&[(a, b), (c, d)], &[(a, c), (b, d)])?;
        return Ok(h);
    }
    Err(Error::NoSwitch(TRIES))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::verify_embedding;
    use crate::graph::precheck;

    #[test]
    fn cube_on_xw6() {
        let mut gen = GeneratedGraph::from_xw(3).unwrap();
        expand_cr(&mut gen.graph, &mut gen.skeleton, 0).unwrap();
        assert_eq!((gen.graph.n(), gen.graph.m()), (12, 40));
        assert!(precheck(&gen.graph));
        assert_eq!(verify_embedding(&gen.graph, &gen.embedding()), Ok(()));
    }

    #[test]
    fn split_at_pole() {
        let mut gen = GeneratedGraph::from_xw(4).unwrap();
        let m = gen.skeleton.arcs(0).next().unwrap();
        expand_sr(&mut gen.graph, &mut gen.skeleton, m).unwrap();
        assert_eq!((gen.graph.n(), gen.graph.m()), (11, 36));
        assert!(precheck(&gen.graph));
        assert_eq!(verify_embedding(&gen.graph, &gen.embedding()), Ok(()));
    }

    #[test]
    fn split_at_degree_six_rejected() {
        let mut gen = GeneratedGraph::from_xw(4).unwrap();
        for m in gen.skeleton.arcs(2).collect::<Vec<_>>() {
            assert!(matches!(
                expand_sr(&mut gen.graph, &mut gen.skeleton, m),
                Err(Error::InvalidSite(_))
            ));
        }
    }

    #[test]
    fn random_graphs_have_exact_size() {
        for n in [8, 10, 11, 12, 13, 17, 40, 101] {
            for seed in 0..5 {
                let gen = random_optimal(n, seed).unwrap();
                assert_eq!(gen.graph.n(), n);
                assert!(precheck(&gen.graph), "n={n} seed={seed}");
                assert_eq!(verify_embedding(&gen.graph, &gen.embedding()), Ok(()));
            }
        }
        assert_eq!(random_optimal(9, 1).unwrap_err(), Error::UnreachableSize(9));
        assert_eq!(random_optimal(7, 1).unwrap_err(), Error::UnreachableSize(7));
    }

    #[test]
    fn random_is_deterministic() {
        let a = random_optimal(60, 3).unwrap();
        let b = random_optimal(60, 3).unwrap();
        assert_eq!(a.graph.sorted_edges(), b.graph.sorted_edges());
    }

    #[test]
    fn switch_preserves_degrees() {
        let g = random_optimal(20, 1).unwrap().graph;
        let h = mutate_2switch(&g, 5).unwrap();
        let (mut d1, mut d2) = (g.degree_sequence(), h.degree_sequence());
        d1.sort_unstable();
        d2.sort_unstable();
        assert_eq!(d1, d2);
        assert_ne!(g.sorted_edges(), h.sorted_edges());
    }
}
