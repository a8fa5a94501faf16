//! Extended wheel graphs `XW_2k`, the irreducible end points of a reduction.

use alloc::vec;
use alloc::vec::Vec;

use crate::embedding::Skeleton;
use crate::error::{Error, Result};
use crate::graph::{DynamicGraph, VertexId};

/// An identified extended wheel graph.
///
/// `cycle` lists `v1..v2k` in order; pole `poles[0]` is black-adjacent to
/// `v2, v4, ...` and `poles[1]` to `v1, v3, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XwMatch {
    pub k: usize,
    pub poles: [VertexId; 2],
    pub cycle: Vec<VertexId>,
}

impl XwMatch {
    /// The pseudo-double wheel skeleton with this labelling.
    pub fn skeleton(&self, id_bound: usize) -> Skeleton {
        let [p, q] = self.poles;
        let c = &self.cycle;
        let len = c.len();
        let at = |i: usize| c[i % len];
        let mut rotations: Vec<(VertexId, Vec<VertexId>)> = Vec::with_capacity(len + 2);
        // Cycle on a circle counter-clockwise, p inside, q outside.
        rotations.push((p, (0..len / 2).map(|i| at(2 * i + 1)).collect()));
        rotations.push((q, (0..len / 2).rev().map(|i| at(2 * i)).collect()));
        for j in 0..len {
            let (succ, pred) = (at(j + 1), at(j + len - 1));
            // Position j holds v_{j+1}: odd index means even label.
            let rot = if j % 2 == 1 {
                vec![succ, p, pred]
            } else {
                vec![q, succ, pred]
            };
            rotations.push((c[j], rot));
        }
        Skeleton::from_rotations(id_bound, &rotations).expect("pseudo-double wheel is well formed")
    }

    /// Every labelling of the same graph whose skeleton differs.
    ///
    /// For `k >= 4` the poles are fixed and only their parity can swap. For
    /// `XW_6` any non-adjacent pair can serve as poles and the remaining
    /// pairs can be arranged on the cycle in several ways.
    pub fn variants(&self) -> Vec<XwMatch> {
        if self.k > 3 {
            let mut other = self.clone();
            other.poles.swap(0, 1);
            return vec![self.clone(), other];
        }
        let c = &self.cycle;
        let pairs = [self.poles, [c[0], c[3]], [c[1], c[4]], [c[2], c[5]]];
        let mut out = vec![self.clone()];
        for (pi, pole) in pairs.iter().enumerate() {
            let rest: Vec<[VertexId; 2]> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != pi)
                .map(|(_, &p)| p)
                .collect();
            // v1 = rest[0][0]; v2 from the other pairs in either orientation.
            for (b, cpair) in [(1, 2), (2, 1)] {
                for flip_b in [false, true] {
                    for flip_c in [false, true] {
                        let pb = if flip_b { [rest[b][1], rest[b][0]] } else { rest[b] };
                        let pc = if flip_c { [rest[cpair][1], rest[cpair][0]] } else { rest[cpair] };
                        let cycle = vec![rest[0][0], pb[0], pc[0], rest[0][1], pb[1], pc[1]];
                        for poles in [*pole, [pole[1], pole[0]]] {
                            out.push(XwMatch {
                                k: 3,
                                poles,
                                cycle: cycle.clone(),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// All edges of `XW_2k` under this labelling.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let [p, q] = self.poles;
        let len = self.cycle.len();
        let at = |i: usize| self.cycle[i % len];
        let mut e = Vec::with_capacity(4 * len);
        for j in 0..len {
            e.push((at(j), at(j + 1)));
            e.push((at(j), at(j + 2)));
            e.push((p, at(j)));
            e.push((q, at(j)));
        }
        e
    }
}

/// Builds `XW_2k`: poles `0` and `1`, cycle vertices `2..2k+2`.
pub fn make_xw(k: usize) -> Result<(DynamicGraph, Skeleton)> {
    if k < 3 {
        return Err(Error::WheelTooSmall(k));
    }
    let m = XwMatch {
        k,
        poles: [0, 1],
        cycle: (2..2 * k as VertexId + 2).collect(),
    };
    let g = DynamicGraph::from_edges(2 * k + 2, &m.edges())?;
    let s = m.skeleton(2 * k + 2);
    Ok((g, s))
}

/// Recognizes `XW_2k` in `O(n)` and recovers a labelling.
pub fn detect_xw(g: &DynamicGraph) -> Option<XwMatch> {
    let n = g.n();
    if n < 8 || n % 2 == 1 || g.m() + 8 != 4 * n {
        return None;
    }
    if n == 8 {
        return detect_xw6(g);
    }
    let k = (n - 2) / 2;
    let mut poles = [VertexId::MAX; 2];
    let mut np = 0;
    for v in g.vertices() {
        match g.degree(v) {
            6 => {}
            d if d == 2 * k && np < 2 => {
                poles[np] = v;
                np += 1;
            }
            _ => return None,
        }
    }
    if np != 2 || g.has_edge(poles[0], poles[1]) {
        return None;
    }
    let is_pole = |v: VertexId| v == poles[0] || v == poles[1];
    // Around v the cycle neighbours induce the path v-2, v-1, v+1, v+2.
    let ring_path = |v: VertexId| -> Option<[VertexId; 2]> {
        let mut s = [0 as VertexId; 4];
        let mut ns = 0;
        for &u in g.neighbors(v) {
            if !is_pole(u) {
                if ns == 4 {
                    return None;
                }
                s[ns] = u;
                ns += 1;
            }
        }
        if ns != 4 {
            return None;
        }
        let mut inner = [0 as VertexId; 2];
        let mut ni = 0;
        for i in 0..4 {
            let deg = (0..4).filter(|&j| j != i && g.has_edge(s[i], s[j])).count();
            if deg == 2 {
                if ni == 2 {
                    return None;
                }
                inner[ni] = s[i];
                ni += 1;
            }
        }
        (ni == 2).then_some(inner)
    };
    let start = g.vertices().find(|&v| !is_pole(v))?;
    let mut cycle = Vec::with_capacity(2 * k);
    cycle.push(start);
    let mut prev = start;
    let mut cur = ring_path(start)?[0];
    while cur != start {
        if cycle.len() >= 2 * k {
            return None;
        }
        cycle.push(cur);
        let [a, b] = ring_path(cur)?;
        let next = if a == prev {
            b
        } else if b == prev {
            a
        } else {
            return None;
        };
        prev = cur;
        cur = next;
    }
    if cycle.len() != 2 * k {
        return None;
    }
    let m = XwMatch { k, poles, cycle };
    // The edge count matches, so containment of every wheel edge is equality.
    m.edges()
        .iter()
        .all(|&(a, b)| g.has_edge(a, b))
        .then_some(m)
}

// XW_6 is K_8 minus a perfect matching.
fn detect_xw6(g: &DynamicGraph) -> Option<XwMatch> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let mut partner = vec![VertexId::MAX; g.id_bound()];
    for &v in &vs {
        if g.degree(v) != 6 {
            return None;
        }
        let mut miss = vs.iter().copied().filter(|&u| u != v && !g.has_edge(u, v));
        let u = miss.next()?;
        if miss.next().is_some() {
            return None;
        }
        partner[v as usize] = u;
    }
    let (p, q) = (vs[0], partner[vs[0] as usize]);
    let mut rest: Vec<VertexId> = Vec::with_capacity(3);
    for &v in &vs {
        if v != p && v != q && !rest.iter().any(|&r| partner[r as usize] == v) {
            rest.push(v);
        }
    }
    if rest.len() != 3 {
        return None;
    }
    // v_i and v_{i+3} are the non-adjacent pairs of the cycle.
    let mut cycle = rest.clone();
    cycle.extend(rest.iter().map(|&r| partner[r as usize]));
    Some(XwMatch {
        k: 3,
        poles: [p, q],
        cycle,
    })
}
