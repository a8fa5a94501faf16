//! Canonical labelling by colour refinement and individualization.
//!
//! Exhaustive over the search tree without automorphism pruning, which is
//! fine for the small graphs it is used on.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::DynamicGraph;

/// Isomorphism certificate: equal iff the graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }
}

struct Canon {
    n: usize,
    adj: Vec<Vec<usize>>,
    mat: Vec<bool>,
    best: Option<Vec<u64>>,
}

impl Canon {
    fn refine(&self, colors: &mut [u32]) {
        let mut classes = count_classes(colors);
        loop {
            let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..self.n)
                .map(|v| {
                    let mut s: Vec<u32> = self.adj[v].iter().map(|&u| colors[u]).collect();
                    s.sort_unstable();
                    (colors[v], s, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut rank = 0u32;
            for i in 0..sigs.len() {
                if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                    rank += 1;
                }
                colors[sigs[i].2] = rank;
            }
            let now = rank as usize + 1;
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn search(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        let mut count = vec![0u32; self.n];
        for &c in &colors {
            count[c as usize] += 1;
        }
        let Some(cell) = (0..self.n).find(|&c| count[c] > 1) else {
            self.leaf(&colors);
            return;
        };
        let cell = cell as u32;
        for v in 0..self.n {
            if colors[v] != cell {
                continue;
            }
            let mut c2 = colors.clone();
            for (u, c) in c2.iter_mut().enumerate() {
                if *c > cell || (*c == cell && u != v) {
                    *c += 1;
                }
            }
            self.search(c2);
        }
    }

    fn leaf(&mut self, pos: &[u32]) {
        let mut at = vec![0usize; self.n];
        for (v, &p) in pos.iter().enumerate() {
            at[p as usize] = v;
        }
        let mut bits = vec![0u64; (self.n * self.n.saturating_sub(1) / 2).div_ceil(64)];
        let mut k = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                // Complemented so that the minimum puts edges first.
                if !self.mat[at[i] * self.n + at[j]] {
                    bits[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        if self.best.as_ref().map_or(true, |b| bits < *b) {
            self.best = Some(bits);
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Computes the canonical form of the live part of `g`.
pub fn canonical_form(g: &DynamicGraph) -> CanonicalForm {
    let (h, _) = g.compacted();
    let n = h.n();
    let mut mat = vec![false; n * n];
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            h.neighbors(v as u32)
                .iter()
                .map(|&u| {
                    mat[v * n + u as usize] = true;
                    u as usize
                })
                .collect()
        })
        .collect();
    let mut c = Canon {
        n,
        adj,
        mat,
        best: None,
    };
    c.search(vec![0; n]);
    CanonicalForm {
        n,
        bits: c.best.unwrap_or_default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::mutate_2switch;
    use crate::rules::make_xw;

    fn relabel(g: &DynamicGraph, perm: &[u32]) -> DynamicGraph {
        let e: Vec<_> = g
            .sorted_edges()
            .into_iter()
            .map(|e| (perm[e.lo() as usize], perm[e.hi() as usize]))
            .collect();
        DynamicGraph::from_edges(g.id_bound(), &e).unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        let (g, _) = make_xw(5).unwrap();
        let perm = [7, 3, 11, 0, 5, 9, 1, 10, 2, 8, 4, 6];
        assert_eq!(canonical_form(&g), canonical_form(&relabel(&g, &perm)));
    }

    #[test]
    fn separates_switched_graph() {
        let (g, _) = make_xw(4).unwrap();
        let h = mutate_2switch(&g, 2).unwrap();
        assert_ne!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn path_versus_star() {
        let p = DynamicGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = DynamicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let q = DynamicGraph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_ne!(canonical_form(&p), canonical_form(&s));
        assert_eq!(canonical_form(&p), canonical_form(&q));
    }
}
