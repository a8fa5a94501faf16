//! Exhaustive enumeration of small optimal 1-planar graphs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{canonical_form, expand_cr, expand_sr, CanonicalForm};
use crate::embedding::{ArcId, Skeleton};
use crate::error::{Error, Result};
use crate::graph::DynamicGraph;
use crate::rules::make_xw;

/// Largest size [`enumerate`] accepts.
pub const MAX_ENUMERATION: usize = 14;

type Level = BTreeMap<CanonicalForm, (DynamicGraph, Skeleton)>;

fn insert(level: &mut Level, g: DynamicGraph, s: Skeleton) {
    let cf = canonical_form(&g);
    level.entry(cf).or_insert((g, s));
}

/// One representative per isomorphism class of optimal 1-planar graphs on
/// `n` vertices, with an embedding.
///
/// Builds every size from 8 up to `n` as the closure of all splits and cube
/// insertions of the smaller sizes plus the extended wheel of each size.
pub fn enumerate_graphs(n: usize) -> Result<Vec<(DynamicGraph, Skeleton)>> {
    if n == 0 || n > MAX_ENUMERATION {
        return Err(Error::EnumerationRange {
            n,
            max: MAX_ENUMERATION,
        });
    }
    let mut levels: Vec<Level> = (0..=n).map(|_| Level::new()).collect();
    for m in 8..=n {
        let mut level = Level::new();
        if m % 2 == 0 {
            let (g, s) = make_xw((m - 2) / 2)?;
            insert(&mut level, g, s);
        }
        for (g, s) in levels[m - 1].values() {
            for a in 0..s.arc_count() as ArcId {
                let (mut g2, mut s2) = (g.clone(), s.clone());
                match expand_sr(&mut g2, &mut s2, a) {
                    Ok(_) => insert(&mut level, g2, s2),
                    Err(Error::InvalidSite(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        if m >= 12 {
            for (g, s) in levels[m - 4].values() {
                for f in s.faces() {
                    let (mut g2, mut s2) = (g.clone(), s.clone());
                    expand_cr(&mut g2, &mut s2, f)?;
                    insert(&mut level, g2, s2);
                }
            }
        }
        levels[m] = level;
    }
    Ok(core::mem::take(&mut levels[n]).into_values().collect())
}

/// Number of isomorphism classes of optimal 1-planar graphs on `n` vertices.
pub fn enumerate(n: usize) -> Result<usize> {
    enumerate_graphs(n).map(|v| v.len())
}
