//! The list-bank engine.

use alloc::vec;
use alloc::vec::Vec;

use arrayvec::ArrayVec;
use hashbrown::HashMap;

use super::bank::{EntryId, Kind, ListBank, Order, RedId};
use super::{conserved, touched, Failure, Options, Run, Stats};
use crate::graph::{DynamicGraph, EdgeKey, VertexId};
use crate::rules::{self, classify, Classification, EditRecord, Reduction};

struct Stored {
    red: Reduction,
    entries: ArrayVec<EntryId, 5>,
    alive: bool,
}

struct Engine<'g> {
    g: &'g mut DynamicGraph,
    bank: ListBank,
    reds: Vec<Stored>,
    free: Vec<RedId>,
    owned: Vec<Vec<RedId>>,
    cubes: HashMap<[VertexId; 4], RedId>,
    stats: Stats,
}

fn kind(r: &Reduction) -> Kind {
    if r.is_cr() {
        Kind::Cr
    } else {
        Kind::Sr
    }
}

fn owners(r: &Reduction) -> &[VertexId] {
    match r {
        Reduction::Sr(s) => core::slice::from_ref(&s.center),
        Reduction::Cr(c) => &c.inner,
    }
}

fn same_keys(a: &[EdgeKey], b: &[EdgeKey]) -> bool {
    let (mut a, mut b) = ([a[0], a[1]], [b[0], b[1]]);
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

impl Engine<'_> {
    fn store(&mut self, red: Reduction, class: Classification) {
        let Some(roles) = class.placements(red.associated().len()) else {
            return;
        };
        let id = self.free.pop().unwrap_or(self.reds.len() as RedId);
        if class == Classification::BlockedVertex {
            self.stats.vertex_blocks += 1;
        }
        let k = kind(&red);
        let mut entries = ArrayVec::new();
        for (&key, role) in red.associated().iter().zip(roles) {
            entries.push(self.bank.push(key, k, role, id));
        }
        for &v in owners(&red) {
            self.owned[v as usize].push(id);
        }
        if let Reduction::Cr(c) = red {
            self.cubes.insert(c.inner_set(), id);
        }
        let stored = Stored {
            red,
            entries,
            alive: true,
        };
        match self.reds.get_mut(id as usize) {
            Some(slot) => *slot = stored,
            None => self.reds.push(stored),
        }
    }

    fn kill(&mut self, id: RedId) {
        let s = &mut self.reds[id as usize];
        if !s.alive {
            return;
        }
        s.alive = false;
        let entries = core::mem::take(&mut s.entries);
        let red = s.red;
        for e in entries {
            self.bank.unlink(e);
        }
        for &key in red.associated() {
            self.bank.drop_if_empty(key);
        }
        if let Reduction::Cr(c) = red {
            self.cubes.remove(&c.inner_set());
            // The slot is reused, so no other owner may keep the id.
            for x in c.inner {
                self.owned[x as usize].retain(|&r| r != id);
            }
        }
        self.free.push(id);
    }

    fn remove_owned(&mut self, v: VertexId) {
        let mut ids = core::mem::take(&mut self.owned[v as usize]);
        for &id in &ids {
            self.kill(id);
        }
        // Keep the allocation.
        ids.clear();
        if self.owned[v as usize].is_empty() {
            self.owned[v as usize] = ids;
        }
    }

    /// Stores every reduction anchored at `x`.
    fn add_reductions(&mut self, x: VertexId) -> Result<(), Failure> {
        let report = match classify(self.g, x) {
            Ok(Some(r)) => r,
            Ok(None) => return Ok(()),
            Err(rej) => {
                return Err(Failure::DegreeVector {
                    center: rej.center,
                    degree_vector: rej.degree_vector,
                })
            }
        };
        if let Some((cr, class)) = report.cr {
            if self.cubes.contains_key(&cr.inner_set()) {
                return Ok(());
            }
            // A crossed cube overrules every star at its inner vertices.
            for &v in &cr.inner {
                self.remove_owned(v);
            }
            self.store(Reduction::Cr(cr), class);
        } else {
            for &(sr, class) in &report.sr {
                self.store(Reduction::Sr(sr), class);
            }
        }
        Ok(())
    }

    /// Throws away and recomputes the reductions anchored at `x`.
    fn refresh(&mut self, x: VertexId) -> Result<(), Failure> {
        self.remove_owned(x);
        self.add_reductions(x)
    }

    // The stored reduction as it classifies now, if it is still the same edit.
    fn current(&self, red: &Reduction) -> Option<Classification> {
        let center = owners(red)[0];
        let report = classify(self.g, center).ok()??;
        match red {
            Reduction::Sr(s) => report
                .sr
                .iter()
                .find(|(t, _)| t == s)
                .map(|&(_, c)| c),
            Reduction::Cr(c) => report
                .cr
                .filter(|(t, _)| t.inner_set() == c.inner_set() && same_keys(t.associated(), c.associated()))
                .map(|(_, cl)| cl),
        }
    }

    fn apply(&mut self, id: RedId) -> Result<EditRecord, Failure> {
        let red = self.reds[id as usize].red;
        match red {
            Reduction::Sr(s) => {
                let ring: ArrayVec<VertexId, 6> = self.g.neighbors(s.center).iter().copied().collect();
                self.remove_owned(s.center);
                self.remove_owned(s.target);
                let rec = rules::apply(self.g, &red).map_err(Failure::Fault)?;
                self.bank.edge_removed(EdgeKey::new(s.chord[0], s.chord[1]));
                for &a in &s.attached {
                    self.bank.edge_inserted(EdgeKey::new(s.target, a));
                }
                for &v in &ring {
                    self.bank.drop_if_empty(EdgeKey::new(s.center, v));
                }
                for &v in &ring {
                    self.refresh(v)?;
                }
                Ok(rec)
            }
            Reduction::Cr(c) => {
                for &x in &c.inner {
                    self.remove_owned(x);
                }
                let rec = rules::apply(self.g, &red).map_err(Failure::Fault)?;
                for d in [
                    EdgeKey::new(c.outer[0], c.outer[2]),
                    EdgeKey::new(c.outer[1], c.outer[3]),
                ] {
                    self.bank.edge_inserted(d);
                }
                for &v in &c.outer {
                    self.refresh(v)?;
                }
                Ok(rec)
            }
        }
    }

    fn sweep(&mut self) {
        let g = &*self.g;
        let ok = g.m() + 8 == 4 * g.n()
            && g.vertices().all(|v| g.degree(v) % 2 == 0 && g.degree(v) >= 6);
        if !ok {
            self.stats.conservation_violations += 1;
        }
        let bank_ok = self.bank.occupancy().all(|(key, _, [good, bad, wait])| {
            let present = g.has_edge(key.lo(), key.hi());
            (bad != (good || wait) || !(bad || good || wait))
                && (!(good || wait) || !present)
                && (!bad || present)
        });
        if !bank_ok {
            self.stats.bank_violations += 1;
        }
    }
}

pub(super) fn run(g: &mut DynamicGraph, opts: &Options) -> Run {
    let bound = g.id_bound();
    let mut e = Engine {
        g,
        bank: ListBank::with_capacity(bound),
        reds: Vec::with_capacity(bound),
        free: Vec::new(),
        owned: vec![Vec::new(); bound],
        cubes: HashMap::with_capacity(bound / 16),
        stats: Stats::default(),
    };
    let mut trace = Vec::new();
    let mut order = Order::new(opts.order);
    let failure = (|| {
        let cands: Vec<VertexId> = e.g.vertices().filter(|&v| e.g.degree(v) == 6).collect();
        for x in cands {
            e.stats.candidates_scanned += 1;
            if e.g.degree(x) == 6 {
                e.add_reductions(x)?;
            }
        }
        if opts.check_invariants {
            e.sweep();
        }
        while let Some(id) = e.bank.next_good(&mut order) {
            let red = e.reds[id as usize].red;
            if e.current(&red) == Some(Classification::Good) {
                let rec = e.apply(id)?;
                match rec {
                    EditRecord::Sr { .. } => e.stats.applied_sr += 1,
                    EditRecord::Cr { .. } => e.stats.applied_cr += 1,
                }
                if opts.check_invariants {
                    e.sweep();
                } else if !conserved(e.g, &touched(&rec)) {
                    e.stats.conservation_violations += 1;
                }
                trace.push(rec);
            } else {
                e.stats.unsuccessful += 1;
                for &v in owners(&red) {
                    e.refresh(v)?;
                }
                if opts.check_invariants {
                    e.sweep();
                }
            }
        }
        Ok(())
    })()
    .err();
    e.stats.renames = e.bank.renames;
    Run {
        trace,
        stats: e.stats,
        failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::make_xw;

    #[test]
    fn wheel_stores_nothing_good() {
        let (mut g, _) = make_xw(5).unwrap();
        let r = run(&mut g, &Options::default());
        assert!(r.failure.is_none());
        assert_eq!(r.stats.applied(), 0);
    }
}
