//! Edge-keyed `GOOD`/`BAD`/`WAIT` lists.
//!
//! Lists are circular and doubly linked through a shared entry arena, each
//! with its own sentinel. A triple maps a role to a sentinel, so renaming a
//! role moves one index and merging two roles is a splice.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashMap;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::graph::EdgeKey;
use crate::rules::Role;

pub(crate) type EntryId = u32;
pub(crate) type RedId = u32;
pub(crate) const NIL: u32 = u32::MAX;

/// Lists for `SR` entries and for `CR` entries are kept apart so the work
/// lists can prefer `CR`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Kind {
    Sr = 0,
    Cr = 1,
}

#[derive(Clone, Copy)]
struct Entry {
    red: RedId,
    prev: EntryId,
    next: EntryId,
}

const fn slot(r: Role) -> usize {
    match r {
        Role::Good => 0,
        Role::Bad => 1,
        Role::Wait => 2,
    }
}

#[derive(Default)]
pub(crate) struct ListBank {
    entries: Vec<Entry>,
    free: Vec<EntryId>,
    triples: HashMap<(EdgeKey, Kind), [EntryId; 3]>,
    work: [VecDeque<(EntryId, EdgeKey)>; 2],
    pub renames: u64,
    live_entries: usize,
}

/// Order in which non-empty `GOOD` lists are taken from the work lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WorkOrder {
    #[default]
    Stack,
    Queue,
    /// Uniformly random among queued lists, from the given seed.
    Random(u64),
}

impl ListBank {
    /// Sized for a graph with `n` vertices.
    pub fn with_capacity(n: usize) -> Self {
        ListBank {
            entries: Vec::with_capacity(4 * n),
            triples: HashMap::with_capacity(2 * n),
            ..Default::default()
        }
    }

    fn alloc(&mut self, red: RedId) -> EntryId {
        let e = Entry {
            red,
            prev: NIL,
            next: NIL,
        };
        match self.free.pop() {
            Some(id) => {
                self.entries[id as usize] = e;
                id
            }
            None => {
                self.entries.push(e);
                (self.entries.len() - 1) as EntryId
            }
        }
    }

    fn sentinel(&mut self) -> EntryId {
        let s = self.alloc(NIL);
        self.entries[s as usize].prev = s;
        self.entries[s as usize].next = s;
        s
    }

    #[inline]
    fn is_empty_list(&self, s: EntryId) -> bool {
        self.entries[s as usize].next == s
    }

    fn list(&self, key: EdgeKey, kind: Kind, role: Role) -> EntryId {
        self.triples.get(&(key, kind)).map_or(NIL, |t| t[slot(role)])
    }

    fn queue(&mut self, s: EntryId, key: EdgeKey, kind: Kind) {
        self.work[kind as usize].push_back((s, key));
    }

    /// Appends an entry for reduction `red` to `role_key` and returns it.
    pub fn push(&mut self, key: EdgeKey, kind: Kind, role: Role, red: RedId) -> EntryId {
        let mut s = self.list(key, kind, role);
        if s == NIL {
            s = self.sentinel();
            self.triples.entry((key, kind)).or_insert([NIL; 3])[slot(role)] = s;
        }
        let was_empty = self.is_empty_list(s);
        let e = self.alloc(red);
        let last = self.entries[s as usize].prev;
        self.entries[e as usize].prev = last;
        self.entries[e as usize].next = s;
        self.entries[last as usize].next = e;
        self.entries[s as usize].prev = e;
        self.live_entries += 1;
        if role == Role::Good && was_empty {
            self.queue(s, key, kind);
        }
        e
    }

    /// Unlinks an entry. Empty lists stay until their triple is cleaned.
    pub fn unlink(&mut self, e: EntryId) {
        let Entry { prev, next, .. } = self.entries[e as usize];
        self.entries[prev as usize].next = next;
        self.entries[next as usize].prev = prev;
        self.entries[e as usize].red = NIL;
        self.free.push(e);
        self.live_entries -= 1;
    }

    /// Moves every entry of role `from` to role `to` under the same key.
    pub fn rename(&mut self, key: EdgeKey, kind: Kind, from: Role, to: Role) {
        let Some(&t) = self.triples.get(&(key, kind)) else {
            return;
        };
        let (src, dst) = (t[slot(from)], t[slot(to)]);
        if src == NIL {
            return;
        }
        self.renames += 1;
        let dst_empty = dst == NIL || self.is_empty_list(dst);
        let t = self.triples.get_mut(&(key, kind)).unwrap();
        t[slot(from)] = NIL;
        let target = if dst_empty {
            // Plain rename: the list changes role.
            t[slot(to)] = src;
            if dst != NIL {
                self.free.push(dst);
            }
            src
        } else {
            // Splice src after dst's tail.
            if !self.is_empty_list(src) {
                let (first, last) = (self.entries[src as usize].next, self.entries[src as usize].prev);
                let tail = self.entries[dst as usize].prev;
                self.entries[tail as usize].next = first;
                self.entries[first as usize].prev = tail;
                self.entries[last as usize].next = dst;
                self.entries[dst as usize].prev = last;
            }
            self.free.push(src);
            dst
        };
        if to == Role::Good && !self.is_empty_list(target) {
            self.queue(target, key, kind);
        }
    }

    /// Renames `GOOD` and `WAIT` to `BAD` for both kinds: the key edge was
    /// inserted.
    pub fn edge_inserted(&mut self, key: EdgeKey) {
        for kind in [Kind::Sr, Kind::Cr] {
            self.rename(key, kind, Role::Good, Role::Bad);
            self.rename(key, kind, Role::Wait, Role::Bad);
        }
    }

    /// Renames `BAD` to `GOOD`: the key edge was removed.
    pub fn edge_removed(&mut self, key: EdgeKey) {
        for kind in [Kind::Sr, Kind::Cr] {
            self.rename(key, kind, Role::Bad, Role::Good);
        }
    }

    /// Drops the triples of a key whose lists are all empty.
    pub fn drop_if_empty(&mut self, key: EdgeKey) -> bool {
        let mut all = true;
        for kind in [Kind::Sr, Kind::Cr] {
            if let Some(t) = self.triples.get(&(key, kind)) {
                if t.iter().all(|&s| s == NIL || self.is_empty_list(s)) {
                    let t = self.triples.remove(&(key, kind)).unwrap();
                    self.free.extend(t.into_iter().filter(|&s| s != NIL));
                } else {
                    all = false;
                }
            }
        }
        all
    }

    /// The front entry of some non-empty `GOOD` list, `CR` lists first.
    pub fn next_good(&mut self, order: &mut Order) -> Option<RedId> {
        for kind in [Kind::Cr, Kind::Sr] {
            loop {
                let len = self.work[kind as usize].len();
                if len == 0 {
                    break;
                }
                let i = order.pick(len);
                let (s, key) = self.work[kind as usize][i];
                if self.list(key, kind, Role::Good) == s && !self.is_empty_list(s) {
                    let e = self.entries[s as usize].next;
                    return Some(self.entries[e as usize].red);
                }
                self.work[kind as usize].swap_remove_back(i);
            }
        }
        None
    }

    #[cfg(test)]
    pub fn live_entries(&self) -> usize {
        self.live_entries
    }

    /// Reductions stored under each role of a key.
    #[cfg(test)]
    pub fn members(&self, key: EdgeKey, kind: Kind, role: Role) -> Vec<RedId> {
        let s = self.list(key, kind, role);
        let mut out = Vec::new();
        if s == NIL {
            return out;
        }
        let mut e = self.entries[s as usize].next;
        while e != s {
            out.push(self.entries[e as usize].red);
            e = self.entries[e as usize].next;
        }
        out
    }

    /// Non-empty roles per key, for invariant sweeps.
    pub fn occupancy(&self) -> impl Iterator<Item = (EdgeKey, Kind, [bool; 3])> + '_ {
        self.triples.iter().map(|(&(key, kind), t)| {
            (
                key,
                kind,
                t.map(|s| s != NIL && !self.is_empty_list(s)),
            )
        })
    }
}

/// Selection state for the work lists.
pub(crate) struct Order {
    order: WorkOrder,
    rng: Option<ChaCha8Rng>,
}

impl Order {
    pub fn new(order: WorkOrder) -> Self {
        use rand::SeedableRng;
        let rng = match order {
            WorkOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Order { order, rng }
    }

    fn pick(&mut self, len: usize) -> usize {
        match self.order {
            WorkOrder::Stack => len - 1,
            WorkOrder::Queue => 0,
            WorkOrder::Random(_) => self.rng.as_mut().unwrap().gen_range(0..len),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: u32, b: u32) -> EdgeKey {
        EdgeKey::new(a, b)
    }

    #[test]
    fn push_rename_merge() {
        let mut b = ListBank::default();
        let mut o = Order::new(WorkOrder::Stack);
        b.push(k(1, 2), Kind::Sr, Role::Wait, 7);
        b.push(k(1, 2), Kind::Sr, Role::Good, 8);
        assert_eq!(b.next_good(&mut o), Some(8));
        b.edge_inserted(k(1, 2));
        assert_eq!(b.members(k(1, 2), Kind::Sr, Role::Bad), [8, 7]);
        assert!(b.members(k(1, 2), Kind::Sr, Role::Good).is_empty());
        assert_eq!(b.next_good(&mut o), None);
        b.edge_removed(k(1, 2));
        assert_eq!(b.next_good(&mut o), Some(8));
        assert_eq!(b.renames, 3);
    }

    #[test]
    fn cr_lists_come_first() {
        let mut b = ListBank::default();
        let mut o = Order::new(WorkOrder::Queue);
        b.push(k(1, 2), Kind::Sr, Role::Good, 1);
        b.push(k(3, 4), Kind::Cr, Role::Good, 2);
        assert_eq!(b.next_good(&mut o), Some(2));
    }

    #[test]
    fn unlink_empties_and_drops() {
        let mut b = ListBank::default();
        let e = b.push(k(1, 2), Kind::Sr, Role::Good, 1);
        assert!(!b.drop_if_empty(k(1, 2)));
        b.unlink(e);
        assert_eq!(b.live_entries(), 0);
        assert!(b.drop_if_empty(k(1, 2)));
        assert_eq!(b.occupancy().count(), 0);
    }
}
