//! Bitmask adjacency used by the exact searches. Hosts handed to a solver
//! are limited to 64 vertices; everything here works on `u64` vertex sets.

use crate::graph::{Host, VertexSet};
use crate::guest::GuestClass;

pub(crate) const MAX_SOLVER_VERTICES: usize = 64;

pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn set_to_mask(s: &VertexSet) -> u64 {
    s.iter().fold(0u64, |m, &v| m | bit(v))
}

pub(crate) fn mask_to_set(mask: u64) -> VertexSet {
    iter_bits(mask).collect()
}

/// Adjacency of one host under one guest class, in mask form.
pub(crate) struct Ctx {
    pub n: usize,
    pub guest: GuestClass,
    /// Graph: distinct neighbors. Digraph: distinct out-neighbors.
    pub out: Vec<u64>,
    /// Digraph only: distinct in-neighbors.
    pub inn: Vec<u64>,
    /// Partners forming a 2-cycle: bigons (graphs) or digons (digraphs).
    pub two: Vec<u64>,
}

impl Ctx {
    /// Builds the context; the caller has already checked the guest/host
    /// kinds match and `n <= MAX_SOLVER_VERTICES`.
    pub fn build(guest: GuestClass, host: &Host) -> Ctx {
        let n = host.n();
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        let mut two = vec![0u64; n];
        match host {
            Host::Graph(g) => {
                for (u, v, m) in g.edges() {
                    out[u] |= bit(v);
                    out[v] |= bit(u);
                    if m >= 2 {
                        two[u] |= bit(v);
                        two[v] |= bit(u);
                    }
                }
            }
            Host::Digraph(d) => {
                for (u, v, _) in d.arcs() {
                    out[u] |= bit(v);
                    inn[v] |= bit(u);
                    if d.has_arc(v, u) {
                        two[u] |= bit(v);
                        two[v] |= bit(u);
                    }
                }
            }
        }
        Ctx { n, guest, out, inn, two }
    }

    /// True iff the vertices of `mask` induce an H-free sub(di)graph.
    pub fn is_free(&self, mask: u64) -> bool {
        match self.guest {
            GuestClass::SingleEdge => iter_bits(mask).all(|v| self.out[v] & mask == 0),
            GuestClass::UndirectedCycles => self.is_forest(mask),
            GuestClass::DirectedCycles => self.is_acyclic(mask),
        }
    }

    /// Forest check with multiplicities: no bigon inside, and the simple
    /// adjacency inside is acyclic (union-find).
    fn is_forest(&self, mask: u64) -> bool {
        for v in iter_bits(mask) {
            if self.two[v] & mask != 0 {
                return false;
            }
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for u in iter_bits(mask) {
            for v in iter_bits(self.out[u] & mask) {
                if v <= u {
                    continue;
                }
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru == rv {
                    return false;
                }
                parent[ru] = rv;
            }
        }
        true
    }

    /// DAG check by repeatedly discarding vertices without out-neighbors
    /// inside the mask. Digons are ordinary 2-cycles here.
    fn is_acyclic(&self, mask: u64) -> bool {
        let mut alive = mask;
        loop {
            let mut removed = false;
            for v in iter_bits(alive) {
                if self.out[v] & alive == 0 {
                    alive &= !bit(v);
                    removed = true;
                }
            }
            if alive == 0 {
                return true;
            }
            if !removed {
                return false;
            }
        }
    }
}
