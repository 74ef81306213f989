//! Exact solvers for every parameter, with certificates, plus brute-force
//! oracles used to validate the searches.
//!
//! Parameters, per guest class H: `chi_h` (minimum H-free partition),
//! `psi_h` (maximum complete H-free partition), `tau_h` (minimum deletion
//! set), `nu_h` (maximum vertex-disjoint packing) and `dac` (diachromatic
//! number of a digraph). Searches are deterministic: fixed branch orders,
//! incumbents replaced only on strict improvement. Every search honours a
//! node budget and reports exhaustion as an error distinct from a value.

use std::collections::BTreeMap;

use crate::coloring::{verify_complete, CompletenessCertificate, Partition};
use crate::graph::{Host, MultiDigraph, VertexSet};
use crate::guest::{find_h_witness, GuestClass, GuestError, HWitness};
use crate::mask::{bit, iter_bits, mask_to_set, set_to_mask, Ctx, MAX_SOLVER_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("search budget exhausted after {nodes} nodes")]
    Budget { nodes: u64 },
    #[error("host with {n} vertices exceeds the exact-solver limit of {max}")]
    HostTooLarge { n: usize, max: usize },
    #[error("host with {n} vertices exceeds the oracle limit of {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error(transparent)]
    Guest(#[from] GuestError),
}

/// Limits for the exact searches.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Maximum number of search nodes before a solver gives up.
    pub node_limit: u64,
    /// Maximum host size the exhaustive oracles accept.
    pub oracle_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_limit: 50_000_000, oracle_limit: 10 }
    }
}

pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn tick(&mut self) -> Result<(), SolverError> {
        self.used += 1;
        if self.used > self.limit {
            Err(SolverError::Budget { nodes: self.used })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Search,
    Oracle,
}

/// Optimality evidence attached to a computed value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// For chi/psi: the partition and one witness per block pair.
    Coloring { partition: Partition, completeness: CompletenessCertificate },
    /// For tau: a minimum deletion set.
    FeedbackSet(VertexSet),
    /// For nu: a maximum list of vertex-disjoint induced members.
    Packing(Vec<HWitness>),
    /// For dac: the partition plus, for every ordered class pair (i, j),
    /// an arc (tail, head) with tail in class j and head in class i.
    Diachromatic { partition: Partition, arc_table: BTreeMap<(usize, usize), (usize, usize)> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamResult {
    pub value: usize,
    pub method: Method,
    pub evidence: Evidence,
    /// Search nodes expended, including subsidiary computations.
    pub nodes: u64,
}

fn check_kind(h: GuestClass, host: &Host) -> Result<(), SolverError> {
    if h.host_kind() == host.kind() {
        Ok(())
    } else {
        Err(GuestError::KindMismatch { guest: h, expected: h.host_kind(), found: host.kind() }
            .into())
    }
}

fn check_size(n: usize) -> Result<(), SolverError> {
    if n > MAX_SOLVER_VERTICES {
        Err(SolverError::HostTooLarge { n, max: MAX_SOLVER_VERTICES })
    } else {
        Ok(())
    }
}

fn empty_coloring(method: Method) -> ParamResult {
    ParamResult {
        value: 0,
        method,
        evidence: Evidence::Coloring {
            partition: Partition::new(0, vec![]).unwrap(),
            completeness: CompletenessCertificate { witnesses: BTreeMap::new() },
        },
        nodes: 0,
    }
}

fn coloring_evidence(h: GuestClass, host: &Host, partition: Partition) -> Evidence {
    let completeness = verify_complete(h, host, &partition)
        .expect("an optimal coloring must verify as proper and complete");
    Evidence::Coloring { partition, completeness }
}

/// Minimum number of H-free blocks in a partition of the host, with a
/// witness coloring (which is necessarily complete).
pub fn chi_h(h: GuestClass, host: &Host, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    check_kind(h, host)?;
    if host.n() == 0 {
        return Ok(empty_coloring(Method::Search));
    }
    let singletons = Partition::singletons(host.n());
    let (k, partition, nodes) =
        crate::coloring::constrained_chi_counted(h, host, &singletons, cfg).map_err(|e| match e {
            crate::coloring::ColoringError::Solver(s) => s,
            crate::coloring::ColoringError::Guest(g) => SolverError::Guest(g),
            other => unreachable!("singleton blocks are always H-free: {other}"),
        })?;
    Ok(ParamResult {
        value: k,
        method: Method::Search,
        evidence: coloring_evidence(h, host, partition),
        nodes,
    })
}

/// Greedy merge completion on block masks: merge the first pair (by lowest
/// element) with an H-free union until no pair qualifies. Used to seed the
/// maximization searches with a complete coloring.
fn greedy_masks(ctx: &Ctx) -> Vec<u64> {
    let mut blocks: Vec<u64> = (0..ctx.n).map(bit).collect();
    'merge: loop {
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if ctx.is_free(blocks[i] | blocks[j]) {
                    let merged = blocks[i] | blocks[j];
                    blocks.remove(j);
                    blocks[i] = merged;
                    blocks.sort_by_key(|b| b.trailing_zeros());
                    continue 'merge;
                }
            }
        }
        return blocks;
    }
}

fn partition_from_masks(n: usize, blocks: &[u64]) -> Partition {
    let mut labels = vec![0usize; n];
    for (i, &b) in blocks.iter().enumerate() {
        for v in iter_bits(b) {
            labels[v] = i;
        }
    }
    Partition::from_assignment(&labels)
}

/// Maximum number of blocks of a proper and complete H-partition (the
/// adichromatic number, a-vertex arboricity or achromatic number depending
/// on the guest), with a certified witness coloring.
///
/// Branch and bound over restricted-growth assignments: vertex 0 goes to
/// block 0 and block indices appear in first-use order. Pruned by the
/// `tau_h + 1` cap, by the incumbent (a greedy completion seeds it), and —
/// near the leaves — by block pairs that can no longer become incomplete.
pub fn psi_h(h: GuestClass, host: &Host, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    check_kind(h, host)?;
    let n = host.n();
    if n == 0 {
        return Ok(empty_coloring(Method::Search));
    }
    check_size(n)?;
    let ctx = Ctx::build(h, host);
    let tau = tau_h(h, host, cfg)?;
    let cap = (tau.value + 1).min(n);

    let seed = greedy_masks(&ctx);
    let mut best_k = seed.len();
    let mut best = seed;
    debug_assert!(best_k <= cap);

    let mut budget = Budget::new(cfg.node_limit);
    if best_k < cap {
        let full = if n == 64 { u64::MAX } else { bit(n) - 1 };
        psi_search(&ctx, cap, full, 0, &mut Vec::new(), &mut best_k, &mut best, &mut budget)?;
    }

    let partition = partition_from_masks(n, &best);
    Ok(ParamResult {
        value: best_k,
        method: Method::Search,
        evidence: coloring_evidence(h, host, partition),
        nodes: budget.used() + tau.nodes,
    })
}

fn all_pairs_cyclic(ctx: &Ctx, blocks: &[u64]) -> bool {
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if ctx.is_free(blocks[i] | blocks[j]) {
                return false;
            }
        }
    }
    true
}

#[allow(clippy::too_many_arguments)]
fn psi_search(
    ctx: &Ctx,
    cap: usize,
    full: u64,
    v: usize,
    blocks: &mut Vec<u64>,
    best_k: &mut usize,
    best: &mut Vec<u64>,
    budget: &mut Budget,
) -> Result<(), SolverError> {
    budget.tick()?;
    let n = ctx.n;
    if v == n {
        if blocks.len() > *best_k && all_pairs_cyclic(ctx, blocks) {
            *best_k = blocks.len();
            *best = blocks.clone();
        }
        return Ok(());
    }
    if blocks.len() + (n - v) <= *best_k {
        return Ok(());
    }
    // A pair whose union stays H-free even after absorbing every
    // unassigned vertex can never become incomplete.
    if n - v <= 4 && blocks.len() >= 2 {
        let assigned = if v == 64 { u64::MAX } else { bit(v) - 1 };
        let rest = full & !assigned;
        for i in 0..blocks.len() {
            for j in i + 1..blocks.len() {
                if ctx.is_free(blocks[i] | blocks[j] | rest) {
                    return Ok(());
                }
            }
        }
    }
    for b in 0..blocks.len() {
        if ctx.is_free(blocks[b] | bit(v)) {
            let old = blocks[b];
            blocks[b] |= bit(v);
            psi_search(ctx, cap, full, v + 1, blocks, best_k, best, budget)?;
            blocks[b] = old;
        }
    }
    if blocks.len() < cap {
        blocks.push(bit(v));
        psi_search(ctx, cap, full, v + 1, blocks, best_k, best, budget)?;
        blocks.pop();
    }
    Ok(())
}

/// Minimum size of a vertex set whose deletion leaves the host H-free
/// (feedback vertex set for cycle guests, vertex cover for the edge
/// guest), together with the set. Subsets are enumerated by increasing
/// size starting from a greedy disjoint-packing lower bound; the first
/// H-free complement wins.
pub fn tau_h(h: GuestClass, host: &Host, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    check_kind(h, host)?;
    let n = host.n();
    if n == 0 {
        return Ok(ParamResult {
            value: 0,
            method: Method::Search,
            evidence: Evidence::FeedbackSet(VertexSet::new()),
            nodes: 0,
        });
    }
    check_size(n)?;
    let ctx = Ctx::build(h, host);
    let full = if n == 64 { u64::MAX } else { bit(n) - 1 };

    let mut lb = 0usize;
    let mut rem = full;
    while let Some(w) = find_h_witness(h, host, &mask_to_set(rem))? {
        lb += 1;
        rem &= !set_to_mask(&w.vertex_set());
    }

    let mut budget = Budget::new(cfg.node_limit);
    for s in lb..=n {
        if let Some(f) = first_free_complement(&ctx, full, n, s, &mut budget)? {
            return Ok(ParamResult {
                value: s,
                method: Method::Search,
                evidence: Evidence::FeedbackSet(mask_to_set(f)),
                nodes: budget.used(),
            });
        }
    }
    unreachable!("deleting every vertex always leaves an H-free host")
}

/// First size-`s` subset (in lexicographic index order) whose complement
/// is H-free.
fn first_free_complement(
    ctx: &Ctx,
    full: u64,
    n: usize,
    s: usize,
    budget: &mut Budget,
) -> Result<Option<u64>, SolverError> {
    if s == 0 {
        budget.tick()?;
        return Ok(if ctx.is_free(full) { Some(0) } else { None });
    }
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        budget.tick()?;
        let fmask = idx.iter().fold(0u64, |m, &i| m | bit(i));
        if ctx.is_free(full & !fmask) {
            return Ok(Some(fmask));
        }
        // next combination, lexicographic
        let mut i = s;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if idx[i] != i + n - s {
                break;
            }
        }
        if idx[i] == i + n - s {
            return Ok(None);
        }
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Maximum number of vertex-disjoint members of H in the host, with the
/// packing. The `induced` flag selects between packing induced members and
/// packing arbitrary ones; for the built-in guest classes the two coincide
/// (any member's vertex set contains an induced member), so the flag only
/// documents the reading — witnesses returned are always induced.
///
/// Branching: take the smallest vertex that lies on some member; either it
/// is unused by the packing (drop it) or its member is one of the induced
/// members through it (take each in turn).
pub fn nu_h(
    h: GuestClass,
    host: &Host,
    _induced: bool,
    cfg: &SolverConfig,
) -> Result<ParamResult, SolverError> {
    check_kind(h, host)?;
    let n = host.n();
    if n == 0 {
        return Ok(ParamResult {
            value: 0,
            method: Method::Search,
            evidence: Evidence::Packing(vec![]),
            nodes: 0,
        });
    }
    check_size(n)?;
    let ctx = Ctx::build(h, host);
    let full = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut budget = Budget::new(cfg.node_limit);
    let (value, packing) = pack(&ctx, full, &mut budget)?;
    Ok(ParamResult {
        value,
        method: Method::Search,
        evidence: Evidence::Packing(packing),
        nodes: budget.used(),
    })
}

fn pack(ctx: &Ctx, mask: u64, budget: &mut Budget) -> Result<(usize, Vec<HWitness>), SolverError> {
    budget.tick()?;
    // Vertices on no member are useless for packing and get dropped; the
    // pivot is the smallest vertex carrying a member.
    let mut mask = mask;
    let mut found = None;
    for v in iter_bits(mask) {
        let members = members_through(ctx, v, mask);
        if members.is_empty() {
            mask &= !bit(v);
        } else {
            found = Some((v, members));
            break;
        }
    }
    let Some((pivot, members)) = found else {
        return Ok((0, vec![]));
    };
    // pivot unused by the packing
    let mut best = pack(ctx, mask & !bit(pivot), budget)?;
    // or its member is one of the induced members through it
    for (mmask, w) in members {
        let (c, mut rest) = pack(ctx, mask & !mmask, budget)?;
        if 1 + c > best.0 {
            rest.insert(0, w);
            best = (1 + c, rest);
        }
    }
    Ok(best)
}

/// All induced members of the guest through `v` inside `mask`, as
/// (vertex mask, witness) pairs, in a deterministic order.
fn members_through(ctx: &Ctx, v: usize, mask: u64) -> Vec<(u64, HWitness)> {
    let mut out = Vec::new();
    match ctx.guest {
        GuestClass::SingleEdge => {
            for w in iter_bits(ctx.out[v] & mask) {
                out.push((bit(v) | bit(w), HWitness::Edge(v.min(w), v.max(w))));
            }
        }
        GuestClass::UndirectedCycles | GuestClass::DirectedCycles => {
            let directed = ctx.guest == GuestClass::DirectedCycles;
            for w in iter_bits(ctx.two[v] & mask) {
                let kind = if directed {
                    crate::graph::CycleKind::Directed
                } else {
                    crate::graph::CycleKind::Undirected
                };
                out.push((
                    bit(v) | bit(w),
                    HWitness::Cycle(crate::graph::CycleWitness { vertices: vec![v, w], kind }),
                ));
            }
            let mut path = vec![v];
            extend_chordless(ctx, mask, &mut path, bit(v), &mut out);
        }
    }
    out
}

/// DFS enumeration of chordless cycles of length >= 3 through `path[0]`,
/// extending an induced path. Undirected cycles are emitted once by
/// requiring the second vertex to be smaller than the last.
fn extend_chordless(
    ctx: &Ctx,
    mask: u64,
    path: &mut Vec<usize>,
    pmask: u64,
    out: &mut Vec<(u64, HWitness)>,
) {
    let directed = ctx.guest == GuestClass::DirectedCycles;
    let v0 = path[0];
    let last = *path.last().unwrap();
    for w in iter_bits(ctx.out[last] & mask & !pmask) {
        if directed {
            // Only the arc from `last` may enter w; w may only leave
            // toward v0 (closing) or outside the path.
            if ctx.inn[w] & pmask != bit(last) {
                continue;
            }
            let back = ctx.out[w] & pmask;
            if back & !bit(v0) != 0 {
                continue;
            }
            if back == bit(v0) {
                // Closing arc; a digon is enumerated separately, and any
                // extension past w would keep the chord to v0.
                if path.len() >= 2 {
                    let mut cycle = path.clone();
                    cycle.push(w);
                    out.push((
                        pmask | bit(w),
                        HWitness::Cycle(crate::graph::CycleWitness {
                            vertices: cycle,
                            kind: crate::graph::CycleKind::Directed,
                        }),
                    ));
                }
                continue;
            }
        } else {
            if ctx.two[last] & bit(w) != 0 {
                continue; // heavy cycle edge would hide a bigon
            }
            if path.len() >= 2 {
                // w may touch the path only at `last` and (when closing) v0.
                let touch = ctx.out[w] & pmask;
                if touch & !(bit(last) | bit(v0)) != 0 {
                    continue;
                }
                if touch & bit(v0) != 0 {
                    // Closing edge; extending past w would keep the chord.
                    if ctx.two[w] & bit(v0) == 0 && path[1] < w {
                        let mut cycle = path.clone();
                        cycle.push(w);
                        out.push((
                            pmask | bit(w),
                            HWitness::Cycle(crate::graph::CycleWitness {
                                vertices: cycle,
                                kind: crate::graph::CycleKind::Undirected,
                            }),
                        ));
                    }
                    continue;
                }
            }
            // At path length 1 the adjacency to v0 == last is the path
            // edge itself, so w always extends.
        }
        path.push(w);
        extend_chordless(ctx, mask, path, pmask | bit(w), out);
        path.pop();
    }
}

/// The diachromatic number of a digraph: the maximum number of acyclic
/// classes such that every ordered class pair (i, j) is realized by an arc
/// with head in class i and tail in class j. Search mirrors `psi_h`, with
/// the arc-table completeness condition at the leaves; a greedy complete
/// acyclic coloring seeds the incumbent (any such coloring realizes both
/// directions of every pair).
pub fn dac(d: &MultiDigraph, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    let n = d.n();
    if n == 0 {
        return Ok(ParamResult {
            value: 0,
            method: Method::Search,
            evidence: Evidence::Diachromatic {
                partition: Partition::new(0, vec![]).unwrap(),
                arc_table: BTreeMap::new(),
            },
            nodes: 0,
        });
    }
    check_size(n)?;
    let host = Host::Digraph(d.clone());
    let ctx = Ctx::build(GuestClass::DirectedCycles, &host);
    let pairs = d.distinct_pair_count();
    let mut cap = 1usize;
    while cap < n && (cap + 1) * cap <= pairs {
        cap += 1;
    }

    let seed = greedy_masks(&ctx);
    let mut best_k = seed.len();
    let mut best = seed;
    let mut budget = Budget::new(cfg.node_limit);
    if best_k < cap {
        dac_search(&ctx, cap, 0, &mut Vec::new(), &mut best_k, &mut best, &mut budget)?;
    }

    let partition = partition_from_masks(n, &best);
    let arc_table = dac_table(d, &partition)
        .expect("the incumbent partition realizes every ordered pair");
    Ok(ParamResult {
        value: best_k,
        method: Method::Search,
        evidence: Evidence::Diachromatic { partition, arc_table },
        nodes: budget.used(),
    })
}

fn dac_pairs_ok(ctx: &Ctx, blocks: &[u64]) -> bool {
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let ij = iter_bits(blocks[i]).any(|u| ctx.out[u] & blocks[j] != 0);
            if !ij {
                return false;
            }
            let ji = iter_bits(blocks[j]).any(|u| ctx.out[u] & blocks[i] != 0);
            if !ji {
                return false;
            }
        }
    }
    true
}

fn dac_search(
    ctx: &Ctx,
    cap: usize,
    v: usize,
    blocks: &mut Vec<u64>,
    best_k: &mut usize,
    best: &mut Vec<u64>,
    budget: &mut Budget,
) -> Result<(), SolverError> {
    budget.tick()?;
    let n = ctx.n;
    if v == n {
        if blocks.len() > *best_k && dac_pairs_ok(ctx, blocks) {
            *best_k = blocks.len();
            *best = blocks.clone();
        }
        return Ok(());
    }
    if blocks.len() + (n - v) <= *best_k {
        return Ok(());
    }
    for b in 0..blocks.len() {
        if ctx.is_free(blocks[b] | bit(v)) {
            let old = blocks[b];
            blocks[b] |= bit(v);
            dac_search(ctx, cap, v + 1, blocks, best_k, best, budget)?;
            blocks[b] = old;
        }
    }
    if blocks.len() < cap {
        blocks.push(bit(v));
        dac_search(ctx, cap, v + 1, blocks, best_k, best, budget)?;
        blocks.pop();
    }
    Ok(())
}

/// Builds the ordered-pair arc table for a partition: entry (i, j) holds
/// the lexicographically first arc (tail, head) with tail in class j and
/// head in class i. `None` if some ordered pair is unrealized.
pub fn dac_table(
    d: &MultiDigraph,
    p: &Partition,
) -> Option<BTreeMap<(usize, usize), (usize, usize)>> {
    let assign = p.assignment();
    let mut table = BTreeMap::new();
    for (u, v, _) in d.arcs() {
        let (cu, cv) = (assign[u], assign[v]);
        if cu != cv {
            table.entry((cv, cu)).or_insert((u, v));
        }
    }
    let k = p.len();
    for i in 0..k {
        for j in 0..k {
            if i != j && !table.contains_key(&(i, j)) {
                return None;
            }
        }
    }
    Some(table)
}

// ---------------------------------------------------------------------------
// Brute-force oracles
// ---------------------------------------------------------------------------

/// Iterator over all set partitions of `0..n` as restricted-growth
/// strings, in lexicographic order.
pub struct RestrictedGrowth {
    a: Vec<usize>,
    prefix_max: Vec<usize>,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth { a: vec![0; n], prefix_max: vec![0; n], started: false, done: false }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.a.is_empty() {
                self.done = true;
            }
            return Some(self.a.clone());
        }
        let n = self.a.len();
        // prefix_max[i] = max(a[0..i]); a[i] may rise to prefix_max[i] + 1
        self.prefix_max[0] = 0;
        for i in 1..n {
            self.prefix_max[i] = self.prefix_max[i - 1].max(self.a[i - 1]);
        }
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.a[i] <= self.prefix_max[i] {
                break;
            }
        }
        self.a[i] += 1;
        for j in i + 1..n {
            self.a[j] = 0;
        }
        Some(self.a.clone())
    }
}

/// Host adjacency in plain list form for the oracle checks. Kept separate
/// from the bitmask machinery the searches use, so the two routes validate
/// each other.
struct OracleAdj {
    directed: bool,
    single_edge: bool,
    adj: Vec<Vec<usize>>,
    heavy: Vec<Vec<usize>>,
}

impl OracleAdj {
    fn build(h: GuestClass, host: &Host) -> OracleAdj {
        let n = host.n();
        let mut adj = vec![Vec::new(); n];
        let mut heavy = vec![Vec::new(); n];
        match host {
            Host::Graph(g) => {
                for (u, v, m) in g.edges() {
                    adj[u].push(v);
                    adj[v].push(u);
                    if m >= 2 {
                        heavy[u].push(v);
                        heavy[v].push(u);
                    }
                }
            }
            Host::Digraph(d) => {
                for (u, v, _) in d.arcs() {
                    adj[u].push(v);
                    if d.has_arc(v, u) {
                        heavy[u].push(v);
                    }
                }
            }
        }
        OracleAdj {
            directed: host.kind() == crate::graph::HostKind::Digraph,
            single_edge: h == GuestClass::SingleEdge,
            adj,
            heavy,
        }
    }

    /// H-freeness of the vertices flagged in `in_set`.
    fn free(&self, members: &[usize], in_set: &[bool]) -> bool {
        if self.single_edge {
            return members.iter().all(|&u| self.adj[u].iter().all(|&w| !in_set[w]));
        }
        if self.directed {
            // Kahn peeling on out-degrees within the set.
            let mut alive: Vec<usize> = members.to_vec();
            let mut in_alive = in_set.to_vec();
            loop {
                let before = alive.len();
                alive.retain(|&u| {
                    if self.adj[u].iter().any(|&w| in_alive[w]) {
                        true
                    } else {
                        in_alive[u] = false;
                        false
                    }
                });
                if alive.is_empty() {
                    return true;
                }
                if alive.len() == before {
                    return false;
                }
            }
        } else {
            for &u in members {
                if self.heavy[u].iter().any(|&w| in_set[w]) {
                    return false;
                }
            }
            // union-find over simple edges within the set
            let n = self.adj.len();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for &u in members {
                for &w in &self.adj[u] {
                    if w > u && in_set[w] {
                        let (ru, rw) = (find(&mut parent, u), find(&mut parent, w));
                        if ru == rw {
                            return false;
                        }
                        parent[ru] = rw;
                    }
                }
            }
            true
        }
    }
}

/// Everything one exhaustive partition sweep yields: the minimum proper
/// block count, the maximum complete block count, and the full set of
/// block counts achievable by proper complete partitions.
#[derive(Debug, Clone)]
pub struct OracleSweep {
    pub chi: usize,
    pub psi: usize,
    pub achievable: std::collections::BTreeSet<usize>,
    pub chi_partition: Option<Partition>,
    pub psi_partition: Option<Partition>,
    pub partitions_scanned: u64,
}

/// Exhaustively enumerates every set partition of the host (restricted
/// growth order, no pruning) and classifies each as proper and complete.
pub fn oracle_sweep(
    h: GuestClass,
    host: &Host,
    cfg: &SolverConfig,
) -> Result<OracleSweep, SolverError> {
    check_kind(h, host)?;
    let n = host.n();
    if n > cfg.oracle_limit {
        return Err(SolverError::OracleLimit { n, limit: cfg.oracle_limit });
    }
    let adj = OracleAdj::build(h, host);
    let mut sweep = OracleSweep {
        chi: 0,
        psi: 0,
        achievable: std::collections::BTreeSet::new(),
        chi_partition: None,
        psi_partition: None,
        partitions_scanned: 0,
    };
    if n == 0 {
        sweep.achievable.insert(0);
        sweep.partitions_scanned = 1;
        return Ok(sweep);
    }
    sweep.chi = usize::MAX;
    let mut budget = Budget::new(cfg.node_limit);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut in_block: Vec<Vec<bool>> = Vec::new();
    for rgs in RestrictedGrowth::new(n) {
        budget.tick()?;
        sweep.partitions_scanned += 1;
        let k = rgs.iter().max().unwrap() + 1;
        while blocks.len() < k {
            blocks.push(Vec::new());
            in_block.push(vec![false; n]);
        }
        for b in blocks.iter_mut().take(k) {
            b.clear();
        }
        for flags in in_block.iter_mut().take(k) {
            flags.iter_mut().for_each(|f| *f = false);
        }
        for (v, &c) in rgs.iter().enumerate() {
            blocks[c].push(v);
            in_block[c][v] = true;
        }
        let proper = (0..k).all(|c| adj.free(&blocks[c], &in_block[c]));
        if !proper {
            continue;
        }
        if k < sweep.chi {
            sweep.chi = k;
            sweep.chi_partition = Some(Partition::from_assignment(&rgs));
        }
        let mut complete = true;
        let mut union = Vec::new();
        let mut in_union = vec![false; n];
        'pairs: for i in 0..k {
            for j in i + 1..k {
                union.clear();
                union.extend_from_slice(&blocks[i]);
                union.extend_from_slice(&blocks[j]);
                for &v in &union {
                    in_union[v] = true;
                }
                let f = adj.free(&union, &in_union);
                for &v in &union {
                    in_union[v] = false;
                }
                if f {
                    complete = false;
                    break 'pairs;
                }
            }
        }
        if complete {
            sweep.achievable.insert(k);
            if k > sweep.psi {
                sweep.psi = k;
                sweep.psi_partition = Some(Partition::from_assignment(&rgs));
            }
        }
    }
    Ok(sweep)
}

pub fn oracle_chi(h: GuestClass, host: &Host, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    let sweep = oracle_sweep(h, host, cfg)?;
    match sweep.chi_partition {
        None => Ok(empty_coloring(Method::Oracle)),
        Some(p) => Ok(ParamResult {
            value: sweep.chi,
            method: Method::Oracle,
            evidence: coloring_evidence(h, host, p),
            nodes: sweep.partitions_scanned,
        }),
    }
}

pub fn oracle_psi(h: GuestClass, host: &Host, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    let sweep = oracle_sweep(h, host, cfg)?;
    match sweep.psi_partition {
        None => Ok(empty_coloring(Method::Oracle)),
        Some(p) => Ok(ParamResult {
            value: sweep.psi,
            method: Method::Oracle,
            evidence: coloring_evidence(h, host, p),
            nodes: sweep.partitions_scanned,
        }),
    }
}

/// Exhaustive tau: subsets in (size, lexicographic) order, first H-free
/// complement wins.
pub fn oracle_tau(h: GuestClass, host: &Host, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    check_kind(h, host)?;
    let n = host.n();
    if n > cfg.oracle_limit {
        return Err(SolverError::OracleLimit { n, limit: cfg.oracle_limit });
    }
    let adj = OracleAdj::build(h, host);
    let mut scanned = 0u64;
    for s in 0..=n {
        let mut found: Option<Vec<usize>> = None;
        visit_combinations(n, s, &mut |subset| {
            scanned += 1;
            let mut in_set = vec![true; n];
            for &v in subset {
                in_set[v] = false;
            }
            let members: Vec<usize> = (0..n).filter(|&v| in_set[v]).collect();
            if adj.free(&members, &in_set) {
                found = Some(subset.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(f) = found {
            return Ok(ParamResult {
                value: s,
                method: Method::Oracle,
                evidence: Evidence::FeedbackSet(f.into_iter().collect()),
                nodes: scanned,
            });
        }
    }
    unreachable!("the full vertex set is always a deletion set")
}

fn visit_combinations(n: usize, s: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    if s > n {
        return;
    }
    if s == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        if f(&idx) {
            return;
        }
        let mut i = s;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - s {
                break;
            }
        }
        if idx[i] == i + n - s {
            return;
        }
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exhaustive nu via dynamic programming over all vertex subsets: a subset
/// is a *minimal hosting set* if it hosts a member but no proper subset
/// does; packings are assembled from those. Both packing readings (induced
/// or arbitrary members) give this value.
pub fn oracle_nu(h: GuestClass, host: &Host, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    check_kind(h, host)?;
    let n = host.n();
    if n > cfg.oracle_limit {
        return Err(SolverError::OracleLimit { n, limit: cfg.oracle_limit });
    }
    if n == 0 {
        return Ok(ParamResult {
            value: 0,
            method: Method::Oracle,
            evidence: Evidence::Packing(vec![]),
            nodes: 0,
        });
    }
    let adj = OracleAdj::build(h, host);
    let size = 1usize << n;
    let mut free = vec![false; size];
    for (m, f) in free.iter_mut().enumerate() {
        let members: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        let mut in_set = vec![false; n];
        for &v in &members {
            in_set[v] = true;
        }
        *f = adj.free(&members, &in_set);
    }
    let mut minimal_by_lowest: Vec<Vec<usize>> = vec![Vec::new(); n];
    for m in 1..size {
        if free[m] {
            continue;
        }
        let all_sub_free =
            (0..n).filter(|&v| m >> v & 1 == 1).all(|v| free[m & !(1usize << v)]);
        if all_sub_free {
            let lowest = m.trailing_zeros() as usize;
            minimal_by_lowest[lowest].push(m);
        }
    }
    let mut f = vec![0usize; size];
    for m in 1..size {
        let v = m.trailing_zeros() as usize;
        let mut best = f[m & !(1usize << v)];
        for &w in &minimal_by_lowest[v] {
            if w & m == w {
                best = best.max(1 + f[m & !w]);
            }
        }
        f[m] = best;
    }
    // Reconstruct one optimal packing deterministically.
    let mut packing = Vec::new();
    let mut m = size - 1;
    while m != 0 && f[m] > 0 {
        let v = m.trailing_zeros() as usize;
        if f[m & !(1usize << v)] == f[m] {
            m &= !(1usize << v);
            continue;
        }
        let w = *minimal_by_lowest[v]
            .iter()
            .find(|&&w| w & m == w && 1 + f[m & !w] == f[m])
            .expect("dp table admits a witness");
        let wset: VertexSet = (0..n).filter(|&v| w >> v & 1 == 1).collect();
        let witness = find_h_witness(h, host, &wset)?
            .expect("a minimal hosting set hosts a member");
        packing.push(witness);
        m &= !w;
    }
    Ok(ParamResult {
        value: f[size - 1],
        method: Method::Oracle,
        evidence: Evidence::Packing(packing),
        nodes: size as u64,
    })
}

/// Exhaustive diachromatic number: every partition, acyclic classes, full
/// ordered-pair arc table.
pub fn oracle_dac(d: &MultiDigraph, cfg: &SolverConfig) -> Result<ParamResult, SolverError> {
    let n = d.n();
    if n > cfg.oracle_limit {
        return Err(SolverError::OracleLimit { n, limit: cfg.oracle_limit });
    }
    if n == 0 {
        return Ok(ParamResult {
            value: 0,
            method: Method::Oracle,
            evidence: Evidence::Diachromatic {
                partition: Partition::new(0, vec![]).unwrap(),
                arc_table: BTreeMap::new(),
            },
            nodes: 0,
        });
    }
    let host = Host::Digraph(d.clone());
    let adj = OracleAdj::build(GuestClass::DirectedCycles, &host);
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut scanned = 0u64;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut in_block: Vec<Vec<bool>> = Vec::new();
    for rgs in RestrictedGrowth::new(n) {
        scanned += 1;
        let k = rgs.iter().max().unwrap() + 1;
        while blocks.len() < k {
            blocks.push(Vec::new());
            in_block.push(vec![false; n]);
        }
        for b in blocks.iter_mut().take(k) {
            b.clear();
        }
        for flags in in_block.iter_mut().take(k) {
            flags.iter_mut().for_each(|f| *f = false);
        }
        for (v, &c) in rgs.iter().enumerate() {
            blocks[c].push(v);
            in_block[c][v] = true;
        }
        if !(0..k).all(|c| adj.free(&blocks[c], &in_block[c])) {
            continue;
        }
        if best.as_ref().is_some_and(|(bk, _)| k <= *bk) {
            continue;
        }
        let p = Partition::from_assignment(&rgs);
        if dac_table(d, &p).is_some() {
            best = Some((k, rgs.clone()));
        }
    }
    let (value, rgs) = best.expect("every digraph admits a complete acyclic coloring");
    let partition = Partition::from_assignment(&rgs);
    let arc_table = dac_table(d, &partition).unwrap();
    Ok(ParamResult {
        value,
        method: Method::Oracle,
        evidence: Evidence::Diachromatic { partition, arc_table },
        nodes: scanned,
    })
}
