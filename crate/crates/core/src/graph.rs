//! Loopless multigraphs and multidigraphs with the transformation
//! operations the coloring theory acts on: induced subgraphs, vertex
//! deletion, tree contraction, butterfly contraction, directed cuts,
//! degeneracy orderings, bidirection and edge doubling.
//!
//! Vertices are contiguous indices `0..n`. Edge multiplicities are stored
//! as counts; a parallel pair in a graph (*bigon*) counts as a cycle of
//! length 2 and an antiparallel pair in a digraph (*digon*) counts as a
//! directed cycle of length 2. All types are immutable after construction;
//! transformations return new values together with an index mapping so
//! certificates can be translated across operations.

use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A set of vertex indices of some host (di)graph.
pub type VertexSet = BTreeSet<usize>;

/// Builds a [`VertexSet`] from a slice of indices.
pub fn vset(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

/// The set `{0, 1, ..., n-1}`.
pub fn full_set(n: usize) -> VertexSet {
    (0..n).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a host with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} (hosts are loopless)")]
    Loop(usize),
    #[error("subset does not induce a tree: {0}")]
    NotATree(String),
    #[error("arc ({0}, {1}) is not present")]
    MissingArc(usize, usize),
    #[error("arc ({0}, {1}) is not butterfly-contractible")]
    NotButterflyContractible(usize, usize),
    #[error("operation requires a simple graph, found a parallel edge ({0}, {1})")]
    NotSimple(usize, usize),
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
}

/// Loopless undirected multigraph. Parallel edges are allowed and counted
/// with multiplicity; a pair of parallel edges is a bigon, i.e. a cycle of
/// length 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    /// Keyed by normalized pair (u, v) with u < v; value is multiplicity >= 1.
    edges: BTreeMap<(usize, usize), usize>,
}

/// Loopless directed multigraph. Parallel and antiparallel arcs are
/// allowed; an antiparallel pair is a digon, i.e. a directed cycle of
/// length 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiDigraph {
    n: usize,
    /// Keyed by ordered pair (tail, head); value is multiplicity >= 1.
    arcs: BTreeMap<(usize, usize), usize>,
}

fn check_range(v: usize, n: usize) -> Result<(), GraphError> {
    if v < n {
        Ok(())
    } else {
        Err(GraphError::VertexOutOfRange { vertex: v, n })
    }
}

fn check_subset(s: &VertexSet, n: usize) -> Result<(), GraphError> {
    match s.iter().next_back() {
        Some(&v) => check_range(v, n),
        None => Ok(()),
    }
}

impl MultiGraph {
    pub fn empty(n: usize) -> Self {
        MultiGraph { n, edges: BTreeMap::new() }
    }

    /// Builds a multigraph from an edge list; repeated pairs accumulate
    /// multiplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut map = BTreeMap::new();
        for &(u, v) in edges {
            check_range(u, n)?;
            check_range(v, n)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let key = (u.min(v), u.max(v));
            *map.entry(key).or_insert(0) += 1;
        }
        Ok(MultiGraph { n, edges: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total number of edges counting multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    /// Number of distinct adjacent pairs.
    pub fn distinct_pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        if u == v {
            return 0;
        }
        *self.edges.get(&(u.min(v), u.max(v))).unwrap_or(&0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Distinct pairs with multiplicities, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Distinct neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Degree of `u`; with `multiplicity` set, parallel edges count.
    pub fn degree(&self, u: usize, multiplicity: bool) -> usize {
        self.edges
            .iter()
            .filter(|(&(a, b), _)| a == u || b == u)
            .map(|(_, &m)| if multiplicity { m } else { 1 })
            .sum()
    }

    pub fn is_simple(&self) -> bool {
        self.edges.values().all(|&m| m == 1)
    }

    /// Sorted adjacency lists (distinct neighbors), for traversals.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.edges.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Induced subgraph on `s`, reindexed `0..|s|` by ascending original
    /// index. Returns the new graph and the new→old index map.
    pub fn induced(&self, s: &VertexSet) -> Result<(MultiGraph, Vec<usize>), GraphError> {
        check_subset(s, self.n)?;
        let new_to_old: Vec<usize> = s.iter().copied().collect();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut edges = BTreeMap::new();
        for (&(u, v), &m) in &self.edges {
            if s.contains(&u) && s.contains(&v) {
                edges.insert((old_to_new[u], old_to_new[v]), m);
            }
        }
        Ok((MultiGraph { n: new_to_old.len(), edges }, new_to_old))
    }

    /// Deletes one vertex; equals `induced` on the remaining vertices.
    pub fn delete_vertex(&self, v: usize) -> Result<(MultiGraph, Vec<usize>), GraphError> {
        check_range(v, self.n)?;
        let s: VertexSet = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&s)
    }

    /// Contracts an induced subtree `G[X]` to a single vertex: edges inside
    /// `X` are deleted, `X` is identified to one vertex placed at the sort
    /// position of `min(X)`, and edges leaving `X` keep their multiplicity
    /// (parallel edges may arise). Returns the contracted graph and the
    /// old→new index map (all of `X` maps to the contracted vertex).
    pub fn contract_tree(&self, x: &VertexSet) -> Result<(MultiGraph, Vec<usize>), GraphError> {
        check_subset(x, self.n)?;
        if x.is_empty() {
            return Err(GraphError::NotATree("empty subset".into()));
        }
        // A tree on |X| vertices has exactly |X|-1 edges counting
        // multiplicity (a bigon inside X would be a 2-cycle) and is
        // connected.
        let inner: usize = self
            .edges
            .iter()
            .filter(|(&(u, v), _)| x.contains(&u) && x.contains(&v))
            .map(|(_, &m)| m)
            .sum();
        if inner != x.len() - 1 {
            return Err(GraphError::NotATree(format!(
                "{} vertices but {} internal edges",
                x.len(),
                inner
            )));
        }
        if !self.connected_within(x) {
            return Err(GraphError::NotATree("subset not connected".into()));
        }
        let root = *x.iter().next().unwrap();
        let mut old_to_new = vec![usize::MAX; self.n];
        let mut new = 0;
        let mut contracted = usize::MAX;
        for (v, slot) in old_to_new.iter_mut().enumerate() {
            if v == root {
                contracted = new;
                *slot = new;
                new += 1;
            } else if !x.contains(&v) {
                *slot = new;
                new += 1;
            }
        }
        for &v in x {
            old_to_new[v] = contracted;
        }
        let mut edges = BTreeMap::new();
        for (&(u, v), &m) in &self.edges {
            let (a, b) = (old_to_new[u], old_to_new[v]);
            if a == b {
                continue; // loops arising from contraction are discarded
            }
            *edges.entry((a.min(b), a.max(b))).or_insert(0) += m;
        }
        Ok((MultiGraph { n: new, edges }, old_to_new))
    }

    fn connected_within(&self, s: &VertexSet) -> bool {
        let Some(&start) = s.iter().next() else { return true };
        let mut seen = VertexSet::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if s.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == s.len()
    }

    /// Subdivides one copy of the edge `{u, v}` with a fresh vertex `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<MultiGraph, GraphError> {
        if self.multiplicity(u, v) == 0 {
            return Err(GraphError::MissingEdge(u, v));
        }
        let mut edges = self.edges.clone();
        let key = (u.min(v), u.max(v));
        let m = edges.get_mut(&key).unwrap();
        if *m == 1 {
            edges.remove(&key);
        } else {
            *m -= 1;
        }
        let w = self.n;
        *edges.entry((u, w)).or_insert(0) += 1;
        *edges.entry((v, w)).or_insert(0) += 1;
        Ok(MultiGraph { n: self.n + 1, edges })
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.connected_within(&full_set(self.n))
    }

    /// Degeneracy by min-degree peeling, with the elimination order as a
    /// certificate: every vertex has at most `d` neighbors later in the
    /// order. With `count_multiplicity` parallel edges contribute to
    /// degrees; the default simple mode counts distinct neighbors.
    pub fn degeneracy(&self, count_multiplicity: bool) -> (usize, Vec<usize>) {
        let mut deg: Vec<usize> = (0..self.n).map(|u| self.degree(u, count_multiplicity)).collect();
        let mut alive = vec![true; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut d = 0;
        for _ in 0..self.n {
            let u = (0..self.n)
                .filter(|&u| alive[u])
                .min_by_key(|&u| (deg[u], u))
                .unwrap();
            d = d.max(deg[u]);
            alive[u] = false;
            order.push(u);
            for (&(a, b), &m) in &self.edges {
                let w = if a == u { b } else if b == u { a } else { continue };
                if alive[w] {
                    deg[w] -= if count_multiplicity { m } else { 1 };
                }
            }
        }
        (d, order)
    }

    /// Replaces every edge of a simple graph by a digon.
    pub fn bidirect(&self) -> Result<MultiDigraph, GraphError> {
        let mut arcs = BTreeMap::new();
        for (&(u, v), &m) in &self.edges {
            if m > 1 {
                return Err(GraphError::NotSimple(u, v));
            }
            arcs.insert((u, v), 1);
            arcs.insert((v, u), 1);
        }
        Ok(MultiDigraph { n: self.n, arcs })
    }

    /// Replaces every edge of a simple graph by a bigon.
    pub fn double(&self) -> Result<MultiGraph, GraphError> {
        let mut edges = BTreeMap::new();
        for (&(u, v), &m) in &self.edges {
            if m > 1 {
                return Err(GraphError::NotSimple(u, v));
            }
            edges.insert((u, v), 2);
        }
        Ok(MultiGraph { n: self.n, edges })
    }
}

impl MultiDigraph {
    pub fn empty(n: usize) -> Self {
        MultiDigraph { n, arcs: BTreeMap::new() }
    }

    /// Builds a multidigraph from an arc list; repeated pairs accumulate
    /// multiplicity.
    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut map = BTreeMap::new();
        for &(u, v) in arcs {
            check_range(u, n)?;
            check_range(v, n)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            *map.entry((u, v)).or_insert(0) += 1;
        }
        Ok(MultiDigraph { n, arcs: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.values().sum()
    }

    pub fn distinct_pair_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        *self.arcs.get(&(u, v)).unwrap_or(&0)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Distinct arcs with multiplicities, ascending by (tail, head).
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.arcs.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Distinct out-neighbors of `u`, ascending.
    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        self.arcs
            .range((u, 0)..=(u, usize::MAX))
            .map(|(&(_, v), _)| v)
            .collect()
    }

    pub fn out_degree(&self, u: usize, multiplicity: bool) -> usize {
        self.arcs
            .range((u, 0)..=(u, usize::MAX))
            .map(|(_, &m)| if multiplicity { m } else { 1 })
            .sum()
    }

    pub fn in_degree(&self, v: usize, multiplicity: bool) -> usize {
        self.arcs
            .iter()
            .filter(|(&(_, h), _)| h == v)
            .map(|(_, &m)| if multiplicity { m } else { 1 })
            .sum()
    }

    /// Sorted out-adjacency lists (distinct heads).
    pub fn out_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.arcs.keys() {
            adj[u].push(v);
        }
        adj
    }

    /// Induced subdigraph on `s`, reindexed by ascending original index.
    /// Returns the new digraph and the new→old index map.
    pub fn induced(&self, s: &VertexSet) -> Result<(MultiDigraph, Vec<usize>), GraphError> {
        check_subset(s, self.n)?;
        let new_to_old: Vec<usize> = s.iter().copied().collect();
        let mut old_to_new = vec![usize::MAX; self.n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut arcs = BTreeMap::new();
        for (&(u, v), &m) in &self.arcs {
            if s.contains(&u) && s.contains(&v) {
                arcs.insert((old_to_new[u], old_to_new[v]), m);
            }
        }
        Ok((MultiDigraph { n: new_to_old.len(), arcs }, new_to_old))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<(MultiDigraph, Vec<usize>), GraphError> {
        check_range(v, self.n)?;
        let s: VertexSet = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&s)
    }

    /// Deletes all copies of the listed arcs.
    pub fn delete_arcs(&self, pairs: &[(usize, usize)]) -> MultiDigraph {
        let mut arcs = self.arcs.clone();
        for p in pairs {
            arcs.remove(p);
        }
        MultiDigraph { n: self.n, arcs }
    }

    /// Contracts a butterfly-contractible arc `e = (u, v)`: `e` must be the
    /// unique arc leaving its tail or the unique arc entering its head
    /// (counting multiplicity). The endpoints are identified at the sort
    /// position of `min(u, v)`; loops arising between `u` and `v` are
    /// discarded, all other arcs keep their multiplicity. Returns the
    /// contracted digraph and the old→new index map.
    pub fn butterfly_contract(
        &self,
        u: usize,
        v: usize,
    ) -> Result<(MultiDigraph, Vec<usize>), GraphError> {
        check_range(u, self.n)?;
        check_range(v, self.n)?;
        if !self.has_arc(u, v) {
            return Err(GraphError::MissingArc(u, v));
        }
        if self.out_degree(u, true) != 1 && self.in_degree(v, true) != 1 {
            return Err(GraphError::NotButterflyContractible(u, v));
        }
        let keep = u.min(v);
        let gone = u.max(v);
        let mut old_to_new = vec![usize::MAX; self.n];
        let mut new = 0;
        for (w, slot) in old_to_new.iter_mut().enumerate() {
            if w != gone {
                *slot = new;
                new += 1;
            }
        }
        old_to_new[gone] = old_to_new[keep];
        let mut arcs = BTreeMap::new();
        for (&(a, b), &m) in &self.arcs {
            let (x, y) = (old_to_new[a], old_to_new[b]);
            if x == y {
                continue;
            }
            *arcs.entry((x, y)).or_insert(0) += m;
        }
        Ok((MultiDigraph { n: new, arcs }, old_to_new))
    }

    /// Finds a directed cut, i.e. a nontrivial bipartition `(X, X̄)` with no
    /// arc from `X̄` into `X`, returning `X` and the arcs `δ⁺(X)` leaving it
    /// (distinct pairs). Returns `None` exactly when the digraph is strongly
    /// connected (or has fewer than two vertices). `X` is chosen as the
    /// source component of the condensation containing the smallest vertex.
    pub fn find_directed_cut(&self) -> Option<(VertexSet, Vec<(usize, usize)>)> {
        if self.n < 2 {
            return None;
        }
        let comps = self.strong_components();
        if comps.len() < 2 {
            return None;
        }
        let mut comp_of = vec![0; self.n];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut has_incoming = vec![false; comps.len()];
        for &(u, v) in self.arcs.keys() {
            if comp_of[u] != comp_of[v] {
                has_incoming[comp_of[v]] = true;
            }
        }
        let source = (0..self.n)
            .find(|&v| !has_incoming[comp_of[v]])
            .map(|v| comp_of[v])
            .expect("a condensation always has a source component");
        let x: VertexSet = comps[source].iter().copied().collect();
        let cut: Vec<(usize, usize)> = self
            .arcs
            .keys()
            .filter(|&&(u, v)| x.contains(&u) && !x.contains(&v))
            .copied()
            .collect();
        Some((x, cut))
    }

    /// Strongly connected components (Tarjan), each sorted ascending, in a
    /// deterministic order.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        struct State {
            index: usize,
            idx: Vec<Option<usize>>,
            low: Vec<usize>,
            stack: Vec<usize>,
            on_stack: Vec<bool>,
            comps: Vec<Vec<usize>>,
        }
        fn connect(v: usize, adj: &[Vec<usize>], st: &mut State) {
            st.idx[v] = Some(st.index);
            st.low[v] = st.index;
            st.index += 1;
            st.stack.push(v);
            st.on_stack[v] = true;
            for &w in &adj[v] {
                if st.idx[w].is_none() {
                    connect(w, adj, st);
                    st.low[v] = st.low[v].min(st.low[w]);
                } else if st.on_stack[w] {
                    st.low[v] = st.low[v].min(st.idx[w].unwrap());
                }
            }
            if st.low[v] == st.idx[v].unwrap() {
                let mut comp = Vec::new();
                loop {
                    let w = st.stack.pop().unwrap();
                    st.on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                st.comps.push(comp);
            }
        }
        let adj = self.out_adjacency();
        let mut st = State {
            index: 0,
            idx: vec![None; self.n],
            low: vec![0; self.n],
            stack: Vec::new(),
            on_stack: vec![false; self.n],
            comps: Vec::new(),
        };
        for v in 0..self.n {
            if st.idx[v].is_none() {
                connect(v, &adj, &mut st);
            }
        }
        st.comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n <= 1 || self.strong_components().len() == 1
    }

    pub fn is_weakly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.arcs.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

/// Which kind of host a guest class or file format refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HostKind {
    Graph,
    Digraph,
}

impl std::fmt::Display for HostKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HostKind::Graph => write!(f, "graph"),
            HostKind::Digraph => write!(f, "digraph"),
        }
    }
}

/// A host for the generic coloring engine: either kind of multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Host {
    Graph(MultiGraph),
    Digraph(MultiDigraph),
}

impl From<MultiGraph> for Host {
    fn from(g: MultiGraph) -> Self {
        Host::Graph(g)
    }
}

impl From<MultiDigraph> for Host {
    fn from(d: MultiDigraph) -> Self {
        Host::Digraph(d)
    }
}

impl Host {
    pub fn n(&self) -> usize {
        match self {
            Host::Graph(g) => g.n(),
            Host::Digraph(d) => d.n(),
        }
    }

    pub fn kind(&self) -> HostKind {
        match self {
            Host::Graph(_) => HostKind::Graph,
            Host::Digraph(_) => HostKind::Digraph,
        }
    }

    /// Total edge/arc count with multiplicity.
    pub fn size(&self) -> usize {
        match self {
            Host::Graph(g) => g.edge_count(),
            Host::Digraph(d) => d.arc_count(),
        }
    }

    pub fn as_graph(&self) -> Option<&MultiGraph> {
        match self {
            Host::Graph(g) => Some(g),
            Host::Digraph(_) => None,
        }
    }

    pub fn as_digraph(&self) -> Option<&MultiDigraph> {
        match self {
            Host::Digraph(d) => Some(d),
            Host::Graph(_) => None,
        }
    }

    pub fn induced(&self, s: &VertexSet) -> Result<(Host, Vec<usize>), GraphError> {
        match self {
            Host::Graph(g) => g.induced(s).map(|(h, m)| (Host::Graph(h), m)),
            Host::Digraph(d) => d.induced(s).map(|(h, m)| (Host::Digraph(h), m)),
        }
    }

    pub fn delete_vertex(&self, v: usize) -> Result<(Host, Vec<usize>), GraphError> {
        match self {
            Host::Graph(g) => g.delete_vertex(v).map(|(h, m)| (Host::Graph(h), m)),
            Host::Digraph(d) => d.delete_vertex(v).map(|(h, m)| (Host::Digraph(h), m)),
        }
    }

    pub fn is_weakly_connected(&self) -> bool {
        match self {
            Host::Graph(g) => g.is_connected(),
            Host::Digraph(d) => d.is_weakly_connected(),
        }
    }

    /// Finds a (directed) cycle inside `s`, including bigons and digons.
    /// See [`find_cycle`].
    pub fn find_cycle(&self, s: &VertexSet) -> Result<Option<CycleWitness>, GraphError> {
        find_cycle(self, s)
    }
}

/// Whether a cycle witness is directed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleKind {
    Directed,
    Undirected,
}

/// A cycle given as its ordered vertex sequence `v1, …, vk` (k ≥ 2),
/// closing back to `v1`. A length-2 witness attests a digon (directed) or a
/// bigon (multiplicity ≥ 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub kind: CycleKind,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// True when this is a length-2 witness (digon or bigon).
    pub fn is_two_cycle(&self) -> bool {
        self.vertices.len() == 2
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Checks the witness against a host: vertices pairwise distinct and in
    /// range, consecutive vertices joined by an edge/arc of the required
    /// orientation, and for length 2 a bigon/digon actually present.
    pub fn verify(&self, host: &Host) -> bool {
        let k = self.vertices.len();
        if k < 2 {
            return false;
        }
        if self.vertex_set().len() != k {
            return false;
        }
        if self.vertices.iter().any(|&v| v >= host.n()) {
            return false;
        }
        match (host, self.kind) {
            (Host::Digraph(d), CycleKind::Directed) => {
                if k == 2 {
                    let (u, v) = (self.vertices[0], self.vertices[1]);
                    return d.has_arc(u, v) && d.has_arc(v, u);
                }
                (0..k).all(|i| d.has_arc(self.vertices[i], self.vertices[(i + 1) % k]))
            }
            (Host::Graph(g), CycleKind::Undirected) => {
                if k == 2 {
                    return g.multiplicity(self.vertices[0], self.vertices[1]) >= 2;
                }
                (0..k).all(|i| g.adjacent(self.vertices[i], self.vertices[(i + 1) % k]))
            }
            _ => false,
        }
    }
}

/// Finds a cycle of the host lying entirely inside `s`: a directed cycle
/// (including digons) for digraph hosts, an undirected cycle (including
/// bigons) for graph hosts. Depth-first exploration in ascending vertex
/// index; the witness returned is the first cycle closed, so the result is
/// deterministic for a fixed host representation.
pub fn find_cycle(host: &Host, s: &VertexSet) -> Result<Option<CycleWitness>, GraphError> {
    check_subset(s, host.n())?;
    match host {
        Host::Digraph(d) => Ok(find_cycle_digraph(d, s)),
        Host::Graph(g) => Ok(find_cycle_graph(g, s)),
    }
}

const WHITE: u8 = 0;
const ACTIVE: u8 = 1;
const DONE: u8 = 2;

fn find_cycle_digraph(d: &MultiDigraph, s: &VertexSet) -> Option<CycleWitness> {
    let adj = d.out_adjacency();
    let mut state = vec![WHITE; d.n()];
    let mut pos = vec![usize::MAX; d.n()];
    let mut path: Vec<usize> = Vec::new();
    // Iterative DFS; each frame remembers how far its neighbor list got.
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for &root in s {
        if state[root] != WHITE {
            continue;
        }
        stack.push((root, 0));
        state[root] = ACTIVE;
        pos[root] = path.len();
        path.push(root);
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            let mut advanced = false;
            while *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if !s.contains(&w) {
                    continue;
                }
                match state[w] {
                    ACTIVE => {
                        let cycle = path[pos[w]..].to_vec();
                        return Some(CycleWitness { vertices: cycle, kind: CycleKind::Directed });
                    }
                    WHITE => {
                        state[w] = ACTIVE;
                        pos[w] = path.len();
                        path.push(w);
                        stack.push((w, 0));
                        advanced = true;
                        break;
                    }
                    _ => {}
                }
            }
            if !advanced {
                state[v] = DONE;
                path.pop();
                stack.pop();
            }
        }
    }
    None
}

fn find_cycle_graph(g: &MultiGraph, s: &VertexSet) -> Option<CycleWitness> {
    let adj = g.adjacency();
    let mut state = vec![WHITE; g.n()];
    let mut pos = vec![usize::MAX; g.n()];
    let mut path: Vec<usize> = Vec::new();
    let mut stack: Vec<(usize, usize, usize)> = Vec::new(); // (vertex, parent, next index)
    for &root in s {
        if state[root] != WHITE {
            continue;
        }
        stack.push((root, usize::MAX, 0));
        state[root] = ACTIVE;
        pos[root] = path.len();
        path.push(root);
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            let mut advanced = false;
            while *i < adj[v].len() {
                let w = adj[v][*i];
                *i += 1;
                if !s.contains(&w) {
                    continue;
                }
                if w == parent {
                    if g.multiplicity(v, parent) >= 2 {
                        return Some(CycleWitness {
                            vertices: vec![parent, v],
                            kind: CycleKind::Undirected,
                        });
                    }
                    continue;
                }
                match state[w] {
                    ACTIVE => {
                        let cycle = path[pos[w]..].to_vec();
                        return Some(CycleWitness { vertices: cycle, kind: CycleKind::Undirected });
                    }
                    WHITE => {
                        state[w] = ACTIVE;
                        pos[w] = path.len();
                        path.push(w);
                        stack.push((w, v, 0));
                        advanced = true;
                        break;
                    }
                    _ => {}
                }
            }
            if !advanced {
                state[v] = DONE;
                path.pop();
                stack.pop();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> MultiGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        MultiGraph::from_edges(n, &edges).unwrap()
    }

    fn directed_cycle(n: usize) -> MultiDigraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        MultiDigraph::from_arcs(n, &arcs).unwrap()
    }

    fn transitive(n: usize) -> MultiDigraph {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                arcs.push((u, v));
            }
        }
        MultiDigraph::from_arcs(n, &arcs).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_indices() {
        assert_eq!(MultiGraph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(
            MultiGraph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert_eq!(MultiDigraph::from_arcs(3, &[(2, 2)]), Err(GraphError::Loop(2)));
    }

    #[test]
    fn find_cycle_directed_triangle() {
        let d = directed_cycle(3);
        let w = Host::from(d).find_cycle(&full_set(3)).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert_eq!(w.kind, CycleKind::Directed);
    }

    #[test]
    fn find_cycle_transitive_tournament_is_empty() {
        let t4 = Host::from(transitive(4));
        assert_eq!(t4.find_cycle(&full_set(4)).unwrap(), None);
    }

    #[test]
    fn find_cycle_bigon() {
        let g = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let w = Host::from(g).find_cycle(&full_set(2)).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1]);
        assert!(w.is_two_cycle());
    }

    #[test]
    fn find_cycle_digon() {
        let d = MultiDigraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let w = Host::from(d).find_cycle(&full_set(2)).unwrap().unwrap();
        assert_eq!(w.vertices, vec![0, 1]);
    }

    #[test]
    fn find_cycle_respects_subset() {
        // 4-cycle; removing one vertex leaves a path.
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let host = Host::from(g);
        assert!(host.find_cycle(&full_set(4)).unwrap().is_some());
        assert_eq!(host.find_cycle(&vset(&[0, 1, 2])).unwrap(), None);
    }

    #[test]
    fn find_cycle_out_of_range_subset() {
        let g = Host::from(MultiGraph::empty(2));
        assert!(g.find_cycle(&vset(&[5])).is_err());
    }

    #[test]
    fn parallel_arcs_are_not_directed_cycles() {
        let d = MultiDigraph::from_arcs(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(Host::from(d).find_cycle(&full_set(2)).unwrap(), None);
    }

    #[test]
    fn induced_k4_minus_vertex_is_k3() {
        let (h, map) = k(4).induced(&vset(&[0, 2, 3])).unwrap();
        assert_eq!(h, k(3));
        assert_eq!(map, vec![0, 2, 3]);
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
        let (h, _) = g.induced(&full_set(4)).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn delete_vertex_examples() {
        let (h, _) = k(3).delete_vertex(2).unwrap();
        assert_eq!(h, k(2));
        let digon = MultiDigraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        let (h, _) = digon.delete_vertex(0).unwrap();
        assert_eq!(h.n(), 1);
        assert_eq!(h.arc_count(), 0);
    }

    #[test]
    fn delete_second_class_vertex_of_d3() {
        // D_3 has 3 matching + 6 reverse arcs; a second-class vertex is
        // incident to 1 + 2, leaving 2 matching + 4 reverse arcs.
        let mut arcs = vec![(0, 3), (1, 4), (2, 5)];
        for j in 0..3usize {
            for i in 0..3usize {
                if i != j {
                    arcs.push((3 + j, i));
                }
            }
        }
        let d3 = MultiDigraph::from_arcs(6, &arcs).unwrap();
        let (h, _) = d3.delete_vertex(3).unwrap();
        assert_eq!(h.n(), 5);
        assert_eq!(h.arc_count(), 6);
    }

    #[test]
    fn contract_tree_path_gives_parallel_edges() {
        // Path a-b-c (0-1-2) with pendant edges 0-3 and 2-3.
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (0, 3), (2, 3)]).unwrap();
        let (h, map) = g.contract_tree(&vset(&[0, 1, 2])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.multiplicity(0, 1), 2);
        assert_eq!(map, vec![0, 0, 0, 1]);
    }

    #[test]
    fn contract_tree_on_c6_subpath_gives_c4() {
        let c6 = MultiGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        let (h, _) = c6.contract_tree(&vset(&[1, 2, 3])).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 4);
        assert!(h.is_simple());
        assert!(Host::from(h).find_cycle(&full_set(4)).unwrap().is_some());
    }

    #[test]
    fn contract_single_vertex_is_identity() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (h, _) = g.contract_tree(&vset(&[1])).unwrap();
        assert_eq!(h, g);
    }

    #[test]
    fn contract_tree_rejects_non_trees() {
        let g = k(3);
        assert!(g.contract_tree(&full_set(3)).is_err());
        let disconnected = MultiGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(disconnected.contract_tree(&vset(&[0, 1, 2])).is_err());
        let bigon = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(bigon.contract_tree(&full_set(2)).is_err());
    }

    #[test]
    fn butterfly_contract_path() {
        let d = MultiDigraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        let (h, _) = d.butterfly_contract(0, 1).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.arc_count(), 1);
        assert!(h.has_arc(0, 1));
    }

    #[test]
    fn butterfly_contract_triangle_gives_digon() {
        let d = directed_cycle(3);
        let (h, _) = d.butterfly_contract(0, 1).unwrap();
        assert_eq!(h.n(), 2);
        assert!(h.has_arc(0, 1) && h.has_arc(1, 0));
    }

    #[test]
    fn butterfly_contract_rejects_busy_arc() {
        // 0->1 with out-degree 2 at tail and in-degree 2 at head.
        let d = MultiDigraph::from_arcs(4, &[(0, 1), (0, 2), (3, 1)]).unwrap();
        assert_eq!(
            d.butterfly_contract(0, 1),
            Err(GraphError::NotButterflyContractible(0, 1))
        );
        assert_eq!(d.butterfly_contract(2, 3), Err(GraphError::MissingArc(2, 3)));
    }

    #[test]
    fn directed_cut_of_transitive_tournament() {
        let t3 = transitive(3);
        let (x, cut) = t3.find_directed_cut().unwrap();
        assert_eq!(x, vset(&[0]));
        assert_eq!(cut, vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn no_directed_cut_in_directed_cycle() {
        assert_eq!(directed_cycle(3).find_directed_cut(), None);
    }

    #[test]
    fn directed_cut_between_components_is_empty() {
        let mut arcs = vec![(0, 1), (1, 2), (2, 0)];
        arcs.extend([(3, 4), (4, 5), (5, 3)]);
        let d = MultiDigraph::from_arcs(6, &arcs).unwrap();
        let (x, cut) = d.find_directed_cut().unwrap();
        assert_eq!(x, vset(&[0, 1, 2]));
        assert!(cut.is_empty());
    }

    #[test]
    fn degeneracy_values() {
        let forest = MultiGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(forest.degeneracy(false).0, 1);
        assert_eq!(k(5).degeneracy(false).0, 4);
        let mut edges = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                edges.push((u, v));
            }
        }
        let k33 = MultiGraph::from_edges(6, &edges).unwrap();
        assert_eq!(k33.degeneracy(false).0, 3);
    }

    #[test]
    fn degeneracy_multiplicity_mode() {
        let bigon = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(bigon.degeneracy(false).0, 1);
        assert_eq!(bigon.degeneracy(true).0, 2);
    }

    #[test]
    fn degeneracy_order_certificate() {
        let g = k(5);
        let (d, order) = g.degeneracy(false);
        let mut seen_later: Vec<VertexSet> = vec![VertexSet::new(); 5];
        for (i, &u) in order.iter().enumerate() {
            for &w in order[i + 1..].iter() {
                if g.adjacent(u, w) {
                    seen_later[u].insert(w);
                }
            }
        }
        assert!(seen_later.iter().all(|s| s.len() <= d));
    }

    #[test]
    fn bidirect_and_double() {
        let c3 = k(3);
        let bi = c3.bidirect().unwrap();
        assert_eq!(bi.arc_count(), 6);
        assert!(bi.has_arc(0, 1) && bi.has_arc(1, 0));
        let dbl = c3.double().unwrap();
        assert_eq!(dbl.edge_count(), 6);
        assert_eq!(dbl.multiplicity(1, 2), 2);
        let edgeless = MultiGraph::empty(3);
        assert_eq!(edgeless.double().unwrap(), edgeless);
        let bigon = MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(matches!(bigon.bidirect(), Err(GraphError::NotSimple(0, 1))));
    }

    #[test]
    fn subdivide_edge_inverts_by_tree_contraction() {
        let g = k(4);
        let sub = g.subdivide_edge(0, 1).unwrap();
        assert_eq!(sub.n(), 5);
        assert!(!sub.adjacent(0, 1));
        assert!(sub.adjacent(0, 4) && sub.adjacent(1, 4));
        let (back, _) = sub.contract_tree(&vset(&[0, 4])).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn strong_components_deterministic() {
        let d = MultiDigraph::from_arcs(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        let comps = d.strong_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.contains(&vec![0, 1]));
    }
}
