//! Guest classes: the forbidden-pattern families a coloring must avoid.
//!
//! A guest class `H` turns one engine into all the parameters at once:
//! directed cycles give the dichromatic/adichromatic pair, undirected
//! cycles give vertex arboricity and its complete variant, and the single
//! edge recovers the chromatic/achromatic pair. A witness returned by the
//! finder is always an *induced* occurrence: cycles are chord-reduced
//! until no shorter cycle hides inside their vertex set.

use crate::graph::{CycleWitness, GraphError, Host, HostKind, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuestClass {
    /// Undirected cycles, including bigons. Hosts: graphs.
    UndirectedCycles,
    /// Directed cycles, including digons. Hosts: digraphs.
    DirectedCycles,
    /// A single edge (the K2 guest). Hosts: graphs.
    SingleEdge,
}

impl GuestClass {
    pub fn host_kind(&self) -> HostKind {
        match self {
            GuestClass::UndirectedCycles | GuestClass::SingleEdge => HostKind::Graph,
            GuestClass::DirectedCycles => HostKind::Digraph,
        }
    }

    /// CLI token.
    pub fn token(&self) -> &'static str {
        match self {
            GuestClass::UndirectedCycles => "cycles",
            GuestClass::DirectedCycles => "dicycles",
            GuestClass::SingleEdge => "edge",
        }
    }

    pub fn from_token(s: &str) -> Option<GuestClass> {
        match s {
            "cycles" => Some(GuestClass::UndirectedCycles),
            "dicycles" => Some(GuestClass::DirectedCycles),
            "edge" => Some(GuestClass::SingleEdge),
            _ => None,
        }
    }

    /// The default guest for a host kind: cycles for graphs, directed
    /// cycles for digraphs.
    pub fn default_for(kind: HostKind) -> GuestClass {
        match kind {
            HostKind::Graph => GuestClass::UndirectedCycles,
            HostKind::Digraph => GuestClass::DirectedCycles,
        }
    }
}

impl std::fmt::Display for GuestClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.token())
    }
}

/// An induced occurrence of a guest inside a queried subset: a chordless
/// cycle, or an adjacent pair for the edge guest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HWitness {
    Cycle(CycleWitness),
    Edge(usize, usize),
}

impl HWitness {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            HWitness::Cycle(c) => c.vertices.clone(),
            HWitness::Edge(u, v) => vec![*u, *v],
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().into_iter().collect()
    }

    /// Checks the witness against the host (adjacency only, not
    /// chordlessness).
    pub fn verify(&self, host: &Host) -> bool {
        match self {
            HWitness::Cycle(c) => c.verify(host),
            HWitness::Edge(u, v) => match host {
                Host::Graph(g) => *u != *v && g.adjacent(*u, *v),
                Host::Digraph(_) => false,
            },
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GuestError {
    #[error("guest class `{guest}` applies to {expected} hosts, got a {found}")]
    KindMismatch { guest: GuestClass, expected: HostKind, found: HostKind },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_kind(h: GuestClass, host: &Host) -> Result<(), GuestError> {
    if h.host_kind() == host.kind() {
        Ok(())
    } else {
        Err(GuestError::KindMismatch { guest: h, expected: h.host_kind(), found: host.kind() })
    }
}

/// Finds an induced member of `H` inside `s`, or `None` if the induced
/// sub(di)graph on `s` is `H`-free. Any cycle inside `s` implies a
/// chordless one, so the cycle finders locate a cycle first and then
/// chord-reduce it.
pub fn find_h_witness(
    h: GuestClass,
    host: &Host,
    s: &VertexSet,
) -> Result<Option<HWitness>, GuestError> {
    check_kind(h, host)?;
    match h {
        GuestClass::SingleEdge => {
            let g = host.as_graph().unwrap();
            if let Some(&max) = s.iter().next_back() {
                if max >= g.n() {
                    return Err(GraphError::VertexOutOfRange { vertex: max, n: g.n() }.into());
                }
            }
            for &u in s {
                for w in g.neighbors(u) {
                    if w > u && s.contains(&w) {
                        return Ok(Some(HWitness::Edge(u, w)));
                    }
                }
            }
            Ok(None)
        }
        GuestClass::UndirectedCycles | GuestClass::DirectedCycles => {
            match host.find_cycle(s)? {
                None => Ok(None),
                Some(c) => Ok(Some(HWitness::Cycle(chord_reduce(host, c)))),
            }
        }
    }
}

/// True iff `s` induces no member of `H`.
pub fn is_h_free(h: GuestClass, host: &Host, s: &VertexSet) -> Result<bool, GuestError> {
    Ok(find_h_witness(h, host, s)?.is_none())
}

/// Checks that a cycle witness is induced: no proper subset of its
/// vertices hosts a cycle and no adjacency exists beyond the cycle edges.
/// Directed: the only arcs among the witness vertices run along the cycle.
/// Undirected: the only adjacent pairs are consecutive ones, and for
/// length ≥ 3 each of those has multiplicity 1 (a heavier pair would hide
/// a bigon).
pub fn is_chordless(host: &Host, w: &CycleWitness) -> bool {
    if !w.verify(host) {
        return false;
    }
    let vs = &w.vertices;
    let k = vs.len();
    if k == 2 {
        return true;
    }
    match host {
        Host::Digraph(d) => {
            for i in 0..k {
                for j in 0..k {
                    if i == j {
                        continue;
                    }
                    if d.has_arc(vs[i], vs[j]) && j != (i + 1) % k {
                        return false;
                    }
                }
            }
            true
        }
        Host::Graph(g) => {
            for i in 0..k {
                if g.multiplicity(vs[i], vs[(i + 1) % k]) != 1 {
                    return false;
                }
                for j in i + 2..k {
                    if i == 0 && j == k - 1 {
                        continue;
                    }
                    if g.adjacent(vs[i], vs[j]) {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Shrinks a cycle witness to a chordless one inside its own vertex set.
fn chord_reduce(host: &Host, mut w: CycleWitness) -> CycleWitness {
    loop {
        let k = w.vertices.len();
        if k == 2 {
            return w;
        }
        match host {
            Host::Digraph(d) => {
                // An arc between witness vertices that is not a cycle arc
                // closes a strictly shorter directed cycle.
                let mut replaced = false;
                'outer_d: for i in 0..k {
                    for j in 0..k {
                        if j == i || j == (i + 1) % k {
                            continue;
                        }
                        if d.has_arc(w.vertices[i], w.vertices[j]) {
                            let mut cycle = Vec::new();
                            let mut t = j;
                            loop {
                                cycle.push(w.vertices[t]);
                                if t == i {
                                    break;
                                }
                                t = (t + 1) % k;
                            }
                            w.vertices = cycle;
                            replaced = true;
                            break 'outer_d;
                        }
                    }
                }
                if !replaced {
                    return w;
                }
            }
            Host::Graph(g) => {
                // A heavy consecutive pair is a bigon, a strictly shorter
                // cycle.
                if let Some(i) =
                    (0..k).find(|&i| g.multiplicity(w.vertices[i], w.vertices[(i + 1) % k]) >= 2)
                {
                    w.vertices = vec![w.vertices[i], w.vertices[(i + 1) % k]];
                    continue;
                }
                // A chord splits the cycle into two shorter ones; take the
                // shorter side (ties toward the i..=j side).
                let mut replaced = false;
                'outer_g: for i in 0..k {
                    for j in i + 2..k {
                        if i == 0 && j == k - 1 {
                            continue;
                        }
                        if g.adjacent(w.vertices[i], w.vertices[j]) {
                            let side_a: Vec<usize> = w.vertices[i..=j].to_vec();
                            let mut side_b: Vec<usize> = w.vertices[j..].to_vec();
                            side_b.extend_from_slice(&w.vertices[..=i]);
                            w.vertices = if side_a.len() <= side_b.len() { side_a } else { side_b };
                            replaced = true;
                            break 'outer_g;
                        }
                    }
                }
                if !replaced {
                    return w;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{full_set, vset, MultiDigraph, MultiGraph};

    fn k(n: usize) -> Host {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Host::Graph(MultiGraph::from_edges(n, &edges).unwrap())
    }

    fn transitive(n: usize) -> Host {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                arcs.push((u, v));
            }
        }
        Host::Digraph(MultiDigraph::from_arcs(n, &arcs).unwrap())
    }

    #[test]
    fn k4_witness_is_a_chordless_triangle() {
        let host = k(4);
        let w = find_h_witness(GuestClass::UndirectedCycles, &host, &full_set(4))
            .unwrap()
            .unwrap();
        let HWitness::Cycle(c) = &w else { panic!("expected cycle") };
        assert_eq!(c.len(), 3);
        assert!(is_chordless(&host, c));
    }

    #[test]
    fn edgeless_graph_has_no_edge_witness() {
        let host = Host::Graph(MultiGraph::empty(4));
        assert_eq!(find_h_witness(GuestClass::SingleEdge, &host, &full_set(4)).unwrap(), None);
    }

    #[test]
    fn transitive_tournament_is_dicycle_free() {
        let t5 = transitive(5);
        assert!(is_h_free(GuestClass::DirectedCycles, &t5, &full_set(5)).unwrap());
    }

    #[test]
    fn forest_is_cycle_free_but_bigon_is_not() {
        let forest = Host::Graph(MultiGraph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap());
        assert!(is_h_free(GuestClass::UndirectedCycles, &forest, &full_set(4)).unwrap());
        let bigon = Host::Graph(MultiGraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap());
        assert!(!is_h_free(GuestClass::UndirectedCycles, &bigon, &full_set(2)).unwrap());
        let digon = Host::Digraph(MultiDigraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap());
        assert!(!is_h_free(GuestClass::DirectedCycles, &digon, &full_set(2)).unwrap());
    }

    #[test]
    fn kind_mismatch_is_an_error() {
        let host = k(3);
        assert!(matches!(
            find_h_witness(GuestClass::DirectedCycles, &host, &full_set(3)),
            Err(GuestError::KindMismatch { .. })
        ));
    }

    #[test]
    fn chord_reduction_on_directed_cycle_with_shortcut() {
        // 0->1->2->3->0 plus shortcut 1->3: the witness must avoid the
        // chord, ending as the triangle 3,0,1.
        let d = MultiDigraph::from_arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        let host = Host::Digraph(d);
        let w = find_h_witness(GuestClass::DirectedCycles, &host, &full_set(4))
            .unwrap()
            .unwrap();
        let HWitness::Cycle(c) = &w else { panic!() };
        assert!(is_chordless(&host, c), "witness {:?} has a chord", c.vertices);
    }

    #[test]
    fn chord_reduction_prefers_bigon_inside_triangle() {
        let g = MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap();
        let host = Host::Graph(g);
        let w = find_h_witness(GuestClass::UndirectedCycles, &host, &full_set(3))
            .unwrap()
            .unwrap();
        let HWitness::Cycle(c) = &w else { panic!() };
        assert!(is_chordless(&host, c));
    }

    #[test]
    fn reverse_arc_reduces_to_digon() {
        // Directed triangle with one reverse arc: chordless witness is the
        // digon.
        let d = MultiDigraph::from_arcs(3, &[(0, 1), (1, 2), (2, 0), (1, 0)]).unwrap();
        let host = Host::Digraph(d);
        let w = find_h_witness(GuestClass::DirectedCycles, &host, &full_set(3))
            .unwrap()
            .unwrap();
        let HWitness::Cycle(c) = &w else { panic!() };
        assert_eq!(c.len(), 2);
        assert!(is_chordless(&host, c));
    }

    #[test]
    fn witness_stays_inside_subset() {
        let host = k(5);
        let s = vset(&[1, 3, 4]);
        let w = find_h_witness(GuestClass::UndirectedCycles, &host, &s).unwrap().unwrap();
        assert!(w.vertex_set().is_subset(&s));
    }
}
