//! Shared fixtures and independent checkers for the integration tests.
#![allow(dead_code)] // each test binary uses a different subset

use ccol_core::families::{generate, gnp, FamilySpec, SplitMix64};
use ccol_core::graph::{Host, MultiDigraph, MultiGraph, VertexSet};

/// Deterministic list of small graph hosts, labelled.
pub fn graph_fixtures(max_n: usize) -> Vec<(String, Host)> {
    let mut out: Vec<(String, Host)> = Vec::new();
    let mut push = |name: String, host: Host| {
        if host.n() <= max_n {
            out.push((name, host));
        }
    };
    for n in 1..=6 {
        push(format!("k{n}"), generate(&FamilySpec::Complete { n }).unwrap());
    }
    for (m, n) in [(1, 1), (2, 2), (2, 3), (3, 3), (3, 4)] {
        push(format!("k{m},{n}"), generate(&FamilySpec::CompleteBipartite { m, n }).unwrap());
    }
    for n in 2..=6 {
        push(format!("p{n}"), generate(&FamilySpec::Path { n }).unwrap());
    }
    for n in 3..=7 {
        push(format!("c{n}"), generate(&FamilySpec::Cycle { n, directed: false }).unwrap());
    }
    for (c, l) in [(2, 3), (3, 3), (1, 4), (2, 2)] {
        push(
            format!("cycles{c}x{l}"),
            generate(&FamilySpec::DisjointCycles { count: c, len: l, directed: false }).unwrap(),
        );
    }
    for n in [3, 4] {
        let g = generate(&FamilySpec::Complete { n }).unwrap();
        push(format!("2k{n}"), Host::Graph(g.as_graph().unwrap().double().unwrap()));
    }
    push(
        "triangle+bigon".into(),
        Host::Graph(MultiGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (0, 2)]).unwrap()),
    );
    for (n, p, seed) in [(6, 0.3, 1), (6, 0.5, 2), (7, 0.5, 3), (7, 0.8, 4), (8, 0.4, 5)] {
        push(format!("gnp{n}-{p}-{seed}"), Host::Graph(gnp(n, p, seed).unwrap()));
    }
    out
}

/// Deterministic list of small digraph hosts, labelled.
pub fn digraph_fixtures(max_n: usize) -> Vec<(String, Host)> {
    let mut out: Vec<(String, Host)> = Vec::new();
    let mut push = |name: String, host: Host| {
        if host.n() <= max_n {
            out.push((name, host));
        }
    };
    for n in 2..=6 {
        push(format!("t{n}"), generate(&FamilySpec::TransitiveTournament { n }).unwrap());
    }
    for n in 2..=6 {
        push(format!("dc{n}"), generate(&FamilySpec::Cycle { n, directed: true }).unwrap());
    }
    for n in 1..=3 {
        push(format!("d{n}"), generate(&FamilySpec::MatchingOrientation { n }).unwrap());
    }
    for (n, k) in [(1, 3), (1, 4), (2, 3)] {
        push(format!("turan{n},{k}"), generate(&FamilySpec::CyclicTuran { n, k }).unwrap());
    }
    for n in 2..=4 {
        let g = generate(&FamilySpec::Complete { n }).unwrap();
        push(format!("bik{n}"), Host::Digraph(g.as_graph().unwrap().bidirect().unwrap()));
    }
    push(
        "bic4".into(),
        Host::Digraph(
            generate(&FamilySpec::Cycle { n: 4, directed: false })
                .unwrap()
                .as_graph()
                .unwrap()
                .bidirect()
                .unwrap(),
        ),
    );
    for (c, l) in [(3, 3), (2, 2), (1, 5)] {
        push(
            format!("dicycles{c}x{l}"),
            generate(&FamilySpec::DisjointCycles { count: c, len: l, directed: true }).unwrap(),
        );
    }
    // Orientations of seeded random graphs: arc u->v iff edge {u,v} drew an
    // odd word, else v->u.
    for (n, p, seed) in [(6, 0.4, 11), (7, 0.6, 12), (8, 0.5, 13)] {
        let g = gnp(n, p, seed).unwrap();
        let mut rng = SplitMix64::new(seed ^ 0xABCD);
        let mut arcs = Vec::new();
        for (u, v, _) in g.edges() {
            if rng.next_u64() % 2 == 1 {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
        push(
            format!("orient{n}-{seed}"),
            Host::Digraph(MultiDigraph::from_arcs(n, &arcs).unwrap()),
        );
    }
    push(
        "twodigons+arc".into(),
        Host::Digraph(
            MultiDigraph::from_arcs(4, &[(0, 1), (1, 0), (2, 3), (3, 2), (1, 2)]).unwrap(),
        ),
    );
    out
}

pub fn all_fixtures(max_n: usize) -> Vec<(String, Host)> {
    let mut out = graph_fixtures(max_n);
    out.extend(digraph_fixtures(max_n));
    out
}

/// Independent has-a-cycle check by counting: a multigraph on a vertex set
/// is a forest iff its edge count (with multiplicity) equals vertex count
/// minus number of connected components.
pub fn has_cycle_by_counting(g: &MultiGraph, s: &VertexSet) -> bool {
    let members: Vec<usize> = s.iter().copied().collect();
    let mut edges = 0usize;
    for (u, v, m) in g.edges() {
        if s.contains(&u) && s.contains(&v) {
            edges += m;
        }
    }
    // components via BFS on simple adjacency
    let mut comp = 0usize;
    let mut seen: VertexSet = VertexSet::new();
    for &start in &members {
        if seen.contains(&start) {
            continue;
        }
        comp += 1;
        let mut queue = vec![start];
        seen.insert(start);
        while let Some(u) = queue.pop() {
            for w in g.neighbors(u) {
                if s.contains(&w) && seen.insert(w) {
                    queue.push(w);
                }
            }
        }
    }
    edges > members.len() - comp
}

/// Independent has-a-directed-cycle check: Kahn peeling on in-degrees.
pub fn has_dicycle_by_kahn(d: &MultiDigraph, s: &VertexSet) -> bool {
    let mut alive: VertexSet = s.clone();
    loop {
        let removable: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&v| {
                !d.arcs().any(|(u, w, _)| w == v && alive.contains(&u) && u != v)
            })
            .collect();
        if removable.is_empty() {
            return !alive.is_empty();
        }
        for v in removable {
            alive.remove(&v);
        }
        if alive.is_empty() {
            return false;
        }
    }
}

/// Independent strong-connectivity check via transitive closure.
#[allow(clippy::needless_range_loop)]
pub fn strongly_connected_by_closure(d: &MultiDigraph) -> bool {
    let n = d.n();
    if n <= 1 {
        return true;
    }
    let mut reach = vec![vec![false; n]; n];
    for v in 0..n {
        reach[v][v] = true;
    }
    for (u, v, _) in d.arcs() {
        reach[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    (0..n).all(|i| (0..n).all(|j| reach[i][j]))
}
