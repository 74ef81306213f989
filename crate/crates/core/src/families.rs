//! Generators for the (di)graph families the solvers are exercised on,
//! a seeded Erdős–Rényi model, and the orientation construction that turns
//! a packing of induced cycles into a digraph with a large complete
//! acyclic coloring.
//!
//! Vertex numbering is deterministic: classes occupy contiguous index
//! ranges in declaration order.

use crate::graph::{GraphError, Host, MultiDigraph, MultiGraph, VertexSet};
use crate::guest::is_chordless;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid cycle packing: {0}")]
    BadPacking(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A family tag with its integer parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    /// Complete graph on `n` vertices.
    Complete { n: usize },
    /// Complete bipartite graph; classes `0..m` and `m..m+n`.
    CompleteBipartite { m: usize, n: usize },
    /// The orientation of K_{n,n} in which a perfect matching is directed
    /// from the first class to the second and every non-matching edge
    /// emanates from the second class.
    MatchingOrientation { n: usize },
    /// The cyclically oriented Turán digraph D(n, k): k independent
    /// classes of size n with all arcs from class i to class i+1 (mod k).
    CyclicTuran { n: usize, k: usize },
    /// Vertex-disjoint union of `count` cycles of length `len`; length 2
    /// means bigons (undirected) or digons (directed).
    DisjointCycles { count: usize, len: usize, directed: bool },
    /// Transitive tournament: arcs from lower to higher index.
    TransitiveTournament { n: usize },
    /// Path on `n` vertices.
    Path { n: usize },
    /// Cycle on `n` vertices, optionally directed.
    Cycle { n: usize, directed: bool },
}

pub fn generate(spec: &FamilySpec) -> Result<Host, FamilyError> {
    match *spec {
        FamilySpec::Complete { n } => {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Ok(Host::Graph(MultiGraph::from_edges(n, &edges)?))
        }
        FamilySpec::CompleteBipartite { m, n } => {
            if m == 0 || n == 0 {
                return Err(FamilyError::InvalidParameter(
                    "complete bipartite classes must be nonempty".into(),
                ));
            }
            let mut edges = Vec::new();
            for u in 0..m {
                for v in m..m + n {
                    edges.push((u, v));
                }
            }
            Ok(Host::Graph(MultiGraph::from_edges(m + n, &edges)?))
        }
        FamilySpec::MatchingOrientation { n } => {
            if n == 0 {
                return Err(FamilyError::InvalidParameter("matching orientation needs n >= 1".into()));
            }
            let mut arcs = Vec::new();
            for i in 0..n {
                arcs.push((i, n + i));
            }
            for j in 0..n {
                for i in 0..n {
                    if i != j {
                        arcs.push((n + j, i));
                    }
                }
            }
            Ok(Host::Digraph(MultiDigraph::from_arcs(2 * n, &arcs)?))
        }
        FamilySpec::CyclicTuran { n, k } => {
            if n < 1 || k < 3 {
                return Err(FamilyError::InvalidParameter(format!(
                    "cyclic Turán digraph needs n >= 1 and k >= 3, got n={n}, k={k}"
                )));
            }
            let mut arcs = Vec::new();
            for c in 0..k {
                let next = (c + 1) % k;
                for i in 0..n {
                    for j in 0..n {
                        arcs.push((c * n + i, next * n + j));
                    }
                }
            }
            Ok(Host::Digraph(MultiDigraph::from_arcs(n * k, &arcs)?))
        }
        FamilySpec::DisjointCycles { count, len, directed } => {
            if len < 2 {
                return Err(FamilyError::InvalidParameter("cycle length must be >= 2".into()));
            }
            let n = count * len;
            if directed {
                let mut arcs = Vec::new();
                for c in 0..count {
                    let base = c * len;
                    for i in 0..len {
                        arcs.push((base + i, base + (i + 1) % len));
                    }
                }
                Ok(Host::Digraph(MultiDigraph::from_arcs(n, &arcs)?))
            } else {
                let mut edges = Vec::new();
                for c in 0..count {
                    let base = c * len;
                    if len == 2 {
                        edges.push((base, base + 1));
                        edges.push((base, base + 1));
                    } else {
                        for i in 0..len {
                            edges.push((base + i, base + (i + 1) % len));
                        }
                    }
                }
                Ok(Host::Graph(MultiGraph::from_edges(n, &edges)?))
            }
        }
        FamilySpec::TransitiveTournament { n } => {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    arcs.push((u, v));
                }
            }
            Ok(Host::Digraph(MultiDigraph::from_arcs(n, &arcs)?))
        }
        FamilySpec::Path { n } => {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Ok(Host::Graph(MultiGraph::from_edges(n, &edges)?))
        }
        FamilySpec::Cycle { n, directed } => {
            generate(&FamilySpec::DisjointCycles { count: 1, len: n, directed })
        }
    }
}

/// SplitMix64 (Steele, Lea & Flood). Fixed algorithm with a documented
/// byte stream, so random fixtures are reproducible across languages.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

/// Erdős–Rényi G(n, p): each pair (u, v), u < v, in lexicographic order
/// draws one SplitMix64 word and is included iff the draw is below
/// `p * 2^64`. Identical (n, p, seed) reproduce the identical edge set.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<MultiGraph, FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::InvalidParameter(format!("p must lie in [0, 1], got {p}")));
    }
    let threshold = (p * (u64::MAX as f64 + 1.0)) as u128;
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (rng.next_u64() as u128) < threshold {
                edges.push((u, v));
            }
        }
    }
    Ok(MultiGraph::from_edges(n, &edges)?)
}

/// Orients a packing of vertex-disjoint induced cycles: each cycle becomes
/// a directed cycle along its given order, and every edge between two
/// packed cycles is oriented from the lower-indexed cycle to the higher.
/// With `keep_rest` false (the default reading) the result lives on the
/// packed vertices only, reindexed ascending, and all other edges are
/// dropped; with `keep_rest` true the remaining edges are kept and
/// oriented from lower to higher vertex index. Returns the digraph and the
/// new→old index map.
pub fn orient_outerplay(
    g: &MultiGraph,
    packing: &[Vec<usize>],
    keep_rest: bool,
) -> Result<(MultiDigraph, Vec<usize>), FamilyError> {
    let host = Host::Graph(g.clone());
    let mut cycle_of = vec![usize::MAX; g.n()];
    for (ci, cycle) in packing.iter().enumerate() {
        let witness = crate::graph::CycleWitness {
            vertices: cycle.clone(),
            kind: crate::graph::CycleKind::Undirected,
        };
        if !witness.verify(&host) || !is_chordless(&host, &witness) {
            return Err(FamilyError::BadPacking(format!(
                "sequence {cycle:?} is not an induced cycle of the host"
            )));
        }
        for &v in cycle {
            if cycle_of[v] != usize::MAX {
                return Err(FamilyError::BadPacking(format!(
                    "vertex {v} appears in two packed cycles"
                )));
            }
            cycle_of[v] = ci;
        }
    }

    let keep: VertexSet = if keep_rest {
        (0..g.n()).collect()
    } else {
        (0..g.n()).filter(|&v| cycle_of[v] != usize::MAX).collect()
    };
    let new_to_old: Vec<usize> = keep.iter().copied().collect();
    let mut old_to_new = vec![usize::MAX; g.n()];
    for (new, &old) in new_to_old.iter().enumerate() {
        old_to_new[old] = new;
    }

    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for cycle in packing {
        let k = cycle.len();
        if k == 2 {
            // A bigon becomes a digon.
            arcs.push((old_to_new[cycle[0]], old_to_new[cycle[1]]));
            arcs.push((old_to_new[cycle[1]], old_to_new[cycle[0]]));
        } else {
            for i in 0..k {
                arcs.push((old_to_new[cycle[i]], old_to_new[cycle[(i + 1) % k]]));
            }
        }
    }
    for (u, v, m) in g.edges() {
        let (cu, cv) = (cycle_of[u], cycle_of[v]);
        if cu != usize::MAX && cv != usize::MAX {
            if cu == cv {
                continue; // cycle edges already oriented; chords cannot exist
            }
            let (tail, head) = if cu < cv { (u, v) } else { (v, u) };
            for _ in 0..m {
                arcs.push((old_to_new[tail], old_to_new[head]));
            }
        } else if keep_rest {
            for _ in 0..m {
                arcs.push((old_to_new[u.min(v)], old_to_new[u.max(v)]));
            }
        }
    }
    let d = MultiDigraph::from_arcs(new_to_old.len(), &arcs)?;
    Ok((d, new_to_old))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{psi_h, SolverConfig};

    #[test]
    fn cyclic_turan_counts() {
        let d23 = generate(&FamilySpec::CyclicTuran { n: 2, k: 3 }).unwrap();
        assert_eq!(d23.n(), 6);
        assert_eq!(d23.size(), 12);
        assert!(generate(&FamilySpec::CyclicTuran { n: 2, k: 2 }).is_err());
    }

    #[test]
    fn cyclic_turan_classes_are_independent() {
        let d23 = generate(&FamilySpec::CyclicTuran { n: 2, k: 3 }).unwrap();
        let class: crate::graph::VertexSet = [0, 1].into_iter().collect();
        let (sub, _) = d23.induced(&class).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.size(), 0, "a partition class spans no arcs");
    }

    #[test]
    fn matching_orientation_counts() {
        let d2 = generate(&FamilySpec::MatchingOrientation { n: 2 }).unwrap();
        assert_eq!(d2.n(), 4);
        assert_eq!(d2.size(), 4);
        let d = d2.as_digraph().unwrap();
        assert!(d.has_arc(0, 2) && d.has_arc(1, 3), "matching first -> second");
        assert!(d.has_arc(3, 0) && d.has_arc(2, 1), "non-matching arcs leave the second class");
    }

    #[test]
    fn transitive_tournament_is_acyclic() {
        let t4 = generate(&FamilySpec::TransitiveTournament { n: 4 }).unwrap();
        assert_eq!(t4.size(), 6);
        assert!(t4.find_cycle(&crate::graph::full_set(4)).unwrap().is_none());
    }

    #[test]
    fn disjoint_cycles_layout() {
        let g = generate(&FamilySpec::DisjointCycles { count: 2, len: 2, directed: false })
            .unwrap();
        let g = g.as_graph().unwrap();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(2, 3), 2);
        let d = generate(&FamilySpec::DisjointCycles { count: 1, len: 2, directed: true })
            .unwrap();
        let d = d.as_digraph().unwrap();
        assert!(d.has_arc(0, 1) && d.has_arc(1, 0));
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(gnp(6, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gnp(6, 1.0, 1).unwrap().edge_count(), 15);
        assert!(gnp(3, 1.5, 1).is_err());
    }

    #[test]
    fn gnp_is_reproducible() {
        let a = gnp(10, 0.5, 42).unwrap();
        let b = gnp(10, 0.5, 42).unwrap();
        assert_eq!(a, b);
        let c = gnp(10, 0.5, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn gnp_fixture_seed_42() {
        // Regression fixture captured from the generator at (10, 0.5, 42).
        let g = gnp(10, 0.5, 42).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
        assert_eq!(
            edges,
            vec![
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (0, 7),
                (0, 9),
                (1, 3),
                (1, 4),
                (1, 8),
                (1, 9),
                (2, 3),
                (2, 4),
                (2, 7),
                (3, 4),
                (3, 5),
                (5, 6),
                (5, 7),
                (5, 8),
                (6, 7),
                (6, 9),
                (7, 8)
            ]
        );
    }

    #[test]
    fn splitmix_reference_stream() {
        // First outputs for seed 0 must match the published SplitMix64
        // test vector.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn outerplay_disjoint_triangles() {
        let g = generate(&FamilySpec::DisjointCycles { count: 3, len: 3, directed: false })
            .unwrap();
        let g = g.as_graph().unwrap();
        let packing: Vec<Vec<usize>> =
            (0..3).map(|c| vec![3 * c, 3 * c + 1, 3 * c + 2]).collect();
        let (d, _) = orient_outerplay(g, &packing, false).unwrap();
        assert_eq!(d.n(), 9);
        assert_eq!(d.arc_count(), 9);
        assert!(d.find_directed_cut().is_some());
        // The orientation of a packing of C(3,2) = 3 cycles reaches
        // adichromatic number at least 3.
        let adi = psi_h(
            crate::guest::GuestClass::DirectedCycles,
            &Host::Digraph(d),
            &SolverConfig::default(),
        )
        .unwrap();
        assert!(adi.value >= 3);
    }

    #[test]
    fn outerplay_cross_edges_point_to_higher_cycle() {
        // Two triangles joined by one edge 2-3.
        let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        edges.push((2, 3));
        let g = MultiGraph::from_edges(6, &edges).unwrap();
        let packing = vec![vec![0, 1, 2], vec![3, 4, 5]];
        let (d, _) = orient_outerplay(&g, &packing, false).unwrap();
        assert!(d.has_arc(2, 3));
        assert!(!d.has_arc(3, 2));
    }

    #[test]
    fn outerplay_cross_arcs_form_directed_cuts() {
        // Every pair of packed cycles is separated by a directed cut, so
        // the adichromatic number is invariant under deleting all cross
        // arcs.
        let mut edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)];
        edges.extend([(2, 3), (0, 4)]);
        let g = MultiGraph::from_edges(6, &edges).unwrap();
        let packing = vec![vec![0, 1, 2], vec![3, 4, 5]];
        let (d, _) = orient_outerplay(&g, &packing, false).unwrap();
        let cfg = SolverConfig::default();
        let guest = crate::guest::GuestClass::DirectedCycles;
        let with_cross = psi_h(guest, &Host::Digraph(d.clone()), &cfg).unwrap().value;
        let (x, cut) = d.find_directed_cut().unwrap();
        assert_eq!(x, [0, 1, 2].into_iter().collect());
        let stripped = d.delete_arcs(&cut);
        let without = psi_h(guest, &Host::Digraph(stripped), &cfg).unwrap().value;
        assert_eq!(with_cross, without);
    }

    #[test]
    fn outerplay_drops_or_keeps_unpacked_vertices() {
        // Triangle plus a pendant vertex 3.
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let packing = vec![vec![0, 1, 2]];
        let (dropped, map) = orient_outerplay(&g, &packing, false).unwrap();
        assert_eq!(dropped.n(), 3);
        assert_eq!(map, vec![0, 1, 2]);
        let (kept, _) = orient_outerplay(&g, &packing, true).unwrap();
        assert_eq!(kept.n(), 4);
        assert!(kept.has_arc(2, 3));
    }

    #[test]
    fn outerplay_rejects_bad_packings() {
        let g = MultiGraph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(orient_outerplay(&g, &[vec![0, 1, 3]], false).is_err());
        assert!(orient_outerplay(&g, &[vec![0, 1, 2], vec![2, 3, 0]], false).is_err());
    }
}
