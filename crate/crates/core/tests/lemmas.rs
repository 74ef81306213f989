//! The parameter inequalities and transformation monotonicity laws,
//! exercised over the fixture corpus.

mod common;

use ccol_core::families::SplitMix64;
use ccol_core::graph::{Host, HostKind, VertexSet};
use ccol_core::guest::GuestClass;
use ccol_core::solver::{chi_h, dac, nu_h, psi_h, tau_h, SolverConfig};
use common::{all_fixtures, digraph_fixtures, graph_fixtures, strongly_connected_by_closure};

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn guests_for(host: &Host) -> Vec<GuestClass> {
    match host.kind() {
        HostKind::Graph => vec![GuestClass::UndirectedCycles, GuestClass::SingleEdge],
        HostKind::Digraph => vec![GuestClass::DirectedCycles],
    }
}

#[test]
fn sandwich_chains() {
    for (name, host) in all_fixtures(8) {
        for g in guests_for(&host) {
            let chi = chi_h(g, &host, &cfg()).unwrap().value;
            let psi = psi_h(g, &host, &cfg()).unwrap().value;
            let tau = tau_h(g, &host, &cfg()).unwrap().value;
            let nu = nu_h(g, &host, true, &cfg()).unwrap().value;
            assert!(chi <= psi, "{name}/{g}: chi {chi} > psi {psi}");
            assert!(psi <= tau + 1, "{name}/{g}: psi {psi} > tau+1 {}", tau + 1);
            assert!(nu <= tau, "{name}/{g}: nu {nu} > tau {tau}");
            assert!(psi <= 2 * nu + 1, "{name}/{g}: psi {psi} > 2nu+1 {}", 2 * nu + 1);
        }
        if let Some(d) = host.as_digraph() {
            let adi = psi_h(GuestClass::DirectedCycles, &host, &cfg()).unwrap().value;
            let dia = dac(d, &cfg()).unwrap().value;
            assert!(adi <= dia, "{name}: adi {adi} > dac {dia}");
        }
    }
}

#[test]
fn vertex_deletion_stability() {
    for (name, host) in all_fixtures(7) {
        let g = GuestClass::default_for(host.kind());
        let psi = psi_h(g, &host, &cfg()).unwrap().value;
        for v in 0..host.n() {
            let (smaller, _) = host.delete_vertex(v).unwrap();
            let p = psi_h(g, &smaller, &cfg()).unwrap().value;
            assert!(
                p <= psi && p + 1 >= psi,
                "{name}: psi {psi}, psi after deleting {v} is {p}"
            );
        }
    }
}

#[test]
fn induced_monotonicity() {
    let mut rng = SplitMix64::new(99);
    for (name, host) in all_fixtures(8) {
        let g = GuestClass::default_for(host.kind());
        let psi = psi_h(g, &host, &cfg()).unwrap().value;
        for _ in 0..3 {
            let s: VertexSet =
                (0..host.n()).filter(|_| rng.next_u64().is_multiple_of(2)).collect();
            if s.is_empty() {
                continue;
            }
            let (sub, _) = host.induced(&s).unwrap();
            let p = psi_h(g, &sub, &cfg()).unwrap().value;
            assert!(p <= psi, "{name}: induced on {s:?} has psi {p} > {psi}");
        }
    }
}

#[test]
fn directed_cut_invariance() {
    for (name, host) in digraph_fixtures(8) {
        let d = host.as_digraph().unwrap();
        let Some((_, cut)) = d.find_directed_cut() else { continue };
        let pruned = Host::Digraph(d.delete_arcs(&cut));
        let before = psi_h(GuestClass::DirectedCycles, &host, &cfg()).unwrap().value;
        let after = psi_h(GuestClass::DirectedCycles, &pruned, &cfg()).unwrap().value;
        assert_eq!(before, after, "{name}: adi changed after deleting a directed cut");
    }
}

#[test]
fn directed_cut_exists_iff_not_strongly_connected() {
    for (name, host) in digraph_fixtures(8) {
        let d = host.as_digraph().unwrap();
        let has_cut = d.find_directed_cut().is_some();
        let sc = strongly_connected_by_closure(d);
        if d.n() < 2 {
            assert!(!has_cut, "{name}: trivial digraph cannot have a cut");
        } else {
            assert_eq!(has_cut, !sc, "{name}: cut existence vs strong connectivity");
        }
    }
}

#[test]
fn butterfly_contraction_monotone() {
    for (name, host) in digraph_fixtures(7) {
        let d = host.as_digraph().unwrap();
        let Some((u, v)) = d.arcs().map(|(u, v, _)| (u, v)).find(|&(u, v)| {
            d.out_degree(u, true) == 1 || d.in_degree(v, true) == 1
        }) else {
            continue;
        };
        let (contracted, _) = d.butterfly_contract(u, v).unwrap();
        let before = psi_h(GuestClass::DirectedCycles, &host, &cfg()).unwrap().value;
        let after =
            psi_h(GuestClass::DirectedCycles, &Host::Digraph(contracted), &cfg()).unwrap().value;
        assert!(after <= before, "{name}: contracting ({u},{v}) raised adi {before} -> {after}");
    }
}

#[test]
fn tree_contraction_monotone() {
    for (name, host) in graph_fixtures(7) {
        let g = host.as_graph().unwrap();
        // A single multiplicity-1 edge always induces a tree.
        let Some((u, v)) = g.edges().find(|&(_, _, m)| m == 1).map(|(u, v, _)| (u, v)) else {
            continue;
        };
        let x: VertexSet = [u, v].into_iter().collect();
        let (contracted, _) = g.contract_tree(&x).unwrap();
        let before = psi_h(GuestClass::UndirectedCycles, &host, &cfg()).unwrap().value;
        let after = psi_h(GuestClass::UndirectedCycles, &Host::Graph(contracted), &cfg())
            .unwrap()
            .value;
        assert!(after <= before, "{name}: contracting {{{u},{v}}} raised ava {before} -> {after}");
    }
}

#[test]
fn subdivision_monotone() {
    for (name, host) in graph_fixtures(7) {
        let g = host.as_graph().unwrap();
        let Some((u, v)) = g.edges().next().map(|(u, v, _)| (u, v)) else { continue };
        let sub = g.subdivide_edge(u, v).unwrap();
        let before = psi_h(GuestClass::UndirectedCycles, &host, &cfg()).unwrap().value;
        let after =
            psi_h(GuestClass::UndirectedCycles, &Host::Graph(sub), &cfg()).unwrap().value;
        assert!(after >= before, "{name}: subdividing ({u},{v}) lowered ava {before} -> {after}");
    }
}

#[test]
fn achromatic_equalities_small() {
    let mut hosts = graph_fixtures(6);
    for seed in 0..8u64 {
        let g = ccol_core::families::gnp(7, 0.4 + 0.05 * seed as f64, 500 + seed).unwrap();
        hosts.push((format!("gnp7-{seed}"), Host::Graph(g)));
    }
    for (name, host) in hosts {
        let g = host.as_graph().unwrap();
        if !g.is_simple() {
            continue;
        }
        let psi_edge = psi_h(GuestClass::SingleEdge, &host, &cfg()).unwrap().value;
        let adi = psi_h(
            GuestClass::DirectedCycles,
            &Host::Digraph(g.bidirect().unwrap()),
            &cfg(),
        )
        .unwrap()
        .value;
        let ava = psi_h(
            GuestClass::UndirectedCycles,
            &Host::Graph(g.double().unwrap()),
            &cfg(),
        )
        .unwrap()
        .value;
        assert_eq!(psi_edge, adi, "{name}: achromatic vs bidirected adi");
        assert_eq!(psi_edge, ava, "{name}: achromatic vs doubled ava");
    }
}

#[test]
fn iterated_subdivision_keeps_lower_bound() {
    // Subdividing every edge of K4 and contracting the subdivision paths
    // back must not change ava; the subdivision itself is at least as
    // high.
    let k4 = common::graph_fixtures(4)
        .into_iter()
        .find(|(n, _)| n == "k4")
        .unwrap()
        .1;
    let g = k4.as_graph().unwrap().clone();
    let base = psi_h(GuestClass::UndirectedCycles, &k4, &cfg()).unwrap().value;
    let mut sub = g.clone();
    let originals: Vec<(usize, usize)> = g.edges().map(|(u, v, _)| (u, v)).collect();
    for (u, v) in &originals {
        sub = sub.subdivide_edge(*u, *v).unwrap();
    }
    let subdivided = psi_h(GuestClass::UndirectedCycles, &Host::Graph(sub.clone()), &cfg())
        .unwrap()
        .value;
    assert!(subdivided >= base);
    // Contract each subdivision vertex (index >= 4) back into a neighbor.
    let mut current = sub;
    while current.n() > 4 {
        let w = current.n() - 1;
        let nb = current.neighbors(w)[0];
        let x: VertexSet = [nb, w].into_iter().collect();
        let (next, _) = current.contract_tree(&x).unwrap();
        current = next;
    }
    let mut simple_edges: Vec<(usize, usize)> = current.edges().map(|(u, v, _)| (u, v)).collect();
    simple_edges.sort_unstable();
    assert_eq!(simple_edges, originals, "contracting subdivision paths recovers K4");
}
