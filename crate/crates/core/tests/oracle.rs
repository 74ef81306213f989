//! Search solvers against the exhaustive oracles on the fixture corpus.

mod common;

use ccol_core::graph::HostKind;
use ccol_core::guest::GuestClass;
use ccol_core::solver::{
    chi_h, dac, nu_h, oracle_chi, oracle_dac, oracle_nu, oracle_psi, oracle_tau, psi_h, tau_h,
    SolverConfig,
};
use common::all_fixtures;

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

#[test]
fn search_equals_oracle_on_fixture_corpus() {
    for (name, host) in all_fixtures(8) {
        let guests: Vec<GuestClass> = match host.kind() {
            HostKind::Graph => vec![GuestClass::UndirectedCycles, GuestClass::SingleEdge],
            HostKind::Digraph => vec![GuestClass::DirectedCycles],
        };
        for g in guests {
            assert_eq!(
                chi_h(g, &host, &cfg()).unwrap().value,
                oracle_chi(g, &host, &cfg()).unwrap().value,
                "{name}/{g}: chi"
            );
            assert_eq!(
                psi_h(g, &host, &cfg()).unwrap().value,
                oracle_psi(g, &host, &cfg()).unwrap().value,
                "{name}/{g}: psi"
            );
            assert_eq!(
                tau_h(g, &host, &cfg()).unwrap().value,
                oracle_tau(g, &host, &cfg()).unwrap().value,
                "{name}/{g}: tau"
            );
            assert_eq!(
                nu_h(g, &host, true, &cfg()).unwrap().value,
                oracle_nu(g, &host, &cfg()).unwrap().value,
                "{name}/{g}: nu"
            );
            assert_eq!(
                nu_h(g, &host, false, &cfg()).unwrap().value,
                oracle_nu(g, &host, &cfg()).unwrap().value,
                "{name}/{g}: nu (arbitrary-members reading)"
            );
        }
        if let Some(d) = host.as_digraph() {
            assert_eq!(
                dac(d, &cfg()).unwrap().value,
                oracle_dac(d, &cfg()).unwrap().value,
                "{name}: dac"
            );
        }
    }
}
