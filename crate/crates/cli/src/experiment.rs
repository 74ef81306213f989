//! Corpus experiments: deterministic instance grids, one solver sweep per
//! instance, tab-separated output.
//!
//! Rows are bit-identical across reruns with fixed seeds and budgets: the
//! cost column reports deterministic search-node counts rather than wall
//! time, and parallel execution (`jobs`) only distributes whole rows,
//! which are written back in instance order.

use ccol_core::families::{generate, gnp, FamilySpec};
use ccol_core::graph::{Host, HostKind};
use ccol_core::guest::GuestClass;
use ccol_core::solver::{chi_h, dac, nu_h, psi_h, tau_h, SolverConfig, SolverError};
use rayon::prelude::*;

#[derive(Debug, Clone)]
pub enum CorpusSpec {
    /// `trials` draws of G(n, p) with seeds `seed, seed+1, ...`.
    Gnp { n: usize, p: f64, trials: usize, seed: u64 },
    /// The fixed family grid.
    Families,
    /// Family grid padded with a seeded G(n, p) sweep up to `count`
    /// instances (every fourth one bidirected into a digraph).
    Mixed { count: usize, seed: u64 },
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub id: String,
    pub host: Host,
}

pub fn family_grid() -> Vec<Instance> {
    let mut out = Vec::new();
    let mut push = |id: String, host: Host| out.push(Instance { id, host });
    for n in 1..=8 {
        push(format!("kn-{n}"), generate(&FamilySpec::Complete { n }).unwrap());
    }
    for m in 1..=5 {
        for n in m..=5 {
            push(
                format!("kmn-{m}-{n}"),
                generate(&FamilySpec::CompleteBipartite { m, n }).unwrap(),
            );
        }
    }
    for n in 1..=4 {
        push(format!("dn-{n}"), generate(&FamilySpec::MatchingOrientation { n }).unwrap());
    }
    for n in 1..=3 {
        for k in 3..=4 {
            push(format!("turan-{n}-{k}"), generate(&FamilySpec::CyclicTuran { n, k }).unwrap());
        }
    }
    for (c, l) in [(1, 3), (3, 3), (1, 2), (2, 2), (2, 4)] {
        push(
            format!("dicycles-{c}x{l}"),
            generate(&FamilySpec::DisjointCycles { count: c, len: l, directed: true }).unwrap(),
        );
        push(
            format!("cycles-{c}x{l}"),
            generate(&FamilySpec::DisjointCycles { count: c, len: l, directed: false }).unwrap(),
        );
    }
    for n in 1..=7 {
        push(format!("tt-{n}"), generate(&FamilySpec::TransitiveTournament { n }).unwrap());
    }
    for n in 2..=6 {
        push(format!("path-{n}"), generate(&FamilySpec::Path { n }).unwrap());
    }
    for n in 3..=8 {
        push(format!("cycle-{n}"), generate(&FamilySpec::Cycle { n, directed: false }).unwrap());
    }
    for n in 2..=7 {
        push(format!("dicycle-{n}"), generate(&FamilySpec::Cycle { n, directed: true }).unwrap());
    }
    for n in 2..=4 {
        let g = generate(&FamilySpec::Complete { n }).unwrap();
        let g = g.as_graph().unwrap();
        push(format!("bikn-{n}"), Host::Digraph(g.bidirect().unwrap()));
        push(format!("2kn-{n}"), Host::Graph(g.double().unwrap()));
    }
    out
}

pub fn build_corpus(spec: &CorpusSpec) -> Vec<Instance> {
    match *spec {
        CorpusSpec::Gnp { n, p, trials, seed } => (0..trials)
            .map(|t| {
                let s = seed + t as u64;
                Instance {
                    id: format!("gnp-{n}-{p}-{s}"),
                    host: Host::Graph(gnp(n, p, s).unwrap()),
                }
            })
            .collect(),
        CorpusSpec::Families => family_grid(),
        CorpusSpec::Mixed { count, seed } => {
            let mut out = family_grid();
            out.truncate(count);
            let ps = [0.2, 0.3, 0.5, 0.7, 0.8];
            let mut i = 0u64;
            while out.len() < count {
                let p = ps[(i % 5) as usize];
                let s = seed + i;
                if i % 4 == 3 {
                    let n = 4 + (i % 5) as usize; // bidirected hosts stay small
                    let g = gnp(n, p, s).unwrap();
                    out.push(Instance {
                        id: format!("bignp-{n}-{p}-{s}"),
                        host: Host::Digraph(g.bidirect().unwrap()),
                    });
                } else {
                    let n = 4 + (i % 7) as usize;
                    out.push(Instance {
                        id: format!("gnp-{n}-{p}-{s}"),
                        host: Host::Graph(gnp(n, p, s).unwrap()),
                    });
                }
                i += 1;
            }
            out
        }
    }
}

/// Parameter values of one instance; `None` marks a failed computation.
#[derive(Debug, Clone, Default)]
pub struct Row {
    pub chi: Option<usize>,
    pub psi: Option<usize>,
    pub tau: Option<usize>,
    pub nu: Option<usize>,
    pub dac: Option<usize>,
    pub degeneracy: Option<usize>,
    pub nodes: u64,
    pub flag: &'static str,
}

pub fn compute_row(host: &Host, cfg: &SolverConfig) -> Row {
    let mut row = Row { flag: "ok", ..Row::default() };
    let guest = GuestClass::default_for(host.kind());
    let track = |r: Result<ccol_core::solver::ParamResult, SolverError>,
                 row: &mut Row|
     -> Option<usize> {
        match r {
            Ok(res) => {
                row.nodes += res.nodes;
                Some(res.value)
            }
            Err(SolverError::Budget { .. }) => {
                if row.flag == "ok" {
                    row.flag = "budget";
                }
                None
            }
            Err(_) => {
                if row.flag == "ok" {
                    row.flag = "error";
                }
                None
            }
        }
    };
    row.chi = track(chi_h(guest, host, cfg), &mut row);
    row.psi = track(psi_h(guest, host, cfg), &mut row);
    row.tau = track(tau_h(guest, host, cfg), &mut row);
    row.nu = track(nu_h(guest, host, true, cfg), &mut row);
    match host {
        Host::Digraph(d) => {
            row.dac = track(dac(d, cfg), &mut row);
        }
        Host::Graph(g) => {
            row.degeneracy = Some(g.degeneracy(false).0);
        }
    }
    row
}

fn cell(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub const TABLE_HEADER: &str = "id\tkind\tn\tm\tchi\tpsi\ttau\tnu\tdac\tdegeneracy\tnodes\tflag";

pub fn run_experiment(instances: &[Instance], cfg: &SolverConfig, jobs: usize) -> String {
    let compute = |inst: &Instance| -> String {
        let row = compute_row(&inst.host, cfg);
        let kind = match inst.host.kind() {
            HostKind::Graph => "graph",
            HostKind::Digraph => "digraph",
        };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            inst.id,
            kind,
            inst.host.n(),
            inst.host.size(),
            cell(row.chi),
            cell(row.psi),
            cell(row.tau),
            cell(row.nu),
            cell(row.dac),
            cell(row.degeneracy),
            row.nodes,
            row.flag
        )
    };
    let rows: Vec<String> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("rayon pool");
        pool.install(|| instances.par_iter().map(compute).collect())
    } else {
        instances.iter().map(compute).collect()
    };
    let mut out = String::from(TABLE_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}
