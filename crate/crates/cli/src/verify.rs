//! Re-verification of certificate files against a host, from scratch.
//!
//! The verifier trusts nothing: classes are checked to partition the
//! vertex set, properness is recomputed, and every witness line is checked
//! against the host's edges. Completeness witnesses need not be chordless;
//! any valid cycle inside the stated union proves the pair.

use crate::io::{CertBody, WitnessLine};
use ccol_core::coloring::Partition;
use ccol_core::graph::{Host, VertexSet};
use ccol_core::guest::GuestClass;

/// Verification mode of `ccol verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Proper,
    Complete,
    Dac,
}

/// Checks a certificate; `Err` carries the first violated clause.
pub fn verify_certificate(
    host: &Host,
    guest: GuestClass,
    cert: &CertBody,
    mode: VerifyMode,
) -> Result<(), String> {
    let CertBody::Coloring { classes, witnesses, arcs } = cert else {
        return Err("certificate is not a coloring".into());
    };
    let blocks: Vec<VertexSet> =
        classes.iter().map(|c| c.iter().copied().collect()).collect();
    for (i, (c, b)) in classes.iter().zip(&blocks).enumerate() {
        if c.len() != b.len() {
            return Err(format!("class {i} repeats a vertex"));
        }
    }
    Partition::new(host.n(), blocks)
        .map_err(|e| format!("classes do not partition the vertex set: {e}"))?;
    // Partition::new canonicalizes, but clause checks must follow the
    // file's own class numbering.
    let class_sets: Vec<VertexSet> =
        classes.iter().map(|c| c.iter().copied().collect()).collect();

    match mode {
        VerifyMode::Proper | VerifyMode::Complete => {
            if guest.host_kind() != host.kind() {
                return Err(format!(
                    "guest `{guest}` applies to {} hosts",
                    guest.host_kind()
                ));
            }
            for (i, b) in class_sets.iter().enumerate() {
                if let Some(w) =
                    ccol_core::guest::find_h_witness(guest, host, b).map_err(|e| e.to_string())?
                {
                    return Err(format!(
                        "class {i} is not H-free (witness on {:?})",
                        w.vertices()
                    ));
                }
            }
            if mode == VerifyMode::Proper {
                return Ok(());
            }
            let k = class_sets.len();
            for i in 0..k {
                for j in i + 1..k {
                    let Some((_, _, w)) = witnesses
                        .iter()
                        .find(|(a, b, _)| (*a, *b) == (i, j) || (*a, *b) == (j, i))
                    else {
                        return Err(format!("missing witness for class pair ({i}, {j})"));
                    };
                    check_witness_shape(guest, w)
                        .map_err(|e| format!("witness for pair ({i}, {j}): {e}"))?;
                    let union: VertexSet =
                        class_sets[i].union(&class_sets[j]).copied().collect();
                    if !w.vertices().iter().all(|v| union.contains(v)) {
                        return Err(format!(
                            "witness for pair ({i}, {j}) leaves the union of the two classes"
                        ));
                    }
                    check_witness_in_host(host, w)
                        .map_err(|e| format!("witness for pair ({i}, {j}): {e}"))?;
                }
            }
            Ok(())
        }
        VerifyMode::Dac => {
            let Host::Digraph(d) = host else {
                return Err("diachromatic certificates apply to digraphs".into());
            };
            for (i, b) in class_sets.iter().enumerate() {
                if host.find_cycle(b).map_err(|e| e.to_string())?.is_some() {
                    return Err(format!("class {i} is not acyclic"));
                }
            }
            let k = class_sets.len();
            for i in 0..k {
                for j in 0..k {
                    if i == j {
                        continue;
                    }
                    let Some(&(_, _, u, v)) =
                        arcs.iter().find(|&&(a, b, _, _)| (a, b) == (i, j))
                    else {
                        return Err(format!("missing arc entry for ordered pair ({i}, {j})"));
                    };
                    if !d.has_arc(u, v) {
                        return Err(format!("arc entry ({i}, {j}): arc {u}->{v} not in host"));
                    }
                    if !class_sets[j].contains(&u) {
                        return Err(format!("arc entry ({i}, {j}): tail {u} not in class {j}"));
                    }
                    if !class_sets[i].contains(&v) {
                        return Err(format!("arc entry ({i}, {j}): head {v} not in class {i}"));
                    }
                }
            }
            Ok(())
        }
    }
}

fn check_witness_shape(guest: GuestClass, w: &WitnessLine) -> Result<(), String> {
    let ok = matches!(
        (guest, w),
        (GuestClass::UndirectedCycles, WitnessLine::Cycle(_))
            | (GuestClass::UndirectedCycles, WitnessLine::Bigon(..))
            | (GuestClass::DirectedCycles, WitnessLine::Cycle(_))
            | (GuestClass::DirectedCycles, WitnessLine::Digon(..))
            | (GuestClass::SingleEdge, WitnessLine::Edge(..))
    );
    if ok {
        Ok(())
    } else {
        Err(format!("witness type does not match guest `{guest}`"))
    }
}

fn check_witness_in_host(host: &Host, w: &WitnessLine) -> Result<(), String> {
    let vs = w.vertices();
    let distinct: VertexSet = vs.iter().copied().collect();
    if distinct.len() != vs.len() {
        return Err("witness repeats a vertex".into());
    }
    if vs.iter().any(|&v| v >= host.n()) {
        return Err("witness vertex out of range".into());
    }
    match (host, w) {
        (Host::Graph(g), WitnessLine::Cycle(vs)) => {
            let k = vs.len();
            for i in 0..k {
                if !g.adjacent(vs[i], vs[(i + 1) % k]) {
                    return Err(format!("missing edge ({}, {})", vs[i], vs[(i + 1) % k]));
                }
            }
            Ok(())
        }
        (Host::Graph(g), WitnessLine::Bigon(u, v)) => {
            if g.multiplicity(*u, *v) >= 2 {
                Ok(())
            } else {
                Err(format!("({u}, {v}) is not a bigon"))
            }
        }
        (Host::Graph(g), WitnessLine::Edge(u, v)) => {
            if g.adjacent(*u, *v) {
                Ok(())
            } else {
                Err(format!("missing edge ({u}, {v})"))
            }
        }
        (Host::Digraph(d), WitnessLine::Cycle(vs)) => {
            let k = vs.len();
            for i in 0..k {
                if !d.has_arc(vs[i], vs[(i + 1) % k]) {
                    return Err(format!("missing arc {}->{}", vs[i], vs[(i + 1) % k]));
                }
            }
            Ok(())
        }
        (Host::Digraph(d), WitnessLine::Digon(u, v)) => {
            if d.has_arc(*u, *v) && d.has_arc(*v, *u) {
                Ok(())
            } else {
                Err(format!("({u}, {v}) is not a digon"))
            }
        }
        _ => Err("witness type does not match host kind".into()),
    }
}
