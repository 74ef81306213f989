//! Text formats: graph files and certificate files.
//!
//! A graph file starts with `graph <n>` or `digraph <n>`, followed by one
//! edge or arc per line as two 0-based vertex indices; repeated lines
//! encode multiplicity and `#` starts a comment.
//!
//! Certificate files start with one of `coloring <k>`, `feedback <k>`,
//! `packing <k>` or `degeneracy <d>`. Coloring certificates carry `class`
//! lines, per-pair `witness` lines (a cycle vertex sequence, or
//! `bigon u v` / `digon u v` / `edge u v`), and for the diachromatic
//! number `arc <i> <j>: u v` lines meaning the arc u→v has its tail u in
//! class j and its head v in class i.

use ccol_core::coloring::{CompletenessCertificate, Partition};
use ccol_core::graph::{CycleKind, Host, HostKind, MultiDigraph, MultiGraph};
use ccol_core::guest::HWitness;
use std::collections::BTreeMap;
use std::fmt;

/// The dac arc table: ordered class pair -> (tail, head).
pub type ArcTable = BTreeMap<(usize, usize), (usize, usize)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, msg: msg.into() })
}

/// Significant lines (1-based number, comment-stripped content).
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let stripped = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let trimmed = stripped.trim();
        if trimmed.is_empty() {
            None
        } else {
            Some((i + 1, trimmed))
        }
    })
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| ParseError {
        line,
        msg: format!("expected {what}, found `{tok}`"),
    })
}

pub fn parse_host(text: &str) -> Result<Host, ParseError> {
    let mut lines = significant_lines(text);
    let Some((lno, header)) = lines.next() else {
        return err(1, "empty file: expected `graph <n>` or `digraph <n>` header");
    };
    let mut toks = header.split_whitespace();
    let kind = match toks.next() {
        Some("graph") => HostKind::Graph,
        Some("digraph") => HostKind::Digraph,
        Some(other) => return err(lno, format!("expected `graph` or `digraph`, found `{other}`")),
        None => unreachable!(),
    };
    let n = match toks.next() {
        Some(t) => parse_usize(t, lno, "vertex count")?,
        None => return err(lno, "missing vertex count in header"),
    };
    if toks.next().is_some() {
        return err(lno, "trailing tokens after header");
    }
    let mut pairs = Vec::new();
    for (lno, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return err(lno, format!("expected two vertex indices, found {} tokens", toks.len()));
        }
        let u = parse_usize(toks[0], lno, "vertex index")?;
        let v = parse_usize(toks[1], lno, "vertex index")?;
        if u >= n || v >= n {
            return err(lno, format!("vertex index out of range (n = {n})"));
        }
        if u == v {
            return err(lno, format!("self-pair at vertex {u} not allowed"));
        }
        pairs.push((u, v));
    }
    match kind {
        HostKind::Graph => Ok(Host::Graph(
            MultiGraph::from_edges(n, &pairs).expect("indices validated above"),
        )),
        HostKind::Digraph => Ok(Host::Digraph(
            MultiDigraph::from_arcs(n, &pairs).expect("indices validated above"),
        )),
    }
}

pub fn render_host(host: &Host) -> String {
    let mut out = String::new();
    match host {
        Host::Graph(g) => {
            out.push_str(&format!("graph {}\n", g.n()));
            for (u, v, m) in g.edges() {
                for _ in 0..m {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        Host::Digraph(d) => {
            out.push_str(&format!("digraph {}\n", d.n()));
            for (u, v, m) in d.arcs() {
                for _ in 0..m {
                    out.push_str(&format!("{u} {v}\n"));
                }
            }
        }
    }
    out
}

/// One witness in certificate syntax.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessLine {
    /// Cycle as a vertex sequence of length >= 3.
    Cycle(Vec<usize>),
    Bigon(usize, usize),
    Digon(usize, usize),
    Edge(usize, usize),
}

impl WitnessLine {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            WitnessLine::Cycle(vs) => vs.clone(),
            WitnessLine::Bigon(u, v) | WitnessLine::Digon(u, v) | WitnessLine::Edge(u, v) => {
                vec![*u, *v]
            }
        }
    }

    fn render(&self) -> String {
        match self {
            WitnessLine::Cycle(vs) => {
                vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            }
            WitnessLine::Bigon(u, v) => format!("bigon {u} {v}"),
            WitnessLine::Digon(u, v) => format!("digon {u} {v}"),
            WitnessLine::Edge(u, v) => format!("edge {u} {v}"),
        }
    }

    fn parse(toks: &[&str], lno: usize) -> Result<WitnessLine, ParseError> {
        match toks {
            ["bigon", u, v] => Ok(WitnessLine::Bigon(
                parse_usize(u, lno, "vertex index")?,
                parse_usize(v, lno, "vertex index")?,
            )),
            ["digon", u, v] => Ok(WitnessLine::Digon(
                parse_usize(u, lno, "vertex index")?,
                parse_usize(v, lno, "vertex index")?,
            )),
            ["edge", u, v] => Ok(WitnessLine::Edge(
                parse_usize(u, lno, "vertex index")?,
                parse_usize(v, lno, "vertex index")?,
            )),
            _ => {
                let vs: Vec<usize> = toks
                    .iter()
                    .map(|t| parse_usize(t, lno, "vertex index"))
                    .collect::<Result<_, _>>()?;
                if vs.len() < 3 {
                    return err(
                        lno,
                        "cycle witnesses need at least 3 vertices; use `bigon`, `digon` or \
                         `edge` for length-2 witnesses",
                    );
                }
                Ok(WitnessLine::Cycle(vs))
            }
        }
    }
}

pub fn witness_line_of(w: &HWitness) -> WitnessLine {
    match w {
        HWitness::Edge(u, v) => WitnessLine::Edge(*u, *v),
        HWitness::Cycle(c) => {
            if c.vertices.len() == 2 {
                match c.kind {
                    CycleKind::Directed => WitnessLine::Digon(c.vertices[0], c.vertices[1]),
                    CycleKind::Undirected => WitnessLine::Bigon(c.vertices[0], c.vertices[1]),
                }
            } else {
                WitnessLine::Cycle(c.vertices.clone())
            }
        }
    }
}

/// Parsed certificate file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertBody {
    Coloring {
        classes: Vec<Vec<usize>>,
        witnesses: Vec<(usize, usize, WitnessLine)>,
        arcs: Vec<(usize, usize, usize, usize)>,
    },
    Feedback { vertices: Vec<usize> },
    Packing { members: Vec<WitnessLine> },
    Degeneracy { d: usize, order: Vec<usize> },
}

pub fn parse_certificate(text: &str) -> Result<CertBody, ParseError> {
    let mut lines = significant_lines(text).peekable();
    let Some((lno, header)) = lines.next() else {
        return err(1, "empty certificate file");
    };
    let toks: Vec<&str> = header.split_whitespace().collect();
    match toks.as_slice() {
        ["coloring", k] => {
            let k = parse_usize(k, lno, "class count")?;
            let mut classes: Vec<Option<Vec<usize>>> = vec![None; k];
            let mut witnesses = Vec::new();
            let mut arcs = Vec::new();
            for (lno, line) in lines {
                let Some((head, rest)) = line.split_once(':') else {
                    return err(lno, "expected `class`, `witness` or `arc` entry with `:`");
                };
                let htoks: Vec<&str> = head.split_whitespace().collect();
                let rtoks: Vec<&str> = rest.split_whitespace().collect();
                match htoks.as_slice() {
                    ["class", i] => {
                        let i = parse_usize(i, lno, "class index")?;
                        if i >= k {
                            return err(lno, format!("class index {i} out of range (k = {k})"));
                        }
                        if classes[i].is_some() {
                            return err(lno, format!("class {i} defined twice"));
                        }
                        let vs: Vec<usize> = rtoks
                            .iter()
                            .map(|t| parse_usize(t, lno, "vertex index"))
                            .collect::<Result<_, _>>()?;
                        classes[i] = Some(vs);
                    }
                    ["witness", i, j] => {
                        let i = parse_usize(i, lno, "class index")?;
                        let j = parse_usize(j, lno, "class index")?;
                        witnesses.push((i, j, WitnessLine::parse(&rtoks, lno)?));
                    }
                    ["arc", i, j] => {
                        let i = parse_usize(i, lno, "class index")?;
                        let j = parse_usize(j, lno, "class index")?;
                        if rtoks.len() != 2 {
                            return err(lno, "arc entries carry exactly two vertices");
                        }
                        arcs.push((
                            i,
                            j,
                            parse_usize(rtoks[0], lno, "vertex index")?,
                            parse_usize(rtoks[1], lno, "vertex index")?,
                        ));
                    }
                    _ => return err(lno, format!("unrecognized entry `{head}`")),
                }
            }
            let classes: Vec<Vec<usize>> = classes
                .into_iter()
                .enumerate()
                .map(|(i, c)| c.ok_or(ParseError { line: lno, msg: format!("class {i} missing") }))
                .collect::<Result<_, _>>()?;
            Ok(CertBody::Coloring { classes, witnesses, arcs })
        }
        ["feedback", k] => {
            let k = parse_usize(k, lno, "set size")?;
            let mut vertices = None;
            for (lno, line) in lines {
                let Some((head, rest)) = line.split_once(':') else {
                    return err(lno, "expected `vertices:` entry");
                };
                if head.trim() != "vertices" || vertices.is_some() {
                    return err(lno, "feedback certificates carry a single `vertices:` entry");
                }
                let vs: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| parse_usize(t, lno, "vertex index"))
                    .collect::<Result<_, _>>()?;
                vertices = Some(vs);
            }
            let vertices = vertices.unwrap_or_default();
            if vertices.len() != k {
                return err(lno, format!("feedback header says {k} but {} listed", vertices.len()));
            }
            Ok(CertBody::Feedback { vertices })
        }
        ["packing", k] => {
            let k = parse_usize(k, lno, "packing size")?;
            let mut members = Vec::new();
            for (lno, line) in lines {
                let Some((head, rest)) = line.split_once(':') else {
                    return err(lno, "expected `member <i>:` entry");
                };
                let htoks: Vec<&str> = head.split_whitespace().collect();
                match htoks.as_slice() {
                    ["member", i] => {
                        let i = parse_usize(i, lno, "member index")?;
                        if i != members.len() {
                            return err(lno, format!("member {i} out of order"));
                        }
                        let rtoks: Vec<&str> = rest.split_whitespace().collect();
                        members.push(WitnessLine::parse(&rtoks, lno)?);
                    }
                    _ => return err(lno, format!("unrecognized entry `{head}`")),
                }
            }
            if members.len() != k {
                return err(lno, format!("packing header says {k} but {} listed", members.len()));
            }
            Ok(CertBody::Packing { members })
        }
        ["degeneracy", d] => {
            let d = parse_usize(d, lno, "degeneracy")?;
            let mut order = None;
            for (lno, line) in lines {
                let Some((head, rest)) = line.split_once(':') else {
                    return err(lno, "expected `order:` entry");
                };
                if head.trim() != "order" || order.is_some() {
                    return err(lno, "degeneracy certificates carry a single `order:` entry");
                }
                let vs: Vec<usize> = rest
                    .split_whitespace()
                    .map(|t| parse_usize(t, lno, "vertex index"))
                    .collect::<Result<_, _>>()?;
                order = Some(vs);
            }
            Ok(CertBody::Degeneracy { d, order: order.unwrap_or_default() })
        }
        _ => err(lno, "expected `coloring`, `feedback`, `packing` or `degeneracy` header"),
    }
}

pub fn render_coloring_certificate(
    partition: &Partition,
    completeness: Option<&CompletenessCertificate>,
    arc_table: Option<&ArcTable>,
) -> String {
    let mut out = format!("coloring {}\n", partition.len());
    for (i, b) in partition.blocks().iter().enumerate() {
        let vs: Vec<String> = b.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("class {i}: {}\n", vs.join(" ")));
    }
    if let Some(cert) = completeness {
        for (&(i, j), w) in &cert.witnesses {
            out.push_str(&format!("witness {i} {j}: {}\n", witness_line_of(w).render()));
        }
    }
    if let Some(table) = arc_table {
        for (&(i, j), &(u, v)) in table {
            out.push_str(&format!("arc {i} {j}: {u} {v}\n"));
        }
    }
    out
}

pub fn render_feedback_certificate(vertices: &ccol_core::graph::VertexSet) -> String {
    let vs: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    format!("feedback {}\nvertices: {}\n", vertices.len(), vs.join(" "))
}

pub fn render_packing_certificate(members: &[HWitness]) -> String {
    let mut out = format!("packing {}\n", members.len());
    for (i, m) in members.iter().enumerate() {
        out.push_str(&format!("member {i}: {}\n", witness_line_of(m).render()));
    }
    out
}

pub fn render_degeneracy_certificate(d: usize, order: &[usize]) -> String {
    let vs: Vec<String> = order.iter().map(|v| v.to_string()).collect();
    format!("degeneracy {d}\norder: {}\n", vs.join(" "))
}
