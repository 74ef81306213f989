//! `ccol` — exact complete-coloring computations on graph files.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 verification failure,
//! 4 search budget exceeded, 5 infeasible color count, 1 anything else.

use std::fs;
use std::path::{Path, PathBuf};

use ccol::experiment::{build_corpus, run_experiment, CorpusSpec};
use ccol::io;
use ccol::verify::{verify_certificate, VerifyMode};
use ccol_core::coloring::{interpolate, ColoringError};
use ccol_core::families::{generate, gnp, FamilySpec};
use ccol_core::graph::Host;
use ccol_core::guest::GuestClass;
use ccol_core::solver::{self, Evidence, SolverConfig, SolverError};
use clap::{Args, Parser, Subcommand, ValueEnum};

const EXIT_PARSE: i32 = 2;
const EXIT_VERIFY: i32 = 3;
const EXIT_BUDGET: i32 = 4;
const EXIT_RANGE: i32 = 5;

struct CliError {
    code: i32,
    msg: String,
}

impl CliError {
    fn new(code: i32, msg: impl Into<String>) -> Self {
        CliError { code, msg: msg.into() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(1, e.to_string())
    }
}

impl From<io::ParseError> for CliError {
    fn from(e: io::ParseError) -> Self {
        CliError::new(EXIT_PARSE, e.to_string())
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        let code = match e {
            SolverError::Budget { .. } => EXIT_BUDGET,
            SolverError::Guest(_) => EXIT_PARSE,
            _ => 1,
        };
        CliError::new(code, e.to_string())
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::OutOfRange { .. } => CliError::new(EXIT_RANGE, e.to_string()),
            ColoringError::Solver(s) => s.into(),
            other => CliError::new(1, other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "ccol",
    version,
    about = "Exact complete-coloring computations on graphs and digraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamArg {
    Chi,
    Psi,
    Tau,
    Nu,
    Dac,
    Degeneracy,
}

#[derive(Clone, Copy, ValueEnum)]
enum GuestArg {
    Cycles,
    Dicycles,
    Edge,
}

impl GuestArg {
    fn to_core(self) -> GuestClass {
        match self {
            GuestArg::Cycles => GuestClass::UndirectedCycles,
            GuestArg::Dicycles => GuestClass::DirectedCycles,
            GuestArg::Edge => GuestClass::SingleEdge,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Proper,
    Complete,
    Dac,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Kn,
    Kmn,
    DnMatching,
    TuranCycle,
    DisjointCycles,
    Transitive,
    Path,
    Cycle,
    Gnp,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusArg {
    Gnp,
    Families,
    Mixed,
}

#[derive(Args)]
struct InputArg {
    /// Graph file (alternative to --input)
    #[arg(value_name = "INPUT")]
    positional: Option<PathBuf>,
    /// Graph file
    #[arg(long)]
    input: Option<PathBuf>,
}

impl InputArg {
    fn path(&self) -> Result<&Path, CliError> {
        self.input
            .as_deref()
            .or(self.positional.as_deref())
            .ok_or_else(|| CliError::new(EXIT_PARSE, "no input file given"))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a parameter of a graph file, optionally writing a
    /// certificate
    Compute {
        #[command(flatten)]
        input: InputArg,
        /// Parameter to compute
        #[arg(long, value_enum)]
        param: ParamArg,
        /// Guest class (default: cycles on graphs, dicycles on digraphs)
        #[arg(long, value_enum)]
        guest: Option<GuestArg>,
        /// Write a certificate file here
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Search node limit (default: env CCOL_BUDGET or 50000000)
        #[arg(long)]
        budget: Option<u64>,
        /// Use the exhaustive oracle instead of the search solver
        #[arg(long)]
        oracle: bool,
        /// For nu: pack induced members (the two readings agree for the
        /// built-in guest classes)
        #[arg(long)]
        induced: bool,
        /// For degeneracy: count parallel edges in degrees
        #[arg(long)]
        count_multiplicity: bool,
    },
    /// Verify a certificate file against a graph file
    Verify {
        #[command(flatten)]
        input: InputArg,
        /// Certificate file
        #[arg(long)]
        cert: PathBuf,
        /// What to verify
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Guest class (default: by host kind)
        #[arg(long, value_enum)]
        guest: Option<GuestArg>,
    },
    /// Construct a complete coloring with exactly the given number of
    /// colors
    Interpolate {
        #[command(flatten)]
        input: InputArg,
        /// Guest class (default: by host kind)
        #[arg(long, value_enum)]
        guest: Option<GuestArg>,
        /// Number of colors
        #[arg(long)]
        colors: usize,
        /// Certificate output path (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Search node limit
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Generate a family member as a graph file
    Gen {
        /// Family tag
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Directed variant (disjoint-cycles, cycle)
        #[arg(long)]
        directed: bool,
        /// Replace every edge of the generated simple graph by a digon
        #[arg(long)]
        bidirect: bool,
        /// Replace every edge of the generated simple graph by a bigon
        #[arg(long)]
        double: bool,
        /// Output path (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the solvers over a corpus and write a tab-separated table
    Experiment {
        /// Corpus kind
        #[arg(long, value_enum)]
        corpus: CorpusArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Instance count for the mixed corpus
        #[arg(long)]
        count: Option<usize>,
        /// Output table path
        #[arg(long)]
        out: PathBuf,
        /// Parallel rows
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Search node limit per solver call
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn config_with(budget: Option<u64>) -> SolverConfig {
    let mut cfg = SolverConfig::default();
    if let Some(b) = budget {
        cfg.node_limit = b;
    } else if let Ok(v) = std::env::var("CCOL_BUDGET") {
        if let Ok(b) = v.parse::<u64>() {
            cfg.node_limit = b;
        }
    }
    cfg
}

fn read_host(path: &Path) -> Result<Host, CliError> {
    let text = fs::read_to_string(path)?;
    Ok(io::parse_host(&text)?)
}

fn resolve_guest(guest: Option<GuestArg>, host: &Host) -> Result<GuestClass, CliError> {
    let g = guest.map_or_else(|| GuestClass::default_for(host.kind()), GuestArg::to_core);
    if g.host_kind() != host.kind() {
        return Err(CliError::new(
            EXIT_PARSE,
            format!("guest `{g}` applies to {} hosts, input is a {}", g.host_kind(), host.kind()),
        ));
    }
    Ok(g)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_compute(
    input: InputArg,
    param: ParamArg,
    guest: Option<GuestArg>,
    cert: Option<PathBuf>,
    budget: Option<u64>,
    oracle: bool,
    induced: bool,
    count_multiplicity: bool,
) -> Result<(), CliError> {
    let host = read_host(input.path()?)?;
    let cfg = config_with(budget);
    let (value, cert_text) = match param {
        ParamArg::Degeneracy => {
            let Host::Graph(g) = &host else {
                return Err(CliError::new(EXIT_PARSE, "degeneracy applies to graphs"));
            };
            let (d, order) = g.degeneracy(count_multiplicity);
            (d, io::render_degeneracy_certificate(d, &order))
        }
        ParamArg::Dac => {
            let Host::Digraph(d) = &host else {
                return Err(CliError::new(EXIT_PARSE, "the diachromatic number applies to digraphs"));
            };
            let res = if oracle { solver::oracle_dac(d, &cfg)? } else { solver::dac(d, &cfg)? };
            let Evidence::Diachromatic { partition, arc_table } = &res.evidence else {
                unreachable!()
            };
            (res.value, io::render_coloring_certificate(partition, None, Some(arc_table)))
        }
        ParamArg::Chi | ParamArg::Psi => {
            let g = resolve_guest(guest, &host)?;
            let res = match (param, oracle) {
                (ParamArg::Chi, false) => solver::chi_h(g, &host, &cfg)?,
                (ParamArg::Chi, true) => solver::oracle_chi(g, &host, &cfg)?,
                (ParamArg::Psi, false) => solver::psi_h(g, &host, &cfg)?,
                (ParamArg::Psi, true) => solver::oracle_psi(g, &host, &cfg)?,
                _ => unreachable!(),
            };
            let Evidence::Coloring { partition, completeness } = &res.evidence else {
                unreachable!()
            };
            (res.value, io::render_coloring_certificate(partition, Some(completeness), None))
        }
        ParamArg::Tau => {
            let g = resolve_guest(guest, &host)?;
            let res = if oracle {
                solver::oracle_tau(g, &host, &cfg)?
            } else {
                solver::tau_h(g, &host, &cfg)?
            };
            let Evidence::FeedbackSet(f) = &res.evidence else { unreachable!() };
            (res.value, io::render_feedback_certificate(f))
        }
        ParamArg::Nu => {
            let g = resolve_guest(guest, &host)?;
            let res = if oracle {
                solver::oracle_nu(g, &host, &cfg)?
            } else {
                solver::nu_h(g, &host, induced, &cfg)?
            };
            let Evidence::Packing(members) = &res.evidence else { unreachable!() };
            (res.value, io::render_packing_certificate(members))
        }
    };
    println!("{value}");
    if let Some(path) = cert {
        fs::write(path, cert_text)?;
    }
    Ok(())
}

fn cmd_verify(
    input: InputArg,
    cert: PathBuf,
    mode: ModeArg,
    guest: Option<GuestArg>,
) -> Result<(), CliError> {
    let host = read_host(input.path()?)?;
    let cert_text = fs::read_to_string(&cert)?;
    let body = io::parse_certificate(&cert_text)?;
    let mode = match mode {
        ModeArg::Proper => VerifyMode::Proper,
        ModeArg::Complete => VerifyMode::Complete,
        ModeArg::Dac => VerifyMode::Dac,
    };
    let g = match mode {
        VerifyMode::Dac => GuestClass::DirectedCycles,
        _ => resolve_guest(guest, &host)?,
    };
    match verify_certificate(&host, g, &body, mode) {
        Ok(()) => {
            println!("ok");
            Ok(())
        }
        Err(msg) => Err(CliError::new(EXIT_VERIFY, msg)),
    }
}

fn cmd_interpolate(
    input: InputArg,
    guest: Option<GuestArg>,
    colors: usize,
    out: Option<PathBuf>,
    budget: Option<u64>,
) -> Result<(), CliError> {
    let host = read_host(input.path()?)?;
    let g = resolve_guest(guest, &host)?;
    let cfg = config_with(budget);
    let (partition, cert) = interpolate(g, &host, colors, &cfg)?;
    let text = io::render_coloring_certificate(&partition, Some(&cert), None);
    write_or_print(out.as_deref(), &text)
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: FamilyArg,
    n: Option<usize>,
    m: Option<usize>,
    k: Option<usize>,
    count: Option<usize>,
    length: Option<usize>,
    p: Option<f64>,
    seed: Option<u64>,
    directed: bool,
    bidirect: bool,
    double: bool,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let need = |v: Option<usize>, what: &str| {
        v.ok_or_else(|| CliError::new(EXIT_PARSE, format!("--{what} is required for this family")))
    };
    let host = match family {
        FamilyArg::Kn => generate(&FamilySpec::Complete { n: need(n, "n")? }),
        FamilyArg::Kmn => generate(&FamilySpec::CompleteBipartite {
            m: need(m, "m")?,
            n: need(n, "n")?,
        }),
        FamilyArg::DnMatching => generate(&FamilySpec::MatchingOrientation { n: need(n, "n")? }),
        FamilyArg::TuranCycle => generate(&FamilySpec::CyclicTuran {
            n: need(n, "n")?,
            k: need(k, "k")?,
        }),
        FamilyArg::DisjointCycles => generate(&FamilySpec::DisjointCycles {
            count: need(count, "count")?,
            len: need(length, "length")?,
            directed,
        }),
        FamilyArg::Transitive => generate(&FamilySpec::TransitiveTournament { n: need(n, "n")? }),
        FamilyArg::Path => generate(&FamilySpec::Path { n: need(n, "n")? }),
        FamilyArg::Cycle => generate(&FamilySpec::Cycle { n: need(n, "n")?, directed }),
        FamilyArg::Gnp => {
            let p = p.ok_or_else(|| CliError::new(EXIT_PARSE, "--p is required for gnp"))?;
            gnp(need(n, "n")?, p, seed.unwrap_or(0)).map(Host::Graph)
        }
    }
    .map_err(|e| CliError::new(EXIT_PARSE, e.to_string()))?;
    let host = match (bidirect, double) {
        (false, false) => host,
        (true, false) => {
            let Host::Graph(g) = &host else {
                return Err(CliError::new(EXIT_PARSE, "--bidirect applies to graph families"));
            };
            Host::Digraph(
                g.bidirect().map_err(|e| CliError::new(EXIT_PARSE, e.to_string()))?,
            )
        }
        (false, true) => {
            let Host::Graph(g) = &host else {
                return Err(CliError::new(EXIT_PARSE, "--double applies to graph families"));
            };
            Host::Graph(g.double().map_err(|e| CliError::new(EXIT_PARSE, e.to_string()))?)
        }
        (true, true) => {
            return Err(CliError::new(EXIT_PARSE, "--bidirect and --double are exclusive"))
        }
    };
    write_or_print(out.as_deref(), &io::render_host(&host))
}

#[allow(clippy::too_many_arguments)]
fn cmd_experiment(
    corpus: CorpusArg,
    n: Option<usize>,
    p: Option<f64>,
    trials: Option<usize>,
    seed: Option<u64>,
    count: Option<usize>,
    out: PathBuf,
    jobs: usize,
    budget: Option<u64>,
) -> Result<(), CliError> {
    let spec = match corpus {
        CorpusArg::Gnp => CorpusSpec::Gnp {
            n: n.unwrap_or(10),
            p: p.unwrap_or(0.5),
            trials: trials.unwrap_or(20),
            seed: seed.unwrap_or(7),
        },
        CorpusArg::Families => CorpusSpec::Families,
        CorpusArg::Mixed => {
            CorpusSpec::Mixed { count: count.unwrap_or(500), seed: seed.unwrap_or(7) }
        }
    };
    if let CorpusSpec::Gnp { p, .. } = spec {
        if !(0.0..=1.0).contains(&p) {
            return Err(CliError::new(EXIT_PARSE, format!("p must lie in [0, 1], got {p}")));
        }
    }
    let instances = build_corpus(&spec);
    let cfg = config_with(budget);
    let table = run_experiment(&instances, &cfg, jobs.max(1));
    fs::write(out, table)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Compute { input, param, guest, cert, budget, oracle, induced, count_multiplicity } => {
            cmd_compute(input, param, guest, cert, budget, oracle, induced, count_multiplicity)
        }
        Cmd::Verify { input, cert, mode, guest } => cmd_verify(input, cert, mode, guest),
        Cmd::Interpolate { input, guest, colors, out, budget } => {
            cmd_interpolate(input, guest, colors, out, budget)
        }
        Cmd::Gen { family, n, m, k, count, length, p, seed, directed, bidirect, double, out } => {
            cmd_gen(family, n, m, k, count, length, p, seed, directed, bidirect, double, out)
        }
        Cmd::Experiment { corpus, n, p, trials, seed, count, out, jobs, budget } => {
            cmd_experiment(corpus, n, p, trials, seed, count, out, jobs, budget)
        }
    }
}

fn main() {
    env_logger::init();
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.msg);
        std::process::exit(e.code);
    }
}
