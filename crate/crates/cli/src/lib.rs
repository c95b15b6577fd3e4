//! The `dg` command line: argument parsing and the commands behind it.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use dg_core::canon::is_isomorphism;
use dg_core::cayley::conjugating_automorphism;
use dg_core::generators::{complete, cycle, path};
use dg_core::graph6;
use dg_core::verify::{revalidate, Family};
use dg_core::*;
use serde::Serialize;

pub const ANALYSIS_SCHEMA: &str = "dg.analysis.v1";
pub const CAYLEY_SCHEMA: &str = "dg.cayley_identity.v1";

/// Exit status when a verification finds a counterexample.
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
/// Exit status for bad arguments or unreadable input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dg", version, about = "Distance graphs and self 2-distance graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Metrics, patterns and the self 2-distance test for graph6 input.
    Analyze {
        /// A graph6 string, or `-` to read one per line from stdin.
        input: String,
        #[arg(long)]
        json: bool,
    },
    /// Print a named or parameterized graph as graph6.
    Gen {
        /// cycle:n, complete:n, path:n, c5c3, diamond, fig511, fig512,
        /// petersen, prop23:<graph6> or paley:q.
        spec: String,
    },
    /// Exhaustive search for self 2-distance graphs on n vertices.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum)]
        filter: Option<FilterArg>,
        #[arg(long, env = "DG_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Also write the certificate to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a classification, the cubic case, or the conjectures.
    Verify {
        #[arg(value_enum)]
        claim: ClaimArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, env = "DG_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Compare the 2-distance graph of a Cayley graph with Cay(G, S² \ (S ∪ {1})).
    Cayley {
        /// cyclic:m or dihedral:m.
        #[arg(long)]
        group: String,
        /// Comma-separated element indices.
        #[arg(long)]
        set: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    C4Free,
    DiamondFree,
    DisjointTriangles,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
    #[value(name = "c4free")]
    C4Free,
    DisjointTriangles,
    DiamondFree,
    NoCubic,
    Conjectures,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure { code: EXIT_USAGE, message: e.to_string() }
}

/// Runs one invocation; returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = if code == 0 { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "dg: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Analyze { input, json } => analyze(&input, json, stdin, out),
        Command::Gen { spec } => {
            let g = generate_inner(&spec)?;
            writeln!(out, "{}", graph6::encode(&g).map_err(usage)?).map_err(usage)?;
            Ok(0)
        }
        Command::Search { n, connected, filter, jobs, out: file } => search(n, connected, filter, jobs, file, out),
        Command::Verify { claim, max_n, jobs } => verify(claim, max_n, jobs, out),
        Command::Cayley { group, set } => cayley(&group, &set, out),
    }
}

fn parse_number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Failure> {
    s.trim().parse().map_err(|_| usage(format!("{what}: expected a number, got {s:?}")))
}

/// Builds the graph named by a `gen` specification.
pub fn generate(spec: &str) -> Result<Graph, String> {
    generate_inner(spec).map_err(|f| f.message)
}

fn generate_inner(spec: &str) -> Result<Graph, Failure> {
    let (name, arg) = match spec.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (spec, None),
    };
    let need = |what: &str| arg.ok_or_else(|| usage(format!("{what} needs a parameter, as in {what}:N")));
    let g = match name {
        "cycle" => cycle(parse_number(need("cycle")?, "cycle")?).map_err(usage)?,
        "complete" => complete(parse_number(need("complete")?, "complete")?).map_err(usage)?,
        "path" => path(parse_number(need("path")?, "path")?).map_err(usage)?,
        "paley" => paley(parse_number(need("paley")?, "paley")?).map_err(usage)?,
        "prop23" => {
            let inner = graph6::decode(need("prop23")?).map_err(usage)?;
            prop23_construction(&inner).map_err(usage)?
        }
        "c5c3" => named_graph(NamedGraph::C5C3),
        "diamond" => named_graph(NamedGraph::Diamond),
        "fig511" => named_graph(NamedGraph::Fig511),
        "fig512" => named_graph(NamedGraph::Fig512),
        "petersen" => named_graph(NamedGraph::Petersen),
        _ => return Err(usage(format!("unknown graph {spec:?}"))),
    };
    if arg.is_some() && !matches!(name, "cycle" | "complete" | "path" | "paley" | "prop23") {
        return Err(usage(format!("{name} takes no parameter")));
    }
    Ok(g)
}

#[derive(Debug, Serialize)]
pub struct Analysis {
    pub schema: &'static str,
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub metrics: MetricsReport,
    pub patterns: PatternReport,
    pub is_self_two_distance: bool,
    /// Image of each vertex under an isomorphism onto the 2-distance graph.
    pub witness: Option<Vec<usize>>,
    pub two_distance_graph6: String,
    pub srg: Option<SrgParams>,
}

pub fn analysis(g: &Graph) -> Result<Analysis, Graph6Error> {
    let g2 = two_distance_graph(g);
    let sd = is_self_two_distance(g);
    debug_assert!(sd.witness.as_ref().is_none_or(|w| is_isomorphism(g, &g2, w)));
    Ok(Analysis {
        schema: ANALYSIS_SCHEMA,
        graph6: graph6::encode(g)?,
        order: g.order(),
        size: g.size(),
        metrics: g.metrics(),
        patterns: pattern_report(g),
        is_self_two_distance: sd.holds,
        witness: sd.witness,
        two_distance_graph6: graph6::encode(&g2)?,
        srg: srg_parameters(g),
    })
}

fn print_text(a: &Analysis, out: &mut dyn Write) -> std::io::Result<()> {
    let m = &a.metrics;
    writeln!(out, "graph6: {}", a.graph6)?;
    writeln!(out, "vertices: {}  edges: {}  components: {}", a.order, a.size, m.component_count)?;
    writeln!(out, "diameter: {}  girth: {}  triangles: {}", m.diameter, m.girth, m.triangle_count)?;
    let hist: Vec<String> = m.degree_histogram.iter().map(|(d, c)| format!("{d}x{c}")).collect();
    writeln!(out, "max degree: {}  degrees: {}  2-connected: {}", m.max_degree, hist.join(" "), m.two_connected)?;
    let p = &a.patterns;
    writeln!(
        out,
        "c4: {}  diamond: {}  disjoint triangles: {}  induced claw: {}  c5|c3: {}",
        p.has_c4_subgraph, p.has_diamond, p.triangles_pairwise_disjoint, p.has_induced_claw, p.has_c5c3_subgraph
    )?;
    writeln!(out, "self 2-distance: {}  (2-distance graph {})", a.is_self_two_distance, a.two_distance_graph6)?;
    if let Some(s) = &a.srg {
        writeln!(out, "strongly regular: ({}, {}, {}, {})", s.v, s.k, s.lambda, s.mu)?;
    }
    Ok(())
}

fn analyze(input: &str, json: bool, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    let lines: Vec<String> = if input == "-" {
        stdin.lines().collect::<Result<_, _>>().map_err(usage)?
    } else {
        vec![input.to_string()]
    };
    let mut first = true;
    for line in lines.iter().map(|l| l.trim()).filter(|l| !l.is_empty()) {
        let g = graph6::decode(line).map_err(|e| usage(format!("{line:?}: {e}")))?;
        let a = analysis(&g).map_err(usage)?;
        if json {
            writeln!(out, "{}", serde_json::to_string(&a).map_err(usage)?).map_err(usage)?;
        } else {
            if !first {
                writeln!(out).map_err(usage)?;
            }
            print_text(&a, out).map_err(usage)?;
        }
        first = false;
    }
    Ok(0)
}

pub fn search_filter(connected: bool, filter: Option<FilterArg>) -> SearchFilter {
    let mut f = SearchFilter { connected_only: connected, ..SearchFilter::default() };
    match filter {
        Some(FilterArg::C4Free) => f.require_c4_free = true,
        Some(FilterArg::DiamondFree) => f.require_diamond_free = true,
        Some(FilterArg::DisjointTriangles) => f.require_disjoint_triangles = true,
        None => {}
    }
    f
}

fn search(
    n: usize,
    connected: bool,
    filter: Option<FilterArg>,
    jobs: usize,
    file: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let config = EnumerationConfig::with_shards(jobs);
    let cert = search_self_two_distance(n, &search_filter(connected, filter), &config).map_err(usage)?;
    let text = serde_json::to_string(&cert).map_err(usage)?;
    if let Some(path) = file {
        fs::write(&path, format!("{text}\n")).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    writeln!(out, "{text}").map_err(usage)?;
    Ok(0)
}

fn verify(claim: ClaimArg, max_n: usize, jobs: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let config = EnumerationConfig::with_shards(jobs);
    let reports = match claim {
        ClaimArg::C4Free => vec![verify_classification(Family::C4Free, max_n, &config).map_err(usage)?],
        ClaimArg::DisjointTriangles => {
            vec![verify_classification(Family::DisjointTriangles, max_n, &config).map_err(usage)?]
        }
        ClaimArg::DiamondFree => vec![verify_classification(Family::DiamondFree, max_n, &config).map_err(usage)?],
        ClaimArg::NoCubic => vec![verify_no_cubic(max_n, &config).map_err(usage)?],
        ClaimArg::Conjectures => {
            let (a, b) = conjecture_scan(max_n, &config).map_err(usage)?;
            vec![a, b]
        }
    };
    let mut code = 0;
    for r in &reports {
        for cert in &r.certificates {
            if let Err(e) = revalidate(cert) {
                return Err(Failure { code: EXIT_COUNTEREXAMPLE, message: e.to_string() });
            }
        }
        writeln!(out, "{}", serde_json::to_string(r).map_err(usage)?).map_err(usage)?;
        if !r.is_confirmed() {
            code = EXIT_COUNTEREXAMPLE;
        }
    }
    Ok(code)
}

#[derive(Debug, Serialize)]
pub struct CayleyOutput {
    pub schema: &'static str,
    pub group: String,
    pub order: usize,
    pub set: Vec<usize>,
    #[serde(flatten)]
    pub report: DistanceIdentityReport,
    /// A group automorphism carrying S onto the set used, if one exists.
    pub conjugating_automorphism: Option<Vec<usize>>,
}

fn cayley(group: &str, set: &str, out: &mut dyn Write) -> Result<i32, Failure> {
    let (kind, m) = group.split_once(':').ok_or_else(|| usage("--group expects cyclic:m or dihedral:m"))?;
    let kind = match kind {
        "cyclic" => GroupKind::Cyclic,
        "dihedral" => GroupKind::Dihedral,
        _ => return Err(usage(format!("unknown group family {kind:?}"))),
    };
    let table = GroupTable::build(kind, parse_number(m, "group parameter")?).map_err(usage)?;
    let elements: Vec<usize> = if set.trim().is_empty() {
        Vec::new()
    } else {
        set.split(',').map(|x| parse_number(x, "set element")).collect::<Result<_, _>>()?
    };
    let s = ConnectionSet::new(&table, elements).map_err(usage)?;
    let result = CayleyOutput {
        schema: CAYLEY_SCHEMA,
        group: group.to_string(),
        order: table.order(),
        set: s.elements().iter().copied().collect(),
        report: distance_identity_check(&table, &s),
        conjugating_automorphism: conjugating_automorphism(&table, &s),
    };
    writeln!(out, "{}", serde_json::to_string(&result).map_err(usage)?).map_err(usage)?;
    Ok(if result.report.holds { 0 } else { EXIT_COUNTEREXAMPLE })
}
