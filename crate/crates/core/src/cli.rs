//! Command-line front end.
//!
//! [`run`] does all the work and returns what should be printed plus the
//! exit status, so the binary itself only parses arguments and writes.
//!
//! Exit status: 0 success or pass, 1 infeasible or violation, 2 input
//! error, 3 resource guard (vertex limit, node budget, harness size guards,
//! sampling shortfall).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::contraction::{cocontract, contract, CliqueFamily, ContractionResult, FamilyError, Origin, StableFamily};
use crate::detect::{classify, is_meyniel, ClassReport, Witness};
use crate::graph::{VertexSet, DEFAULT_VERTEX_LIMIT, MAX_VERTICES};
use crate::harness::{self, encode_graph, HarnessError, SampleClass, VerificationReport};
use crate::io::{self, ParsedGraph};
use crate::solve::{co_prext_optimize, prext_decide, prext_optimize, PrextAnswer, SolveError, SolverConfig, DEFAULT_NODE_BUDGET};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "prext", version, about = "Pre-coloring extension, Meyniel/Artemis/Berge recognition and co-contraction checks")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Search-node limit for exact coloring.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET, global = true)]
    pub node_budget: u64,
    /// Largest accepted input graph.
    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT, global = true)]
    pub max_vertices: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report Meyniel, Artemis, Berge and co-Meyniel membership with witnesses.
    Classify { graph: PathBuf },
    /// Extend a pre-coloring (or, with --co, a pre-co-coloring) optimally,
    /// or decide whether it extends with at most k colors.
    Prext {
        graph: PathBuf,
        family: PathBuf,
        #[arg(short)]
        k: Option<usize>,
        /// Classes are cliques and the answer is a clique partition.
        #[arg(long)]
        co: bool,
    },
    /// Print G/Q, or G^Q with --co, as DIMACS with the origin of every vertex.
    Contract {
        graph: PathBuf,
        family: PathBuf,
        #[arg(long)]
        co: bool,
    },
    /// Run one of the exhaustive or sampled verification suites.
    Verify {
        #[arg(value_enum)]
        property: Property,
        #[arg(long)]
        nmax: Option<usize>,
        /// Sampled graphs on exactly `nmax` vertices when `nmax > 6`.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sample random graphs, written as a blank-line separated edge-list stream.
    Gen {
        #[arg(value_enum)]
        class: GenClass,
        n: usize,
        count: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Theorem1,
    Theorem2,
    Lemma1,
    Lemmas,
    Closure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenClass {
    Any,
    Meyniel,
    CoMeyniel,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

struct Fail {
    code: u8,
    message: String,
}

impl Fail {
    fn input(message: impl Into<String>) -> Self {
        Fail { code: EXIT_INPUT, message: message.into() }
    }

    fn guard(message: impl Into<String>) -> Self {
        Fail { code: EXIT_GUARD, message: message.into() }
    }
}

impl From<SolveError> for Fail {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::NodeBudget(_) | SolveError::Guard(_) => Fail::guard(e.to_string()),
            SolveError::Family(_) | SolveError::Lift(_) => Fail::input(e.to_string()),
        }
    }
}

impl From<FamilyError> for Fail {
    fn from(e: FamilyError) -> Self {
        Fail::input(format!("invalid family: {e}"))
    }
}

impl From<HarnessError> for Fail {
    fn from(e: HarnessError) -> Self {
        match e {
            HarnessError::Guard(_) | HarnessError::Solve(SolveError::NodeBudget(_)) => Fail::guard(e.to_string()),
            _ => Fail::input(e.to_string()),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    stdout: String,
    stderr: String,
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.cli.format == OutputFormat::Json
    }

    fn warn(&mut self, msg: &str) {
        writeln!(self.stderr, "warning: {msg}").unwrap();
    }

    fn read_graph(&self, path: &Path) -> Result<ParsedGraph, Fail> {
        let text = read(path)?;
        let parsed = io::parse_graph(&text).map_err(|e| Fail::input(format!("{}: {e}", path.display())))?;
        let limit = self.cli.max_vertices.min(MAX_VERTICES);
        if parsed.graph.n() > limit {
            return Err(Fail::guard(format!(
                "{}: graph has {} vertices, limit is {limit} (see --max-vertices)",
                path.display(),
                parsed.graph.n()
            )));
        }
        Ok(parsed)
    }

    fn read_family(&self, path: &Path) -> Result<Vec<VertexSet>, Fail> {
        let text = read(path)?;
        io::parse_family(&text).map_err(|e| Fail::input(format!("{}: {e}", path.display())))
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::input(format!("{}: {e}", path.display())))
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> Output {
    let mut ctx = Ctx { cli, stdout: String::new(), stderr: String::new() };
    let code = match dispatch(&mut ctx) {
        Ok(code) => code,
        Err(f) => {
            writeln!(ctx.stderr, "error: {}", f.message).unwrap();
            f.code
        }
    };
    Output { stdout: ctx.stdout, stderr: ctx.stderr, code }
}

fn dispatch(ctx: &mut Ctx) -> Result<u8, Fail> {
    let config = SolverConfig { node_budget: ctx.cli.node_budget };
    match &ctx.cli.command {
        Command::Classify { graph } => cmd_classify(ctx, graph),
        Command::Prext { graph, family, k, co } => cmd_prext(ctx, graph, family, *k, *co, &config),
        Command::Contract { graph, family, co } => cmd_contract(ctx, graph, family, *co),
        Command::Verify { property, nmax, samples, seed } => cmd_verify(ctx, *property, *nmax, *samples, *seed),
        Command::Gen { class, n, count, seed } => cmd_gen(ctx, *class, *n, *count, *seed),
    }
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        None => String::new(),
        Some(w) => format!("  {:?} {:?}", w.kind, w.vertices),
    }
}

fn cmd_classify(ctx: &mut Ctx, path: &Path) -> Result<u8, Fail> {
    let parsed = ctx.read_graph(path)?;
    let report: ClassReport = classify(&parsed.graph).map_vertices(|v| parsed.label(v));
    if ctx.json() {
        ctx.stdout = serde_json::to_string_pretty(&report).unwrap() + "\n";
    } else {
        let rows = [
            ("meyniel", report.is_meyniel, &report.meyniel_witness),
            ("artemis", report.is_artemis, &report.artemis_witness),
            ("berge", report.is_berge, &report.berge_witness),
            ("co-meyniel", report.is_co_meyniel, &report.co_meyniel_witness),
        ];
        for (name, flag, w) in rows {
            writeln!(ctx.stdout, "{name:<11} {flag}{}", witness_text(w)).unwrap();
        }
    }
    Ok(EXIT_OK)
}

fn answer_text(a: &PrextAnswer) -> String {
    let mut s = format!("feasible: {}\n", a.feasible);
    if let Some(c) = a.colors_used {
        writeln!(s, "colors_used: {c}").unwrap();
    }
    if let Some(x) = &a.extension {
        let pairs: Vec<String> = x.colors().iter().enumerate().map(|(v, c)| format!("{v}:{c}")).collect();
        writeln!(s, "assignment: {}", pairs.join(" ")).unwrap();
    }
    writeln!(s, "contracted_size: {}", a.contracted.graph.n()).unwrap();
    s
}

fn cmd_prext(
    ctx: &mut Ctx,
    graph: &Path,
    family: &Path,
    k: Option<usize>,
    co: bool,
    config: &SolverConfig,
) -> Result<u8, Fail> {
    let g = ctx.read_graph(graph)?.graph;
    let classes = ctx.read_family(family)?;
    let answer = if co {
        let q = CliqueFamily::new(&g, classes)?;
        if !is_meyniel(&g).0 {
            ctx.warn("graph is not Meyniel; the clique partition is still exact but the polynomial guarantee does not apply");
        }
        match k {
            None => co_prext_optimize(&g, &q, config)?,
            Some(k) => {
                let contracted = cocontract(&g, &q)?;
                let answer = prext_decide(&g.complement(), &q.into_stable_family(), k, config)?;
                PrextAnswer { contracted, ..answer }
            }
        }
    } else {
        let q = StableFamily::new(&g, classes)?;
        if !is_meyniel(&g.complement()).0 {
            ctx.warn("graph is not co-Meyniel; the extension is still exact but the polynomial guarantee does not apply");
        }
        match k {
            None => prext_optimize(&g, &q, config)?,
            Some(k) => prext_decide(&g, &q, k, config)?,
        }
    };
    ctx.stdout = if ctx.json() {
        serde_json::to_string_pretty(&answer).unwrap() + "\n"
    } else {
        answer_text(&answer)
    };
    Ok(if answer.feasible { EXIT_OK } else { EXIT_FAILED })
}

/// `c origin <new DIMACS id> vertex <v>` or `... class <j> members <vs>`,
/// with original vertices as 0-based ids like in family files.
fn origin_comments(res: &ContractionResult) -> String {
    let mut s = String::new();
    for (id, o) in res.origin.iter().enumerate() {
        match o {
            Origin::Vertex(v) => writeln!(s, "c origin {} vertex {v}", id + 1).unwrap(),
            Origin::Class(j) => {
                let members: Vec<String> = res.classes[j - 1].iter().map(|v| v.to_string()).collect();
                writeln!(s, "c origin {} class {j} members {}", id + 1, members.join(" ")).unwrap()
            }
        }
    }
    s
}

fn cmd_contract(ctx: &mut Ctx, graph: &Path, family: &Path, co: bool) -> Result<u8, Fail> {
    let g = &ctx.read_graph(graph)?.graph;
    let classes = ctx.read_family(family)?;
    let res = if co {
        cocontract(g, &CliqueFamily::new(g, classes)?)?
    } else {
        contract(g, &StableFamily::new(g, classes)?)?
    };
    ctx.stdout = if ctx.json() {
        let edges: Vec<[usize; 2]> = res.graph.edges().map(|(u, v)| [u, v]).collect();
        let v = json!({
            "n": res.graph.n(),
            "edges": edges,
            "origin": res.origin,
            "class_vertex": res.class_vertex,
        });
        serde_json::to_string_pretty(&v).unwrap() + "\n"
    } else {
        origin_comments(&res) + &io::write_dimacs(&res.graph)
    };
    Ok(EXIT_OK)
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = String::new();
    writeln!(s, "property: {}", r.property).unwrap();
    if let Some(e) = &r.scope.exhaustive {
        writeln!(s, "exhaustive: n = {}..={}, class {}, {} graphs", e.n_min, e.n_max, e.class, e.graphs).unwrap();
    }
    if let Some(x) = &r.scope.sampled {
        writeln!(
            s,
            "sampled: n = {}, seed {}, {} of {} graphs in {} attempts",
            x.n, x.seed, x.obtained, x.requested, x.attempts
        )
        .unwrap();
    }
    writeln!(s, "checked: {}", r.checked).unwrap();
    for (k, v) in &r.breakdown {
        writeln!(s, "  {k}: {v}").unwrap();
    }
    for c in &r.certificates {
        writeln!(s, "certificate ({}): {} [{}]", if c.holds { "holds" } else { "FAILS" }, c.claim, c.graph).unwrap();
    }
    writeln!(s, "violations: {}", r.violation_count).unwrap();
    for v in &r.violations {
        writeln!(s, "  [{}] {:?}: {}", v.graph, v.check, v.detail).unwrap();
    }
    writeln!(s, "result: {}", if r.pass { "pass" } else { "FAIL" }).unwrap();
    s
}

fn cmd_verify(ctx: &mut Ctx, property: Property, nmax: Option<usize>, samples: usize, seed: Option<u64>) -> Result<u8, Fail> {
    let sampling = matches!(property, Property::Theorem2 | Property::Lemmas);
    let nmax = nmax.unwrap_or(match property {
        Property::Lemma1 => harness::LEMMA1_MAX_N,
        _ => 6,
    });
    let samples = if sampling { samples } else { 0 };
    if samples > 0 && nmax <= 6 {
        ctx.warn("--samples only applies when --nmax is above 6; running exhaustively");
    }
    let samples_used = nmax > 6 && samples > 0;
    if samples_used && seed.is_none() {
        return Err(Fail::input("--seed is required when sampling"));
    }
    let seed = seed.unwrap_or(0);
    let report = match property {
        Property::Theorem1 => harness::verify_theorem1(nmax)?,
        Property::Theorem2 => harness::verify_theorem2(nmax, samples, seed)?,
        Property::Lemma1 => harness::verify_lemma1(nmax)?,
        Property::Lemmas => harness::verify_structural_lemmas(nmax, samples, seed)?,
        Property::Closure => harness::closure_probe(nmax)?,
    };
    if let Some(x) = &report.scope.sampled {
        if x.obtained < x.requested {
            ctx.warn(&format!("sampling obtained {} of {} graphs", x.obtained, x.requested));
        }
    }
    ctx.stdout = if ctx.json() { report.to_json() + "\n" } else { report_text(&report) };
    Ok(if report.pass { EXIT_OK } else { EXIT_FAILED })
}

fn cmd_gen(ctx: &mut Ctx, class: GenClass, n: usize, count: usize, seed: u64) -> Result<u8, Fail> {
    if n > ctx.cli.max_vertices.min(MAX_VERTICES) {
        return Err(Fail::guard(format!("n = {n} exceeds the vertex limit {}", ctx.cli.max_vertices)));
    }
    let sc = match class {
        GenClass::Any => SampleClass::Any,
        GenClass::Meyniel => SampleClass::Meyniel,
        GenClass::CoMeyniel => SampleClass::CoMeyniel,
    };
    let out = harness::sample_graphs(sc, n, count, seed)?;
    ctx.stdout = if ctx.json() {
        let graphs: Vec<String> = out.graphs.iter().map(encode_graph).collect();
        let v = json!({
            "class": sc,
            "n": n,
            "seed": seed,
            "requested": count,
            "obtained": out.graphs.len(),
            "attempts": out.attempts,
            "graphs": graphs,
        });
        serde_json::to_string_pretty(&v).unwrap() + "\n"
    } else {
        out.graphs.iter().map(io::write_edge_list).collect::<Vec<_>>().join("\n")
    };
    if out.shortfall() > 0 {
        ctx.warn(&format!("sampling budget exhausted: obtained {} of {count} graphs", out.graphs.len()));
        return Ok(EXIT_GUARD);
    }
    Ok(EXIT_OK)
}

/// Both writers re-parse to an equal graph.
#[cfg(test)]
fn round_trips(g: &crate::graph::Graph) -> bool {
    io::parse_edge_list(&io::write_edge_list(g)).map(|p| p.graph == *g).unwrap_or(false)
        && io::parse_dimacs(&io::write_dimacs(g)).map(|p| p.graph == *g).unwrap_or(false)
}
