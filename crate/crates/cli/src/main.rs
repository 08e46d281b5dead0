//! `fsg`: censuses, theorem sweeps, cycle spaces and walk reduction for
//! friends-and-strangers graphs.
//!
//! Exit codes: 0 success, 1 counterexample or failed check, 2 usage error,
//! 3 budget exceeded.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fsgraph::coxeter::{
    attempt_reduction, classify_prediction, find_anchored_walks, reduce_anchored, replay, AnchoredWalk, Classification, LabeledWalk, Reduction,
    DEFAULT_MOVE_CAP,
};
use fsgraph::cyclespace::{cycle_rank, cycle_space_dimension, enumerate_hexagons, enumerate_squares};
use fsgraph::fs::{all_components, fs_component_of_with_budget, fs_components_with_budget, ExplicitComponent, DEFAULT_BUDGET};
use fsgraph::graph::mask_of;
use fsgraph::io::{census_table, component_dot, graph_dot, GraphJson};
use fsgraph::verify::{self, SweepOptions, DEFAULT_SEED};
use fsgraph::{make_family, EdgeLabel, Error, FamilySpec, Graph, Permutation};

#[derive(Parser)]
#[command(name = "fsg", version, about = "Friends-and-strangers graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Largest number of arrangements a census may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u64,

    /// Seed for randomized sweeps and walk corpora.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,

    /// Report wall time on stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Connected components of FS(X, Y).
    Components { x: String, y: String },
    /// Run a theorem sweep: cycles-complement, fruit, dandelion, wilson,
    /// spider-sufficient, spider-necessary, min-degree, wilsonian, square-span,
    /// cycle-labels, anchored-walks or properties.
    Verify {
        theorem: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Random Y per size where the dandelion sweep stops being exhaustive.
        #[arg(long, default_value_t = 200)]
        random_graphs: usize,
        /// Random-walk steps per Y for the anchored-walk corpus.
        #[arg(long, default_value_t = 60)]
        walk_steps: usize,
        /// Omit per-instance records; counterexamples are always listed.
        #[arg(long)]
        summary: bool,
    },
    /// Cycle-space rank of squares and hexagons in each component of FS(X, Y).
    Cyclespace {
        x: String,
        y: String,
        /// Restrict to the component of this arrangement (1-based one-line notation).
        #[arg(long)]
        component: Option<String>,
    },
    /// Reduce an anchored walk in FS(Cycle_n, Y) by Coxeter moves.
    Reduce {
        #[arg(long)]
        y: String,
        #[arg(long)]
        n: usize,
        /// Starting arrangement, 1-based one-line notation.
        #[arg(long)]
        start: String,
        /// Comma-separated labels such as "12,13,23,12".
        #[arg(long)]
        labels: String,
    },
    /// Reduce a seeded corpus of random anchored walks and check every result.
    FuzzReduce {
        #[arg(long)]
        y: String,
        /// Random-walk steps used to harvest anchored walks.
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// Describe a graph family member.
    Graph { spec: String },
}

enum Failure {
    Usage(String),
    Budget(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Capability(_) => Failure::Budget(e.to_string()),
            Error::Parameter(_) | Error::Parse(_) | Error::Validation(_) | Error::Move(_) => Failure::Usage(e.to_string()),
            Error::TheoremViolation(_) | Error::Internal(_) => Failure::Check(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("output: {e}"))
    }
}

/// Rendered output plus whether a check failed.
struct Output {
    text: String,
    failed: bool,
}

fn graph(spec: &str) -> Result<Graph, Failure> {
    Ok(make_family(&spec.parse::<FamilySpec>()?)?)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_dot(cmd: &str) -> Failure {
    Failure::Usage(format!("{cmd} has no DOT rendering; use --format json or table"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let t = Instant::now();
    let result = run(&cli);
    if cli.timing {
        eprintln!("elapsed {:.3}s", t.elapsed().as_secs_f64());
    }
    let out = match result {
        Ok(o) => o,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (2, m),
                Failure::Budget(m) => (3, m),
                Failure::Check(m) => (1, m),
            };
            eprintln!("fsg: {msg}");
            return ExitCode::from(code);
        }
    };
    let written = match &cli.output {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(out.text.as_bytes())),
        None => io::stdout().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("fsg: output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(if out.failed { 1 } else { 0 })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let ok = |text| Ok(Output { text, failed: false });
    match &cli.command {
        Command::Components { x, y } => {
            let (gx, gy) = (graph(x)?, graph(y)?);
            match cli.format {
                Format::Json => ok(json(&fs_components_with_budget(&gx, &gy, cli.budget)?)),
                Format::Table => ok(census_table(&fs_components_with_budget(&gx, &gy, cli.budget)?)),
                Format::Dot => {
                    let comps = all_components(&gx, &gy, cli.budget)?;
                    ok(comps.iter().enumerate().map(|(i, c)| component_dot(c, &format!("component {}", i + 1))).collect())
                }
            }
        }
        Command::Verify { theorem, n_max, random_graphs, walk_steps, summary } => {
            let opts = SweepOptions {
                n_max: *n_max,
                seed: cli.seed,
                budget: cli.budget,
                random_graphs: *random_graphs,
                walk_steps: *walk_steps,
            };
            let mut rep = verify::run(theorem, &opts)?;
            let failed = !rep.passed();
            if *summary {
                rep.records.clear();
            }
            let text = match cli.format {
                Format::Json => json(&rep),
                Format::Table => {
                    let mut s = format!(
                        "{} n_max={} seed={}: {} instances, {} oracle checks, {} counterexamples\n",
                        rep.theorem,
                        rep.n_max,
                        rep.seed,
                        rep.instances,
                        rep.oracle_checks,
                        rep.counterexamples.len()
                    );
                    for r in &rep.counterexamples {
                        s += &format!("  counterexample: {} {}\n", r.instance, r.note.as_deref().unwrap_or(""));
                    }
                    s
                }
                Format::Dot => return Err(no_dot("verify")),
            };
            Ok(Output { text, failed })
        }
        Command::Cyclespace { x, y, component } => cyclespace(cli, x, y, component.as_deref()),
        Command::Reduce { y, n, start, labels } => reduce(cli, y, *n, start, labels),
        Command::FuzzReduce { y, count } => fuzz_reduce(cli, y, *count),
        Command::Graph { spec } => {
            let g = graph(spec)?;
            match cli.format {
                Format::Dot => ok(graph_dot(&g, spec)),
                Format::Json => ok(json(&GraphSummary::new(&g))),
                Format::Table => {
                    let s = GraphSummary::new(&g);
                    ok(format!(
                        "{g}\nedges {}  degrees {}..{}  connected {}  biconnected {}  bipartite {}  domination {}\n",
                        s.graph.edges.len(),
                        s.min_degree,
                        s.max_degree,
                        s.connected,
                        s.biconnected,
                        s.bipartite,
                        s.domination
                    ))
                }
            }
        }
    }
}

#[derive(Serialize)]
struct GraphSummary {
    #[serde(flatten)]
    graph: GraphJson,
    min_degree: usize,
    max_degree: usize,
    connected: bool,
    biconnected: bool,
    bipartite: bool,
    triangle: bool,
    domination: usize,
}

impl GraphSummary {
    fn new(g: &Graph) -> Self {
        GraphSummary {
            graph: GraphJson::from(g),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            connected: g.is_connected(),
            biconnected: g.is_biconnected().0,
            bipartite: g.is_bipartite(),
            triangle: g.has_triangle(),
            domination: g.domination_number(),
        }
    }
}

#[derive(Serialize)]
struct CycleSpaceRow {
    representative: Permutation,
    vertices: usize,
    edges: usize,
    dimension: usize,
    squares: usize,
    hexagons: usize,
    rank_squares: usize,
    rank_squares_hexagons: usize,
    spans_squares: bool,
    spans_squares_hexagons: bool,
}

fn cycle_row(c: &ExplicitComponent) -> Result<CycleSpaceRow, Failure> {
    let squares = enumerate_squares(c);
    let hexagons = enumerate_hexagons(c);
    let dimension = cycle_space_dimension(c)?;
    let rank_squares = cycle_rank(&squares, c)?;
    let both: Vec<_> = squares.iter().chain(&hexagons).cloned().collect();
    let rank_squares_hexagons = cycle_rank(&both, c)?;
    Ok(CycleSpaceRow {
        representative: c.vertices[0].clone(),
        vertices: c.vertex_count(),
        edges: c.edge_count(),
        dimension,
        squares: squares.len(),
        hexagons: hexagons.len(),
        rank_squares,
        rank_squares_hexagons,
        spans_squares: rank_squares == dimension,
        spans_squares_hexagons: rank_squares_hexagons == dimension,
    })
}

fn cyclespace(cli: &Cli, x: &str, y: &str, component: Option<&str>) -> Result<Output, Failure> {
    let (gx, gy) = (graph(x)?, graph(y)?);
    let comps = match component {
        Some(s) => vec![fs_component_of_with_budget(&gx, &gy, &Permutation::parse_one_line(s)?, cli.budget)?],
        None => all_components(&gx, &gy, cli.budget)?,
    };
    let rows = comps.iter().map(cycle_row).collect::<Result<Vec<_>, _>>()?;
    let text = match cli.format {
        Format::Json => json(&rows),
        Format::Table => {
            let mut s = String::from("representative  |V|  |E|  dim  squares  hexagons  rank(sq)  rank(sq+hex)\n");
            for r in &rows {
                s += &format!(
                    "{}  {}  {}  {}  {}  {}  {}  {}\n",
                    r.representative,
                    r.vertices,
                    r.edges,
                    r.dimension,
                    r.squares,
                    r.hexagons,
                    r.rank_squares,
                    r.rank_squares_hexagons
                );
            }
            s
        }
        Format::Dot => comps.iter().map(|c| component_dot(c, &c.vertices[0].to_string())).collect(),
    };
    Ok(Output { text, failed: false })
}

fn parse_labels(s: &str) -> Result<Vec<EdgeLabel>, Failure> {
    Ok(s.split(',').map(str::parse).collect::<Result<Vec<EdgeLabel>, Error>>()?)
}

#[derive(Serialize)]
struct ReduceReport {
    hypotheses_hold: bool,
    #[serde(flatten)]
    reduction: Reduction,
}

fn reduce(cli: &Cli, y: &str, n: usize, start: &str, labels: &str) -> Result<Output, Failure> {
    let gy = graph(y)?;
    let start = Permutation::parse_one_line(start)?;
    if gy.n() != n || start.n() != n {
        return Err(Failure::Usage(format!("--n {n} disagrees with Y ({}) or --start ({})", gy.n(), start.n())));
    }
    let walk = AnchoredWalk::new(LabeledWalk { start, labels: parse_labels(labels)? })?;
    let hypotheses_hold = gy.domination_number() >= 2;
    let r = if hypotheses_hold { reduce_anchored(&walk, &gy)? } else { attempt_reduction(&walk, &gy, DEFAULT_MOVE_CAP)? };
    let text = match cli.format {
        Format::Json => json(&ReduceReport { hypotheses_hold, reduction: r }),
        Format::Table => {
            let labels: Vec<String> = r.result.labels().iter().map(ToString::to_string).collect();
            let note = if hypotheses_hold { "" } else { " (Y has domination number 1)" };
            format!("{:?} after {} moves: {}{note}\n", r.classification, r.log.moves.len(), labels.join(","))
        }
        Format::Dot => return Err(no_dot("reduce")),
    };
    Ok(Output { text, failed: false })
}

#[derive(Serialize)]
struct FuzzReport {
    y: String,
    seed: u64,
    walks: usize,
    complete: usize,
    failures: Vec<String>,
}

fn fuzz_reduce(cli: &Cli, y: &str, count: usize) -> Result<Output, Failure> {
    let gy = graph(y)?;
    let walks = find_anchored_walks(&gy, gy.n(), count, cli.seed)?;
    let mut rep = FuzzReport { y: y.to_string(), seed: cli.seed, walks: walks.len(), complete: 0, failures: Vec::new() };
    for w in &walks {
        let labels: Vec<String> = w.labels().iter().map(ToString::to_string).collect();
        let name = format!("start {} labels {}", w.walk.start, labels.join(","));
        let predicted = classify_prediction(w, &gy)?;
        match reduce_anchored(w, &gy) {
            Ok(r) => {
                let replayed = replay(&gy, &w.walk, &r.log).is_ok_and(|f| f == r.full);
                let anchor = r.result.anchor();
                let dominating = r.classification == Classification::Trivial
                    || gy.is_dominating(mask_of(&[anchor.lo(), anchor.hi()]));
                if r.classification == Classification::Complete {
                    rep.complete += 1;
                }
                if r.classification != predicted || !r.log.respects_discipline() || !replayed || !dominating {
                    rep.failures.push(name);
                }
            }
            Err(e) => rep.failures.push(format!("{name}: {e}")),
        }
    }
    let failed = !rep.failures.is_empty();
    let text = match cli.format {
        Format::Json => json(&rep),
        Format::Table => {
            let mut s = format!("{}: {} walks, {} complete, {} failures\n", rep.y, rep.walks, rep.complete, rep.failures.len());
            for f in &rep.failures {
                s += &format!("  {f}\n");
            }
            s
        }
        Format::Dot => return Err(no_dot("fuzz-reduce")),
    };
    Ok(Output { text, failed })
}
