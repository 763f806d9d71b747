use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use patternforge::construct::{
    build_grounded_stairs, build_interval_filaments, build_touching_lshapes, build_touching_rectangles,
};
use patternforge::geometry::{
    check_grounding_theorem, grounding_order, verify_representation, Rational, RepKind, Representation,
};
use patternforge::hierarchy::{diagram_report, hunt_separating_graph, ClassKind, ClassSpec};
use patternforge::solver::DEFAULT_BUDGET;
use patternforge::{
    brute_force_membership, enumerate_catalog, find_avoiding_ordering, parse_graph6, Graph, Ordering, PatternSet,
};
use serde::Serialize;
use serde_json::json;

use patternforge_cli::render::render_svg;

const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(name = "patternforge", version, about = "Forbidden ordered patterns and grounded representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of a graph in a pattern class.
    Check {
        /// P_S letters ("ab", "empty"), a catalog name or `oracle:<name>`.
        #[arg(long)]
        class: String,
        #[arg(long)]
        graph: PathBuf,
        /// Search budget in nodes; PATTERNFORGE_BUDGET also sets it.
        #[arg(long)]
        budget: Option<u64>,
        /// Scan all orderings instead of searching.
        #[arg(long)]
        brute: bool,
    },
    /// Build a representation of a graph.
    Build {
        #[arg(long, value_enum)]
        rep: RepArg,
        #[arg(long)]
        graph: PathBuf,
        /// Ordering file (JSON array, rank to vertex).
        #[arg(long, conflicts_with = "solve")]
        ordering: Option<PathBuf>,
        /// Search for a suitable ordering (the default).
        #[arg(long)]
        solve: bool,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the representation here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Verify a representation against a graph.
    Verify {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Find the first catalog graph in one class and not another.
    Hunt {
        #[arg(long = "in")]
        in_class: String,
        #[arg(long)]
        notin: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Check the class diagram's edges on the catalog.
    Edges {
        #[arg(long, required = true)]
        diagram: bool,
        #[arg(long)]
        max_n: usize,
        /// Also write a Graphviz rendering.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Render a representation file as SVG.
    Render {
        #[arg(long)]
        rep: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        /// Pixels per unit, a rational such as 40 or 81/2.
        #[arg(long, default_value = "40")]
        scale: String,
    },
    /// List non-isomorphic graphs as graph6, or their counts.
    Catalog {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        counts: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Lshapes,
    Rectangles,
    Filaments,
    Stairs,
}

impl RepArg {
    fn kind(self) -> RepKind {
        match self {
            Self::Lshapes => RepKind::TouchingLshapes,
            Self::Rectangles => RepKind::TouchingRectangles,
            Self::Filaments => RepKind::IntervalFilaments,
            Self::Stairs => RepKind::GroundedStairs,
        }
    }

    /// The class whose orderings the builder consumes.
    fn input_class(self) -> &'static str {
        match self {
            Self::Lshapes => "forest",
            Self::Rectangles => "empty",
            Self::Filaments => "a",
            Self::Stairs => "ab",
        }
    }
}

#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<Usage>() {
        return EXIT_USAGE;
    }
    match err.downcast_ref::<patternforge::Error>() {
        Some(patternforge::Error::BudgetExhausted { .. }) => EXIT_UNKNOWN,
        Some(patternforge::Error::UnknownClass(_)) => EXIT_USAGE,
        _ => EXIT_NO,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    if !path.exists() {
        return Err(usage(format!("no such file: {}", path.display())));
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

/// Edge-list JSON or graph6, by the first character.
fn load_graph(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    let g = if text.trim_start().starts_with('{') { Graph::from_json(&text)? } else { parse_graph6(&text)? };
    Ok(g)
}

fn write(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

/// Writes a line to stdout; a closed pipe (e.g. `| head`) is not an error.
fn say(text: &str) -> Result<()> {
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn emit(value: &impl Serialize) -> Result<()> {
    say(&serde_json::to_string_pretty(value).expect("reports serialize"))
}

fn budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("PATTERNFORGE_BUDGET") {
        Ok(v) => v.trim().parse().map_err(|_| usage(format!("PATTERNFORGE_BUDGET is not a count: {v:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Check { class, graph, budget: b, brute } => check(&class, &graph, b, brute),
        Command::Build { rep, graph, ordering, solve: _, budget: b, out, svg } => {
            build(rep, &graph, ordering.as_deref(), b, out.as_deref(), svg.as_deref())
        }
        Command::Verify { rep, graph } => verify(&rep, &graph),
        Command::Hunt { in_class, notin, max_n } => hunt(&in_class, &notin, max_n),
        Command::Edges { diagram: _, max_n, dot } => {
            let report = diagram_report(max_n)?;
            if let Some(path) = dot {
                write(&path, &report.to_dot())?;
            }
            say(&report.to_json_pretty())?;
            Ok(0)
        }
        Command::Render { rep, svg, scale } => {
            let scale: Rational = scale.parse().map_err(|_| usage(format!("bad scale {scale:?}")))?;
            if !scale.is_positive() {
                return Err(usage("scale must be positive"));
            }
            let rep = Representation::from_json(&read(&rep)?)?;
            write(&svg, &render_svg(&rep, &scale))?;
            Ok(0)
        }
        Command::Catalog { max_n, counts } => {
            let cat = enumerate_catalog(max_n)?;
            if counts {
                emit(&cat.counts())?;
            } else {
                for g in cat.iter() {
                    say(&g.to_string())?;
                }
            }
            Ok(0)
        }
    }
}

fn check(class: &str, graph: &Path, b: Option<u64>, brute: bool) -> Result<u8> {
    let spec = ClassSpec::parse(class)?;
    let g = load_graph(graph)?;
    let b = budget(b)?;
    let (member, witness, nodes, method) = match &spec.kind {
        ClassKind::Pattern(ps) if brute => {
            let r = brute_force_membership(&g, ps)?;
            (r.member, r.witness_ordering, Some(r.nodes_explored), "brute")
        }
        ClassKind::Pattern(ps) => match find_avoiding_ordering(&g, ps, b) {
            Ok(r) => (r.member, r.witness_ordering, Some(r.nodes_explored), "search"),
            Err(patternforge::Error::BudgetExhausted { nodes_explored }) => {
                emit(&json!({
                    "class": spec.name,
                    "graph": g.to_string(),
                    "member": null,
                    "method": "search",
                    "nodes_explored": nodes_explored,
                }))?;
                return Ok(EXIT_UNKNOWN);
            }
            Err(e) => return Err(e.into()),
        },
        _ => (spec.contains(&g)?, None, None, "oracle"),
    };
    emit(&json!({
        "class": spec.name,
        "graph": g.to_string(),
        "member": member,
        "method": method,
        "witness_ordering": witness,
        "nodes_explored": nodes,
    }))?;
    Ok(if member { 0 } else { EXIT_NO })
}

fn build(
    rep: RepArg,
    graph: &Path,
    ordering: Option<&Path>,
    b: Option<u64>,
    out: Option<&Path>,
    svg: Option<&Path>,
) -> Result<u8> {
    let g = load_graph(graph)?;
    let built = match rep {
        RepArg::Lshapes => build_touching_lshapes(&g),
        _ => {
            let sigma = match ordering {
                Some(path) => Ordering::from_json(&read(path)?)?,
                None => {
                    let ps = PatternSet::parse(rep.input_class())?;
                    match find_avoiding_ordering(&g, &ps, budget(b)?)?.witness_ordering {
                        Some(sigma) => sigma,
                        None => {
                            eprintln!("graph is not in {}", ps.name.as_deref().unwrap_or(rep.input_class()));
                            return Ok(EXIT_NO);
                        }
                    }
                }
            };
            match rep {
                RepArg::Rectangles => build_touching_rectangles(&g, &sigma),
                RepArg::Filaments => build_interval_filaments(&g, &sigma),
                _ => build_grounded_stairs(&g, &sigma),
            }
        }
    };
    let built = built?;
    debug_assert_eq!(built.kind(), rep.kind());
    let text = built.to_json_pretty();
    match out {
        Some(path) => write(path, &(text + "\n"))?,
        None => say(&text)?,
    }
    if let Some(path) = svg {
        write(path, &render_svg(&built, &Rational::int(40)))?;
    }
    Ok(0)
}

fn verify(rep: &Path, graph: &Path) -> Result<u8> {
    let rep = Representation::from_json(&read(rep)?)?;
    let g = load_graph(graph)?;
    let report = verify_representation(&rep, &g)?;
    let valid = report.is_valid();
    let avoids = if valid { Some(check_grounding_theorem(&rep, &g)?) } else { None };
    emit(&json!({
        "kind": rep.kind(),
        "valid": valid,
        "violations": report.violations,
        "grounding_order": valid.then(|| grounding_order(&rep)),
        "grounding_order_avoids_patterns": avoids,
    }))?;
    Ok(if valid { 0 } else { EXIT_NO })
}

fn hunt(in_class: &str, notin: &str, max_n: usize) -> Result<u8> {
    let b = ClassSpec::parse(in_class)?;
    let a = ClassSpec::parse(notin)?;
    let hit = hunt_separating_graph(&a, &b, max_n)?;
    emit(&json!({
        "in": b.name,
        "notin": a.name,
        "max_n": max_n,
        "found": hit.is_some(),
        "hit": hit,
        "edges": hit.as_ref().map(|h| h.graph.edges().collect::<Vec<_>>()),
    }))?;
    Ok(if hit.is_some() { 0 } else { EXIT_NO })
}
