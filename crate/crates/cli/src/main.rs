use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use oriented_pursuit::game::{
    cop_number_up_to, extract_strategy, solve, GameSpec, MoveModel, SolverConfig, DEFAULT_ARENA_CAP,
};
use oriented_pursuit::generators::{enumerate_connected, generate, GeneratorSpec};
use oriented_pursuit::graph::{GraphFile, GraphJson, OrientedGraph, DEFAULT_DOMINATION_CAP};
use oriented_pursuit::retracts::{
    find_corner, find_retract, not_copwin_condition, reduce, reduce_corners, RetractKind,
};
use oriented_pursuit::subdivisions::{strong_subdivide, weak_subdivide};
use oriented_pursuit::verify::{run_all, Corpus, VerifyOptions};
use oriented_pursuit::Error;

#[derive(Parser)]
#[command(
    name = "oriented-pursuit",
    version,
    about = "Exact cops-and-robber analysis on oriented graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Largest arena (states) the solver may build.
    #[arg(long, global = true, default_value_t = DEFAULT_ARENA_CAP)]
    arena_cap: u64,
    /// Largest cop count tried when computing cop numbers.
    #[arg(long, global = true)]
    max_k: Option<usize>,
    /// Wall-clock budget for solving.
    #[arg(long, global = true)]
    timeout_seconds: Option<f64>,
    /// Read edge lists as directed arcs.
    #[arg(long, global = true)]
    directed: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide or compute cop numbers.
    Solve {
        /// Graph file (JSON or edge list); `-` reads standard input.
        graph: PathBuf,
        #[arg(long, default_value = "normal")]
        model: MoveModel,
        /// Decide whether this many cops win.
        #[arg(long, conflicts_with_all = ["number", "chain"])]
        k: Option<usize>,
        /// Compute the cop number (the default).
        #[arg(long, conflicts_with = "chain")]
        number: bool,
        /// Compute the strong, normal and weak cop numbers.
        #[arg(long)]
        chain: bool,
        /// Exit with status 1 when the cops lose.
        #[arg(long)]
        expect_win: bool,
        /// With --k, include a winning strategy.
        #[arg(long, requires = "k")]
        strategy: bool,
    },
    /// Find a retract or reduce by retracts.
    Retract {
        graph: PathBuf,
        /// strong, distributed, weak or corner.
        #[arg(long)]
        kind: RetractKind,
        #[arg(long)]
        reduce: bool,
    },
    /// Build a strong or weak t-subdivision.
    Subdivide {
        graph: PathBuf,
        #[arg(
            long,
            value_name = "T",
            conflicts_with = "weak",
            required_unless_present = "weak"
        )]
        strong: Option<usize>,
        #[arg(long, value_name = "T")]
        weak: Option<usize>,
    },
    /// Generate a graph from a JSON spec, or enumerate small connected graphs.
    Generate {
        /// Spec as inline JSON or a path to a JSON file.
        #[arg(required_unless_present = "enumerate")]
        spec: Option<String>,
        /// Print every connected graph on N vertices, one per line.
        #[arg(long, value_name = "N", conflicts_with = "spec")]
        enumerate: Option<usize>,
        /// With --enumerate, list oriented graphs.
        #[arg(long, requires = "enumerate")]
        oriented: bool,
    },
    /// Run the structural checks over a corpus.
    Verify {
        /// Manifest file or a directory holding manifest.json.
        #[arg(required_unless_present = "default", conflicts_with = "default")]
        manifest: Option<PathBuf>,
        /// Use the default corpus (overridden by ORIENTED_PURSUIT_CORPUS).
        #[arg(long)]
        default: bool,
        /// Also run the experimental undirected-subdivision probe.
        #[arg(long)]
        probe: bool,
    },
    /// Print basic facts about a graph.
    Info {
        graph: PathBuf,
        /// Print Graphviz DOT instead.
        #[arg(long)]
        dot: bool,
    },
}

enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CliResult = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn config(g: &Global) -> SolverConfig {
    let mut c = SolverConfig::default().with_arena_cap(g.arena_cap);
    if let Some(s) = g.timeout_seconds {
        c = c.with_timeout(Duration::from_secs_f64(s.max(0.0)));
    }
    c
}

fn read_graph(path: &Path, directed: bool) -> Result<GraphFile, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    GraphFile::parse(&text, directed)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn oriented_input(file: GraphFile, what: &str) -> Result<OrientedGraph, Failure> {
    match file {
        GraphFile::Oriented(g) => Ok(g),
        GraphFile::Undirected(_) => Err(Failure::Usage(format!(
            "{what} needs an oriented graph (set \"directed\": true, or --directed for edge lists)"
        ))),
    }
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("json"));
}

fn run(cli: &Cli) -> CliResult {
    let g = &cli.global;
    match &cli.command {
        Command::Solve {
            graph,
            model,
            k,
            number: _,
            chain,
            expect_win,
            strategy,
        } => solve_cmd(g, graph, *model, *k, *chain, *expect_win, *strategy),
        Command::Retract {
            graph,
            kind,
            reduce,
        } => retract_cmd(g, graph, *kind, *reduce),
        Command::Subdivide {
            graph,
            strong,
            weak,
        } => subdivide_cmd(g, graph, *strong, *weak),
        Command::Generate {
            spec,
            enumerate,
            oriented,
        } => generate_cmd(spec.as_deref(), *enumerate, *oriented),
        Command::Verify {
            manifest,
            default,
            probe,
        } => verify_cmd(g, manifest.as_deref(), *default, *probe),
        Command::Info { graph, dot } => info_cmd(g, graph, *dot),
    }
}

fn solve_cmd(
    g: &Global,
    path: &Path,
    model: MoveModel,
    k: Option<usize>,
    chain: bool,
    expect_win: bool,
    want_strategy: bool,
) -> CliResult {
    let file = read_graph(path, g.directed)?;
    let config = config(g);
    if chain {
        let graph = oriented_input(file, "--chain")?;
        let max_k = g.max_k.unwrap_or(graph.vertex_count());
        let mut out = serde_json::Map::new();
        let mut all_found = true;
        for m in MoveModel::ORIENTED {
            let c = cop_number_up_to(&graph, m, max_k, &config)?;
            all_found &= c.is_some();
            out.insert(m.as_str().into(), json!(c));
        }
        if g.human {
            for (m, c) in &out {
                println!("{m:>6}: {}", show_number(c, max_k));
            }
        } else {
            emit(&Value::Object(out));
        }
        return Ok(all_found || !expect_win);
    }

    let graph = if model == MoveModel::Undirected {
        file.as_undirected().canonical_orientation()
    } else {
        oriented_input(file, &format!("model `{model}`"))?
    };

    let Some(k) = k else {
        let max_k = g.max_k.unwrap_or(graph.vertex_count());
        let c = cop_number_up_to(&graph, model, max_k, &config)?;
        if g.human {
            println!("cop number ({model}): {}", show_number(&json!(c), max_k));
        } else if c.is_some() {
            emit(&json!({"cop_number": c}));
        } else {
            emit(&json!({"cop_number": null, "max_k": max_k}));
        }
        return Ok(c.is_some() || !expect_win);
    };

    let spec = GameSpec::new(&graph, k, model)?;
    let solution = solve(&spec, &config)?;
    let best = solution.best_placement();
    let names =
        |vs: &[usize]| -> Vec<String> { vs.iter().map(|&v| graph.name(v).to_string()).collect() };
    let mut out = json!({
        "model": model,
        "cops": k,
        "cops_win": best.is_some(),
        "rounds": best.as_ref().map(|b| b.1),
        "placement": best.as_ref().map(|b| names(&b.0)),
    });
    if want_strategy && best.is_some() {
        let strategy = extract_strategy(&spec, &config)?;
        out["strategy"] = serde_json::to_value(strategy.to_json(&graph)).expect("json");
    }
    if g.human {
        match &best {
            Some((placement, rounds)) => println!(
                "{k} {model} cop(s) win in at most {rounds} round(s) from {}",
                names(placement).join(", ")
            ),
            None => println!("{k} {model} cop(s) lose"),
        }
        if let Some(s) = out.get("strategy") {
            println!("{}", serde_json::to_string_pretty(s).expect("json"));
        }
    } else {
        emit(&out);
    }
    Ok(best.is_some() || !expect_win)
}

fn show_number(c: &Value, max_k: usize) -> String {
    match c.as_u64() {
        Some(c) => c.to_string(),
        None => format!("more than {max_k}"),
    }
}

fn retract_cmd(g: &Global, path: &Path, kind: RetractKind, do_reduce: bool) -> CliResult {
    let file = read_graph(path, g.directed)?;
    let out = if kind == RetractKind::UndirectedCorner {
        let graph = file.as_undirected();
        if do_reduce {
            let r = reduce_corners(&graph);
            json!({"kind": kind, "residue": GraphJson::from(&r.residue), "steps": r.removed_names})
        } else {
            let w = find_corner(&graph).map(|w| w.to_json(graph.names()));
            json!({"kind": kind, "witness": w})
        }
    } else {
        let graph = oriented_input(file, "this retract kind")?;
        if do_reduce {
            let r = reduce(&graph, kind)?;
            json!({"kind": kind, "residue": GraphJson::from(&r.residue), "steps": r.removed_names})
        } else {
            let w = find_retract(&graph, kind)?.map(|w| w.to_json(graph.names()));
            json!({"kind": kind, "witness": w})
        }
    };
    if g.human {
        if let Some(steps) = out.get("steps").and_then(Value::as_array) {
            println!("{} {} retract(s) removed", steps.len(), kind.as_str());
            for s in steps {
                println!("  remove {} via {}", s["removed"], s["covers"]);
            }
            let residue = &out["residue"];
            println!(
                "residue: {} vertices, {} arcs",
                residue["vertices"].as_array().map_or(0, Vec::len),
                residue["arcs"].as_array().map_or(0, Vec::len)
            );
        } else if out["witness"].is_null() {
            println!("no {} retract", kind.as_str());
        } else {
            let w = &out["witness"];
            println!("remove {} via {}", w["removed"], w["covers"]);
        }
    } else {
        emit(&out);
    }
    Ok(true)
}

fn subdivide_cmd(g: &Global, path: &Path, strong: Option<usize>, weak: Option<usize>) -> CliResult {
    let file = read_graph(path, g.directed)?;
    let result = match (strong, weak) {
        (Some(t), _) => match file {
            GraphFile::Undirected(u) => strong_subdivide(&u, t)?,
            GraphFile::Oriented(_) => {
                return Err(Failure::Usage("--strong needs an undirected graph".into()))
            }
        },
        (None, Some(t)) => weak_subdivide(&oriented_input(file, "--weak")?, t)?,
        (None, None) => unreachable!("clap requires one of --strong/--weak"),
    };
    if g.human {
        println!(
            "{:?} {}-subdivision: {} vertices, {} arcs",
            result.kind,
            result.t,
            result.graph.vertex_count(),
            result.graph.arc_count()
        );
    } else {
        print!("{}", result.to_canonical_string());
    }
    Ok(true)
}

fn generate_cmd(spec: Option<&str>, enumerate: Option<usize>, oriented: bool) -> CliResult {
    if let Some(n) = enumerate {
        for graph in enumerate_connected(n, oriented)? {
            println!("{}", serde_json::to_string(&graph.to_json()).expect("json"));
        }
        return Ok(true);
    }
    let spec = spec.expect("clap requires a spec");
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec).map_err(|e| Failure::Usage(format!("{spec}: {e}")))?
    };
    let spec: GeneratorSpec =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("generator spec: {e}")))?;
    print!("{}", generate(&spec)?.to_canonical_string());
    Ok(true)
}

fn verify_cmd(g: &Global, manifest: Option<&Path>, use_default: bool, probe: bool) -> CliResult {
    let corpus = match manifest {
        _ if use_default => Corpus::default_corpus()?,
        Some(p) if p.is_dir() => Corpus::load_dir(p)?,
        Some(p) => Corpus::load_manifest(p)?,
        None => unreachable!("clap requires a manifest or --default"),
    };
    let options = VerifyOptions {
        config: config(g),
        probe,
    };
    let report = run_all(&corpus, &options)?;
    if g.human {
        print!("{}", report.summary());
        for c in report.checks.iter().filter(|c| c.failed()) {
            println!("{}", c.report_line());
        }
    } else {
        print!("{}", report.to_json_lines());
    }
    Ok(!report.any_failed())
}

fn info_cmd(g: &Global, path: &Path, dot: bool) -> CliResult {
    let file = read_graph(path, g.directed)?;
    if dot {
        print!("{}", file.to_dot());
        return Ok(true);
    }
    let out = match &file {
        GraphFile::Oriented(o) => {
            let names = |vs: Vec<usize>| -> Vec<String> {
                vs.into_iter().map(|v| o.name(v).to_string()).collect()
            };
            let mut retracts = serde_json::Map::new();
            for kind in [
                RetractKind::Strong,
                RetractKind::Distributed,
                RetractKind::Weak,
            ] {
                let w = find_retract(o, kind)?.map(|w| w.to_json(o.names()));
                retracts.insert(kind.as_str().into(), json!(w));
            }
            json!({
                "directed": true,
                "vertices": o.vertex_count(),
                "arcs": o.arc_count(),
                "sources": names(o.sources()),
                "sinks": names(o.sinks()),
                "strongly_connected": o.is_strongly_connected(),
                "dominating_vertex": o.dominating_vertex().map(|v| o.name(v).to_string()),
                "not_copwin_condition": o.arc_count() > 0 && not_copwin_condition(o),
                "retracts": retracts,
            })
        }
        GraphFile::Undirected(u) => json!({
            "directed": false,
            "vertices": u.vertex_count(),
            "edges": u.edge_count(),
            "connected": u.is_connected(),
            "tree": u.is_tree(),
            "triangle_free": u.is_triangle_free(),
            "bipartite": u.is_bipartite(),
            "degeneracy": u.degeneracy(),
            "domination_number": u.domination_number(DEFAULT_DOMINATION_CAP).ok(),
        }),
    };
    if g.human {
        for (key, value) in out.as_object().expect("object") {
            println!("{key}: {value}");
        }
    } else {
        emit(&out);
    }
    Ok(true)
}
