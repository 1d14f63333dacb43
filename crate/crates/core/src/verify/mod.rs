//! Machine checks of the structural results over corpora.
//!
//! Every check either passes, fails with a witness bundle (graph JSON,
//! parameters, the cop numbers computed), or is skipped when the solver hit
//! a resource limit on some instance. A failure means the toolkit is wrong:
//! the results checked here are theorems.

pub mod corpus;

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

pub use corpus::{Corpus, ExhaustiveScope, Instance, Manifest, ManifestEntry, Source};

use crate::error::{Error, Result};
use crate::game::{cop_number, cop_number_up_to, is_k_copwin, GameSpec, MoveModel, SolverConfig};
use crate::graph::{GraphJson, OrientedGraph, UndirectedGraph};
use crate::retracts::{
    apply_retract, distributed_retracts, is_dismantlable, not_copwin_condition, strong_retracts,
    weak_retracts, RetractKind, RetractWitness,
};
use crate::subdivisions::{
    check_projection_observation, strong_subdivide, undirected_subdivide, weak_subdivide,
    SubdivisionKind,
};

#[derive(Clone, Debug, PartialEq)]
pub enum CheckStatus {
    Pass,
    Fail(Value),
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail(_) => "fail",
            CheckStatus::Skipped => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremCheck {
    pub id: String,
    pub status: CheckStatus,
    /// Cases examined, skipped ones included.
    pub instances: usize,
    /// Cases abandoned at a resource limit.
    pub skipped: usize,
}

#[derive(Serialize)]
struct ReportLine<'a> {
    check: &'a str,
    status: &'a str,
    instances: usize,
    #[serde(skip_serializing_if = "is_zero")]
    skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Value>,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.status, CheckStatus::Fail(_))
    }

    pub fn witness(&self) -> Option<&Value> {
        match &self.status {
            CheckStatus::Fail(w) => Some(w),
            _ => None,
        }
    }

    pub fn report_line(&self) -> String {
        serde_json::to_string(&ReportLine {
            check: &self.id,
            status: self.status.as_str(),
            instances: self.instances,
            skipped: self.skipped,
            witness: self.witness(),
        })
        .expect("report line serializes")
    }
}

/// Outcome of one case: whether the claim held, and the numbers behind it.
struct Verdict {
    holds: bool,
    numbers: Value,
}

impl Verdict {
    fn new(holds: bool, numbers: Value) -> Self {
        Verdict { holds, numbers }
    }
}

struct Run {
    id: String,
    instances: usize,
    skipped: usize,
    failure: Option<Value>,
}

impl Run {
    fn new(id: &str) -> Self {
        Run {
            id: id.to_string(),
            instances: 0,
            skipped: 0,
            failure: None,
        }
    }

    fn stopped(&self) -> bool {
        self.failure.is_some()
    }

    fn case(
        &mut self,
        name: &str,
        graph: GraphJson,
        params: Value,
        f: impl FnOnce() -> Result<Verdict>,
    ) {
        if self.stopped() {
            return;
        }
        self.instances += 1;
        let bundle = |extra: (&str, Value)| {
            let mut w = json!({
                "instance": name,
                "graph": graph,
                "params": params,
            });
            w[extra.0] = extra.1;
            w
        };
        match f() {
            Ok(v) if v.holds => {}
            Ok(v) => self.failure = Some(bundle(("cop_numbers", v.numbers))),
            Err(Error::ResourceLimit(_)) => self.skipped += 1,
            Err(e) => self.failure = Some(bundle(("error", json!(e.to_string())))),
        }
    }

    fn finish(self) -> TheoremCheck {
        let status = match self.failure {
            Some(w) => CheckStatus::Fail(w),
            None if self.skipped > 0 => CheckStatus::Skipped,
            None => CheckStatus::Pass,
        };
        TheoremCheck {
            id: self.id,
            status,
            instances: self.instances,
            skipped: self.skipped,
        }
    }
}

/// Exact value when found within the bound, `">k"` otherwise.
fn shown(found: Option<usize>, bound: usize) -> Value {
    match found {
        Some(k) => json!(k),
        None => json!(format!(">{bound}")),
    }
}

fn copwin(g: &OrientedGraph, k: usize, model: MoveModel, config: &SolverConfig) -> Result<bool> {
    is_k_copwin(&GameSpec::new(g, k, model)?, config)
}

fn classical(g: &UndirectedGraph, config: &SolverConfig) -> Result<usize> {
    crate::game::classical_cop_number(g, config)
}

/// One subdivision case: an instance and a length.
#[derive(Debug)]
pub struct SubdivisionCase<'a, G> {
    pub instance: &'a Instance<G>,
    pub t: usize,
}

impl<G> Clone for SubdivisionCase<'_, G> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<G> Copy for SubdivisionCase<'_, G> {}

/// Every instance paired with every length in `ts`.
pub fn cases<'a, G>(instances: &'a [Instance<G>], ts: &[usize]) -> Vec<SubdivisionCase<'a, G>> {
    instances
        .iter()
        .flat_map(|instance| ts.iter().map(move |&t| SubdivisionCase { instance, t }))
        .collect()
}

/// c_s ≤ c_n ≤ c_w on every graph.
pub fn check_eq1(graphs: &[Instance<OrientedGraph>], config: &SolverConfig) -> TheoremCheck {
    let mut run = Run::new("chain-strong-normal-weak");
    for inst in graphs {
        run.case(&inst.name, GraphJson::from(&inst.graph), json!({}), || {
            let g = &inst.graph;
            let s = cop_number(g, MoveModel::StrongCop, config)?;
            let n = cop_number(g, MoveModel::NormalCop, config)?;
            let w = cop_number(g, MoveModel::WeakCop, config)?;
            Ok(Verdict::new(
                s <= n && n <= w,
                json!({"c_s": s, "c_n": n, "c_w": w}),
            ))
        });
    }
    run.finish()
}

fn dedup_by_removed(ws: Vec<RetractWitness>) -> Vec<RetractWitness> {
    let mut out: Vec<RetractWitness> = Vec::new();
    for w in ws {
        if out.last().is_none_or(|p| p.removed != w.removed) {
            out.push(w);
        }
    }
    out
}

/// Deleting a retract vertex preserves c_s (strong), c_n (distributed), or
/// whether one weak cop wins (weak). Every removable vertex is tried.
pub fn check_retract_invariance(
    graphs: &[Instance<OrientedGraph>],
    kind: RetractKind,
    config: &SolverConfig,
) -> TheoremCheck {
    let id = match kind {
        RetractKind::Strong => "retract-strong",
        RetractKind::Distributed => "retract-distributed",
        RetractKind::Weak => "retract-weak",
        RetractKind::UndirectedCorner => "retract-corner",
    };
    let mut run = Run::new(id);
    for inst in graphs {
        let g = &inst.graph;
        let witnesses = match kind {
            RetractKind::Strong => dedup_by_removed(strong_retracts(g)),
            RetractKind::Distributed => distributed_retracts(g),
            RetractKind::Weak => dedup_by_removed(weak_retracts(g)),
            RetractKind::UndirectedCorner => Vec::new(),
        };
        for w in witnesses {
            let params = json!({"kind": kind, "witness": w.to_json(g.names())});
            run.case(&inst.name, GraphJson::from(g), params, || {
                let (h, _) = apply_retract(g, &w)?;
                Ok(match kind {
                    RetractKind::Strong | RetractKind::Distributed => {
                        let model = if kind == RetractKind::Strong {
                            MoveModel::StrongCop
                        } else {
                            MoveModel::NormalCop
                        };
                        let before = cop_number(g, model, config)?;
                        let after = cop_number(&h, model, config)?;
                        Verdict::new(
                            before == after,
                            json!({"model": model, "before": before, "after": after}),
                        )
                    }
                    _ => {
                        let before = copwin(g, 1, MoveModel::WeakCop, config)?;
                        let after = copwin(&h, 1, MoveModel::WeakCop, config)?;
                        Verdict::new(
                            before == after,
                            json!({"weak_copwin_before": before, "weak_copwin_after": after}),
                        )
                    }
                })
            });
        }
    }
    run.finish()
}

/// Where every arc uv has an out-neighbor of v outside N⁺(u), one cop loses
/// the normal game.
pub fn check_not_copwin(graphs: &[Instance<OrientedGraph>], config: &SolverConfig) -> TheoremCheck {
    let mut run = Run::new("not-copwin-condition");
    for inst in graphs.iter().filter(|i| not_copwin_condition(&i.graph)) {
        run.case(&inst.name, GraphJson::from(&inst.graph), json!({}), || {
            let wins = copwin(&inst.graph, 1, MoveModel::NormalCop, config)?;
            Ok(Verdict::new(
                !wins,
                json!({"c_n": if wins { json!(1) } else { json!(">1") }}),
            ))
        });
    }
    run.finish()
}

/// c(G) ≤ c_s(S_t(G)) ≤ c_n(S_t(G)) ≤ c(G) + 1.
pub fn check_strong_subdiv_bounds(
    cases: &[SubdivisionCase<'_, UndirectedGraph>],
    config: &SolverConfig,
) -> TheoremCheck {
    let mut run = Run::new("strong-subdivision-bounds");
    for case in cases {
        let g = &case.instance.graph;
        run.case(
            &case.instance.name,
            GraphJson::from(g),
            json!({"t": case.t}),
            || {
                let c = classical(g, config)?;
                let s = strong_subdivide(g, case.t)?.graph;
                let bound = c + 1;
                let cs = cop_number_up_to(&s, MoveModel::StrongCop, bound, config)?;
                let cn = cop_number_up_to(&s, MoveModel::NormalCop, bound, config)?;
                let holds = match (cs, cn) {
                    (Some(cs), Some(cn)) => c <= cs && cs <= cn,
                    _ => false,
                };
                Ok(Verdict::new(
                    holds,
                    json!({"c": c, "c_s": shown(cs, bound), "c_n": shown(cn, bound)}),
                ))
            },
        );
    }
    run.finish()
}

/// c(G) ≤ c_w(S_2(G)) ≤ c(G) + 2.
pub fn check_weak_cop_bound_s2(
    graphs: &[Instance<UndirectedGraph>],
    config: &SolverConfig,
) -> TheoremCheck {
    let mut run = Run::new("weak-cop-s2-bounds");
    for inst in graphs {
        let g = &inst.graph;
        run.case(&inst.name, GraphJson::from(g), json!({"t": 2}), || {
            let c = classical(g, config)?;
            let s = strong_subdivide(g, 2)?.graph;
            let cw = cop_number_up_to(&s, MoveModel::WeakCop, c + 2, config)?;
            Ok(Verdict::new(
                cw.is_some_and(|cw| cw >= c),
                json!({"c": c, "c_w": shown(cw, c + 2)}),
            ))
        });
    }
    run.finish()
}

/// c(G) = c_s(S_t(G)) for triangle-free G; other instances are ignored.
pub fn check_triangle_free_equality(
    cases: &[SubdivisionCase<'_, UndirectedGraph>],
    config: &SolverConfig,
) -> TheoremCheck {
    let mut run = Run::new("triangle-free-equality");
    for case in cases.iter().filter(|c| c.instance.graph.is_triangle_free()) {
        let g = &case.instance.graph;
        run.case(
            &case.instance.name,
            GraphJson::from(g),
            json!({"t": case.t}),
            || {
                let c = classical(g, config)?;
                let s = strong_subdivide(g, case.t)?.graph;
                let cs = cop_number_up_to(&s, MoveModel::StrongCop, c, config)?;
                Ok(Verdict::new(
                    cs == Some(c),
                    json!({"c": c, "c_s": shown(cs, c)}),
                ))
            },
        );
    }
    run.finish()
}

/// One strong cop wins on S_t(G) exactly when G is a tree.
pub fn check_tree_characterization(
    cases: &[SubdivisionCase<'_, UndirectedGraph>],
    config: &SolverConfig,
) -> TheoremCheck {
    let mut run = Run::new("tree-characterization");
    for case in cases {
        let g = &case.instance.graph;
        run.case(
            &case.instance.name,
            GraphJson::from(g),
            json!({"t": case.t}),
            || {
                let s = strong_subdivide(g, case.t)?.graph;
                let wins = copwin(&s, 1, MoveModel::StrongCop, config)?;
                Ok(Verdict::new(
                    wins == g.is_tree(),
                    json!({"strong_copwin": wins, "is_tree": g.is_tree()}),
                ))
            },
        );
    }
    run.finish()
}

/// Every cop-win graph that is not a tree has a triangle. Cop-win is
/// decided by the solver and by corner dismantling; they must agree.
pub fn check_copwin_triangle_claim(
    graphs: &[Instance<UndirectedGraph>],
    config: &SolverConfig,
) -> TheoremCheck {
    let mut run = Run::new("copwin-nontree-triangle");
    for inst in graphs {
        let g = &inst.graph;
        run.case(&inst.name, GraphJson::from(g), json!({}), || {
            let solver = copwin(&g.canonical_orientation(), 1, MoveModel::Undirected, config)?;
            let dismantlable = is_dismantlable(g);
            let triangle = !g.is_triangle_free();
            let holds = solver == dismantlable && (!solver || g.is_tree() || triangle);
            Ok(Verdict::new(
                holds,
                json!({
                    "copwin_solver": solver,
                    "copwin_dismantling": dismantlable,
                    "is_tree": g.is_tree(),
                    "has_triangle": triangle,
                }),
            ))
        });
    }
    run.finish()
}

/// c_x(W_t(G)) ≥ c_x(G) in all three oriented models.
pub fn check_weak_subdiv_monotone(
    cases: &[SubdivisionCase<'_, OrientedGraph>],
    config: &SolverConfig,
) -> TheoremCheck {
    let mut run = Run::new("weak-subdivision-monotone");
    for case in cases {
        let g = &case.instance.graph;
        run.case(
            &case.instance.name,
            GraphJson::from(g),
            json!({"t": case.t}),
            || {
                let w = weak_subdivide(g, case.t)?.graph;
                let mut numbers = serde_json::Map::new();
                let mut holds = true;
                for model in MoveModel::ORIENTED {
                    let before = cop_number(g, model, config)?;
                    // c_x(W) ≥ c_x(G) iff one cop fewer still loses on W
                    let fewer_lose = before < 2 || !copwin(&w, before - 1, model, config)?;
                    holds &= fewer_lose;
                    let after = if fewer_lose {
                        json!(format!(">={before}"))
                    } else {
                        json!(cop_number(&w, model, config)?)
                    };
                    numbers.insert(
                        model.as_str().into(),
                        json!({"before": before, "after": after}),
                    );
                }
                Ok(Verdict::new(holds, Value::Object(numbers)))
            },
        );
    }
    run.finish()
}

/// Projections of vertices joined by a directed path of length ≤ t are
/// equal or adjacent in the input.
pub fn check_projection_observations(
    strong: &[SubdivisionCase<'_, UndirectedGraph>],
    weak: &[SubdivisionCase<'_, OrientedGraph>],
) -> TheoremCheck {
    let mut run = Run::new("projection-observations");
    for case in strong {
        let g = &case.instance.graph;
        run.case(
            &case.instance.name,
            GraphJson::from(g),
            json!({"kind": "strong", "t": case.t}),
            || {
                let r = strong_subdivide(g, case.t)?;
                let ok = check_projection_observation(&r, SubdivisionKind::Strong)?;
                Ok(Verdict::new(ok, Value::Null))
            },
        );
    }
    for case in weak {
        let g = &case.instance.graph;
        run.case(
            &case.instance.name,
            GraphJson::from(g),
            json!({"kind": "weak", "t": case.t}),
            || {
                let r = weak_subdivide(g, case.t)?;
                let ok = check_projection_observation(&r, SubdivisionKind::Weak)?;
                Ok(Verdict::new(ok, Value::Null))
            },
        );
    }
    run.finish()
}

/// underlying(S_2(G)) is bipartite, and underlying(S_t(G)) is 2-degenerate
/// for t ∈ {2, 3}, on every graph with an edge.
pub fn check_s2_structure(graphs: &[Instance<UndirectedGraph>]) -> TheoremCheck {
    let mut run = Run::new("s2-bipartite-2-degenerate");
    for inst in graphs.iter().filter(|i| i.graph.edge_count() > 0) {
        let g = &inst.graph;
        run.case(&inst.name, GraphJson::from(g), json!({}), || {
            let s2 = strong_subdivide(g, 2)?.graph.underlying();
            let s3 = strong_subdivide(g, 3)?.graph.underlying();
            let (bip, d2, d3) = (s2.is_bipartite(), s2.degeneracy(), s3.degeneracy());
            Ok(Verdict::new(
                bip && d2 <= 2 && d3 <= 2,
                json!({"bipartite": bip, "degeneracy_t2": d2, "degeneracy_t3": d3}),
            ))
        });
    }
    run.finish()
}

/// Experimental: replacing every edge of a triangle-free graph by a path of
/// t edges keeps the classical cop number.
pub fn probe_undirected_subdivision(
    cases: &[SubdivisionCase<'_, UndirectedGraph>],
    config: &SolverConfig,
) -> TheoremCheck {
    let mut run = Run::new("probe-undirected-subdivision");
    for case in cases.iter().filter(|c| c.instance.graph.is_triangle_free()) {
        let g = &case.instance.graph;
        run.case(
            &case.instance.name,
            GraphJson::from(g),
            json!({"t": case.t}),
            || {
                let c = classical(g, config)?;
                let after = classical(&undirected_subdivide(g, case.t)?, config)?;
                Ok(Verdict::new(
                    c == after,
                    json!({"c": c, "c_subdivided": after}),
                ))
            },
        );
    }
    run.finish()
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub config: SolverConfig,
    /// Also run the experimental undirected-subdivision probe.
    pub probe: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub checks: Vec<TheoremCheck>,
}

impl Report {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(TheoremCheck::failed)
    }

    pub fn to_json_lines(&self) -> String {
        self.checks.iter().map(|c| c.report_line() + "\n").collect()
    }

    pub fn summary(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.id.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = format!("{:<width$}  status  instances  skipped\n", "check");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:<6}  {:>9}  {:>7}",
                c.id,
                c.status.as_str(),
                c.instances,
                c.skipped
            );
        }
        let failed = self.checks.iter().filter(|c| c.failed()).count();
        let _ = writeln!(out, "{} checks, {failed} failed", self.checks.len());
        out
    }
}

type Job<'a> = Box<dyn FnOnce() -> TheoremCheck + Send + 'a>;

/// Runs every check over `corpus`. Checks run concurrently; the report is
/// always in the same order.
pub fn run_all(corpus: &Corpus, options: &VerifyOptions) -> Result<Report> {
    let scope = corpus.scope;
    let oriented = corpus.oriented_instances()?;
    let structural = corpus.undirected_instances(scope.undirected)?;
    let subdivision = corpus.undirected_instances(scope.subdivision)?;
    let trees = corpus::exhaustive_undirected(scope.tree)?;
    let named = &corpus.undirected;

    let strong_cases = cases(&subdivision, &[2, 3]);
    let mut tree_cases = cases(&trees, &[2]);
    tree_cases.extend(cases(named, &[2, 3]));
    let weak_cases = cases(&oriented, &[2, 3]);
    let mut observed = strong_cases.clone();
    observed.extend(tree_cases.iter().copied());
    let config = &options.config;

    let mut jobs: Vec<Job<'_>> = vec![
        Box::new(|| check_eq1(&oriented, config)),
        Box::new(|| check_retract_invariance(&oriented, RetractKind::Strong, config)),
        Box::new(|| check_retract_invariance(&oriented, RetractKind::Distributed, config)),
        Box::new(|| check_retract_invariance(&oriented, RetractKind::Weak, config)),
        Box::new(|| check_not_copwin(&oriented, config)),
        Box::new(|| check_strong_subdiv_bounds(&strong_cases, config)),
        Box::new(|| check_weak_cop_bound_s2(&subdivision, config)),
        Box::new(|| check_triangle_free_equality(&strong_cases, config)),
        Box::new(|| check_tree_characterization(&tree_cases, config)),
        Box::new(|| check_copwin_triangle_claim(&structural, config)),
        Box::new(|| check_weak_subdiv_monotone(&weak_cases, config)),
        Box::new(|| check_projection_observations(&observed, &weak_cases)),
        Box::new(|| check_s2_structure(&structural)),
    ];
    if options.probe {
        jobs.push(Box::new(|| {
            probe_undirected_subdivision(&strong_cases, config)
        }));
    }
    let checks = std::thread::scope(|s| {
        let handles: Vec<_> = jobs.into_iter().map(|job| s.spawn(job)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect()
    });
    Ok(Report { checks })
}
