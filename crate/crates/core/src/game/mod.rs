//! Exact decision procedures for the cops-and-robber game on oriented graphs.
//!
//! Cops place first, then the robber; the cops move first each round and all
//! cops move at once. Every move may also be a pass. Capture is checked
//! after every placement and move, and a play that never captures is a
//! robber win. Cops may share a vertex.

mod arena;
mod play;
mod solver;
mod strategy;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use play::{
    play, Adversarial, Configuration, Greedy, RobberPolicy, Scripted, StayPut, Transcript, Turn,
};
pub use solver::Solution;
pub use strategy::{extract_strategy, PlannedMove, Strategy, StrategyJson, StrategyRecord};

use crate::error::{Error, Result};
use crate::graph::{check_vertex, closed, union_sorted, OrientedGraph, UndirectedGraph, VertexId};

/// Which side may move against arc directions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveModel {
    /// Strong cops against a weak robber.
    #[serde(rename = "strong")]
    StrongCop,
    /// Weak cops against a weak robber.
    #[serde(rename = "normal")]
    NormalCop,
    /// Weak cops against a strong robber.
    #[serde(rename = "weak")]
    WeakCop,
    /// Both sides strong: the classical game on the underlying graph.
    Undirected,
}

impl MoveModel {
    pub const ORIENTED: [MoveModel; 3] = [
        MoveModel::StrongCop,
        MoveModel::NormalCop,
        MoveModel::WeakCop,
    ];

    pub fn cop_is_strong(self) -> bool {
        matches!(self, MoveModel::StrongCop | MoveModel::Undirected)
    }

    pub fn robber_is_strong(self) -> bool {
        matches!(self, MoveModel::WeakCop | MoveModel::Undirected)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            MoveModel::StrongCop => "strong",
            MoveModel::NormalCop => "normal",
            MoveModel::WeakCop => "weak",
            MoveModel::Undirected => "undirected",
        }
    }
}

impl fmt::Display for MoveModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MoveModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(MoveModel::StrongCop),
            "normal" => Ok(MoveModel::NormalCop),
            "weak" => Ok(MoveModel::WeakCop),
            "undirected" => Ok(MoveModel::Undirected),
            other => Err(Error::InvalidParameter(format!(
                "unknown model `{other}` (expected strong|normal|weak|undirected)"
            ))),
        }
    }
}

/// When a robber counts as captured.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CaptureRule {
    /// Sharing a vertex with a cop after any placement or move is capture.
    #[default]
    Standard,
    /// Deliberately wrong rule for harness self-tests: a robber that steps
    /// onto a cop is not captured and can never be caught there.
    RobberOntoCopSafe,
}

pub const DEFAULT_ARENA_CAP: u64 = 50_000_000;

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Largest arena (cop multisets × vertices × 2) the solver will build.
    pub arena_cap: u64,
    pub capture_rule: CaptureRule,
    pub deadline: Option<Instant>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            arena_cap: DEFAULT_ARENA_CAP,
            capture_rule: CaptureRule::Standard,
            deadline: None,
        }
    }
}

impl SolverConfig {
    pub fn with_arena_cap(mut self, cap: u64) -> Self {
        self.arena_cap = cap;
        self
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.deadline = Some(Instant::now() + timeout);
        self
    }

    pub fn with_capture_rule(mut self, rule: CaptureRule) -> Self {
        self.capture_rule = rule;
        self
    }
}

/// One game arena: a graph, a number of cops and a move model.
#[derive(Clone, Copy, Debug)]
pub struct GameSpec<'g> {
    pub graph: &'g OrientedGraph,
    pub cops: usize,
    pub model: MoveModel,
}

impl<'g> GameSpec<'g> {
    pub fn new(graph: &'g OrientedGraph, cops: usize, model: MoveModel) -> Result<Self> {
        let n = graph.vertex_count();
        if cops == 0 || cops > n {
            return Err(Error::InvalidParameter(format!(
                "cop count {cops} outside 1..={n}"
            )));
        }
        Ok(GameSpec { graph, cops, model })
    }

    pub fn cop_moves(&self, v: VertexId) -> Result<Vec<VertexId>> {
        cop_move_relation(self.graph, self.model, v)
    }

    pub fn robber_moves(&self, v: VertexId) -> Result<Vec<VertexId>> {
        robber_move_relation(self.graph, self.model, v)
    }
}

/// N[v] for a strong mover, N⁺[v] for a weak one.
pub(crate) fn step_targets(g: &OrientedGraph, strong: bool, v: VertexId) -> Vec<VertexId> {
    if strong {
        closed(&union_sorted(g.out(v), g.inn(v)), v)
    } else {
        closed(g.out(v), v)
    }
}

/// Vertices a cop on `v` may occupy after one move (staying included).
pub fn cop_move_relation(
    g: &OrientedGraph,
    model: MoveModel,
    v: VertexId,
) -> Result<Vec<VertexId>> {
    check_vertex(v, g.vertex_count())?;
    Ok(step_targets(g, model.cop_is_strong(), v))
}

/// Vertices the robber on `v` may occupy after one move (staying included).
pub fn robber_move_relation(
    g: &OrientedGraph,
    model: MoveModel,
    v: VertexId,
) -> Result<Vec<VertexId>> {
    check_vertex(v, g.vertex_count())?;
    Ok(step_targets(g, model.robber_is_strong(), v))
}

/// Solves the whole arena of `spec`.
pub fn solve(spec: &GameSpec<'_>, config: &SolverConfig) -> Result<Solution> {
    let tables = arena::MoveTables::new(spec.graph, spec.model);
    Solution::compute(tables, spec.cops, config)
}

/// Do `spec.cops` cops have a winning strategy?
pub fn is_k_copwin(spec: &GameSpec<'_>, config: &SolverConfig) -> Result<bool> {
    Ok(solve(spec, config)?.cops_win())
}

/// Least k ≤ `max_k` for which k cops win, or `None` if none does.
pub fn cop_number_up_to(
    g: &OrientedGraph,
    model: MoveModel,
    max_k: usize,
    config: &SolverConfig,
) -> Result<Option<usize>> {
    for k in 1..=max_k.min(g.vertex_count()) {
        if is_k_copwin(&GameSpec::new(g, k, model)?, config)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Least number of cops that win. `n` cops always do.
pub fn cop_number(g: &OrientedGraph, model: MoveModel, config: &SolverConfig) -> Result<usize> {
    if g.vertex_count() == 0 {
        return Err(Error::InvalidParameter("empty graph".into()));
    }
    let found = cop_number_up_to(g, model, g.vertex_count(), config)?;
    found.ok_or_else(|| {
        Error::RuleViolation(format!(
            "{} cops lose on {} vertices; the capture rule admits no universal bound",
            g.vertex_count(),
            g.vertex_count()
        ))
    })
}

/// The classical cop number c(G).
pub fn classical_cop_number(g: &UndirectedGraph, config: &SolverConfig) -> Result<usize> {
    cop_number(&g.canonical_orientation(), MoveModel::Undirected, config)
}

/// Classical game: least k ≤ `max_k` that wins.
pub fn classical_cop_number_up_to(
    g: &UndirectedGraph,
    max_k: usize,
    config: &SolverConfig,
) -> Result<Option<usize>> {
    cop_number_up_to(
        &g.canonical_orientation(),
        MoveModel::Undirected,
        max_k,
        config,
    )
}

/// (c_s, c_n, c_w) of one oriented graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopNumberChain {
    pub strong: usize,
    pub normal: usize,
    pub weak: usize,
}

impl CopNumberChain {
    pub fn is_monotone(&self) -> bool {
        self.strong <= self.normal && self.normal <= self.weak
    }
}

pub fn cop_number_chain(g: &OrientedGraph, config: &SolverConfig) -> Result<CopNumberChain> {
    let chain = CopNumberChain {
        strong: cop_number(g, MoveModel::StrongCop, config)?,
        normal: cop_number(g, MoveModel::NormalCop, config)?,
        weak: cop_number(g, MoveModel::WeakCop, config)?,
    };
    if config.capture_rule == CaptureRule::Standard {
        debug_assert!(chain.is_monotone(), "cop numbers out of order: {chain:?}");
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> OrientedGraph {
        OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn move_relations() {
        let arc = OrientedGraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(
            robber_move_relation(&arc, MoveModel::NormalCop, 1).unwrap(),
            vec![1]
        );
        assert_eq!(
            cop_move_relation(&arc, MoveModel::StrongCop, 1).unwrap(),
            vec![0, 1]
        );
        assert_eq!(
            robber_move_relation(&arc, MoveModel::WeakCop, 1).unwrap(),
            vec![0, 1]
        );
        assert_eq!(
            cop_move_relation(&c3(), MoveModel::NormalCop, 0).unwrap(),
            vec![0, 1]
        );
        assert!(cop_move_relation(&c3(), MoveModel::NormalCop, 3).is_err());
    }

    #[test]
    fn model_names_round_trip() {
        for m in [
            MoveModel::StrongCop,
            MoveModel::NormalCop,
            MoveModel::WeakCop,
            MoveModel::Undirected,
        ] {
            assert_eq!(m.as_str().parse::<MoveModel>().unwrap(), m);
        }
        assert!("sideways".parse::<MoveModel>().is_err());
    }

    #[test]
    fn spec_rejects_bad_cop_counts() {
        let g = c3();
        assert!(GameSpec::new(&g, 0, MoveModel::NormalCop).is_err());
        assert!(GameSpec::new(&g, 4, MoveModel::NormalCop).is_err());
    }

    #[test]
    fn arena_cap_is_enforced() {
        let g = c3();
        let spec = GameSpec::new(&g, 2, MoveModel::NormalCop).unwrap();
        let tight = SolverConfig::default().with_arena_cap(10);
        assert!(matches!(
            is_k_copwin(&spec, &tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn timeout_is_a_resource_limit() {
        let g = c3();
        let spec = GameSpec::new(&g, 1, MoveModel::NormalCop).unwrap();
        let config = SolverConfig::default().with_timeout(Duration::ZERO);
        assert!(matches!(
            is_k_copwin(&spec, &config),
            Err(Error::ResourceLimit(_))
        ));
    }
}
