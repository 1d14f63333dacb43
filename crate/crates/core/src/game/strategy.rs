use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::arena::MoveTables;
use super::{solve, GameSpec, MoveModel, Solution, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, VertexId};

/// The cops' reply at one cop-turn configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlannedMove {
    /// Destination of each cop, aligned with the sorted cop tuple.
    pub next: Vec<VertexId>,
    /// Rounds to capture from the configuration under optimal robber play.
    pub rounds: u32,
}

/// A memoryless winning strategy covering every configuration reachable
/// from its placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strategy {
    pub model: MoveModel,
    pub cops: usize,
    pub placement: Vec<VertexId>,
    /// Worst case over robber placements.
    pub start_rounds: u32,
    moves: BTreeMap<(Vec<VertexId>, VertexId), PlannedMove>,
}

fn contains(cops: &[VertexId], v: VertexId) -> bool {
    cops.contains(&v)
}

fn sorted(mut cops: Vec<VertexId>) -> Vec<VertexId> {
    cops.sort_unstable();
    cops
}

/// Least-rank reply; ties go to the lexicographically least aligned tuple.
fn choose_move(
    solution: &Solution,
    tables: &MoveTables,
    cops: &[VertexId],
    robber: VertexId,
) -> Option<Vec<VertexId>> {
    let k = cops.len();
    let lists: Vec<&[u32]> = cops.iter().map(|&c| tables.cop[c].as_slice()).collect();
    let mut digits = vec![0usize; k];
    let mut best: Option<(u32, Vec<VertexId>)> = None;
    loop {
        let next: Vec<VertexId> = (0..k).map(|i| lists[i][digits[i]] as usize).collect();
        let value = if contains(&next, robber) {
            Some(0)
        } else {
            solution.robber_turn_plies(&next, robber)
        };
        if let Some(v) = value {
            if best.as_ref().is_none_or(|(b, _)| v < *b) {
                best = Some((v, next));
            }
        }
        let mut i = k;
        loop {
            if i == 0 {
                return best.map(|(_, m)| m);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < lists[i].len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// Extracts an optimal strategy: every move minimizes the remaining rounds
/// against a worst-case robber.
pub fn extract_strategy(spec: &GameSpec<'_>, config: &SolverConfig) -> Result<Strategy> {
    let solution = solve(spec, config)?;
    let (placement, start_rounds) = solution
        .best_placement()
        .ok_or(Error::NoStrategy { k: spec.cops })?;
    let tables = &solution.tables;
    let n = tables.n;

    let mut moves = BTreeMap::new();
    let mut queue: VecDeque<(Vec<VertexId>, VertexId)> = (0..n)
        .filter(|&r| !contains(&placement, r))
        .map(|r| (placement.clone(), r))
        .collect();
    while let Some((cops, robber)) = queue.pop_front() {
        if moves.contains_key(&(cops.clone(), robber)) {
            continue;
        }
        let rounds = solution
            .cop_turn_rounds(&cops, robber)
            .expect("reachable configuration is winning");
        let next = choose_move(&solution, tables, &cops, robber)
            .expect("winning configuration has a winning move");
        let after = sorted(next.clone());
        if !contains(&after, robber) {
            for &r in &tables.robber[robber] {
                let r = r as usize;
                if !contains(&after, r) {
                    queue.push_back((after.clone(), r));
                }
            }
        }
        moves.insert((cops, robber), PlannedMove { next, rounds });
    }

    Ok(Strategy {
        model: spec.model,
        cops: spec.cops,
        placement,
        start_rounds,
        moves,
    })
}

impl Strategy {
    /// The move prescribed at a cop-turn configuration (`cops` in any order).
    pub fn next_move(&self, cops: &[VertexId], robber: VertexId) -> Option<&PlannedMove> {
        self.moves.get(&(sorted(cops.to_vec()), robber))
    }

    /// Stored rounds-to-capture; 0 when the robber is already caught.
    pub fn rank(&self, cops: &[VertexId], robber: VertexId) -> Option<u32> {
        if contains(cops, robber) {
            return Some(0);
        }
        self.next_move(cops, robber).map(|m| m.rounds)
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Configurations in ascending `(cops, robber)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&[VertexId], VertexId, &PlannedMove)> {
        self.moves
            .iter()
            .map(|((cops, r), m)| (cops.as_slice(), *r, m))
    }

    /// Checks that every move is legal, that every robber reply stays
    /// inside the strategy, and that the stored rank strictly decreases.
    pub fn validate(&self, spec: &GameSpec<'_>) -> Result<()> {
        let n = spec.graph.vertex_count();
        if self.placement.len() != spec.cops || self.placement.iter().any(|&c| c >= n) {
            return Err(Error::RuleViolation(
                "placement does not fit the game".into(),
            ));
        }
        for r in 0..n {
            if !contains(&self.placement, r) && self.rank(&self.placement, r).is_none() {
                return Err(Error::RuleViolation(format!(
                    "robber placement {} is not covered",
                    spec.graph.name(r)
                )));
            }
        }
        for ((cops, robber), planned) in &self.moves {
            for (&from, &to) in cops.iter().zip(&planned.next) {
                if !spec.cop_moves(from)?.contains(&to) {
                    return Err(Error::RuleViolation(format!(
                        "cop cannot move {} -> {}",
                        spec.graph.name(from),
                        spec.graph.name(to)
                    )));
                }
            }
            let after = sorted(planned.next.clone());
            if contains(&after, *robber) {
                continue;
            }
            for r in spec.robber_moves(*robber)? {
                if contains(&after, r) {
                    continue;
                }
                match self.rank(&after, r) {
                    Some(next) if next < planned.rounds => {}
                    Some(_) => {
                        return Err(Error::RuleViolation(format!(
                            "rank does not decrease after robber reply {}",
                            spec.graph.name(r)
                        )))
                    }
                    None => {
                        return Err(Error::RuleViolation(format!(
                            "robber reply {} leaves the strategy",
                            spec.graph.name(r)
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, graph: &OrientedGraph) -> StrategyJson {
        let names = |vs: &[VertexId]| vs.iter().map(|&v| graph.name(v).to_string()).collect();
        StrategyJson {
            model: self.model,
            cops: self.cops,
            placement: names(&self.placement),
            start_rounds: self.start_rounds,
            records: self
                .iter()
                .map(|(cops, robber, m)| StrategyRecord {
                    cops: names(cops),
                    robber: graph.name(robber).to_string(),
                    next: names(&m.next),
                    rounds: m.rounds,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyRecord {
    pub cops: Vec<String>,
    pub robber: String,
    pub next: Vec<String>,
    pub rounds: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyJson {
    pub model: MoveModel,
    pub cops: usize,
    pub placement: Vec<String>,
    pub start_rounds: u32,
    pub records: Vec<StrategyRecord>,
}
