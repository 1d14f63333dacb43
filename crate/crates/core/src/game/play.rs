use serde::{Deserialize, Serialize};

use super::{GameSpec, Strategy};
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Turn {
    Cops,
    Robber,
}

/// A position: sorted cop tuple, robber vertex and the side to move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub cops: Vec<VertexId>,
    pub robber: VertexId,
    pub turn: Turn,
}

impl Configuration {
    pub fn is_capture(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

/// Decides where the robber goes.
pub trait RobberPolicy {
    fn place(&mut self, spec: &GameSpec<'_>, cops: &[VertexId]) -> VertexId;

    /// Picks the robber's next vertex; `legal` lists the allowed ones.
    fn respond(
        &mut self,
        spec: &GameSpec<'_>,
        cops: &[VertexId],
        robber: VertexId,
        legal: &[VertexId],
    ) -> VertexId;
}

/// Never moves.
#[derive(Clone, Copy, Debug, Default)]
pub struct StayPut;

impl RobberPolicy for StayPut {
    fn place(&mut self, spec: &GameSpec<'_>, cops: &[VertexId]) -> VertexId {
        (0..spec.graph.vertex_count())
            .find(|v| !cops.contains(v))
            .unwrap_or(0)
    }

    fn respond(
        &mut self,
        _: &GameSpec<'_>,
        _: &[VertexId],
        robber: VertexId,
        _: &[VertexId],
    ) -> VertexId {
        robber
    }
}

/// Heads for the first vertex no cop can reach next turn, else stays.
#[derive(Clone, Copy, Debug, Default)]
pub struct Greedy;

fn threatened(spec: &GameSpec<'_>, cops: &[VertexId]) -> Vec<bool> {
    let mut hit = vec![false; spec.graph.vertex_count()];
    for &c in cops {
        for w in spec.cop_moves(c).expect("cop on a valid vertex") {
            hit[w] = true;
        }
    }
    hit
}

impl RobberPolicy for Greedy {
    fn place(&mut self, spec: &GameSpec<'_>, cops: &[VertexId]) -> VertexId {
        let hit = threatened(spec, cops);
        (0..spec.graph.vertex_count())
            .find(|&v| !hit[v])
            .or_else(|| (0..spec.graph.vertex_count()).find(|v| !cops.contains(v)))
            .unwrap_or(0)
    }

    fn respond(
        &mut self,
        spec: &GameSpec<'_>,
        cops: &[VertexId],
        robber: VertexId,
        legal: &[VertexId],
    ) -> VertexId {
        let hit = threatened(spec, cops);
        if !hit[robber] {
            return robber;
        }
        legal
            .iter()
            .copied()
            .find(|&v| !hit[v])
            .or_else(|| legal.iter().copied().find(|v| !cops.contains(v)))
            .unwrap_or(robber)
    }
}

/// Maximizes the strategy's remaining rounds at every step.
#[derive(Clone, Copy, Debug)]
pub struct Adversarial<'s> {
    pub strategy: &'s Strategy,
}

impl Adversarial<'_> {
    fn best(&self, cops: &[VertexId], options: impl Iterator<Item = VertexId>) -> Option<VertexId> {
        options.max_by_key(|&v| {
            // unknown ranks sort above everything: a hole in the strategy
            let rank = self.strategy.rank(cops, v).map_or(u64::MAX, u64::from);
            (rank, std::cmp::Reverse(v))
        })
    }
}

impl RobberPolicy for Adversarial<'_> {
    fn place(&mut self, spec: &GameSpec<'_>, cops: &[VertexId]) -> VertexId {
        self.best(cops, 0..spec.graph.vertex_count()).unwrap_or(0)
    }

    fn respond(
        &mut self,
        _: &GameSpec<'_>,
        cops: &[VertexId],
        robber: VertexId,
        legal: &[VertexId],
    ) -> VertexId {
        self.best(cops, legal.iter().copied()).unwrap_or(robber)
    }
}

/// Replays a fixed placement and move list, then stays put.
#[derive(Clone, Debug)]
pub struct Scripted {
    pub placement: VertexId,
    pub moves: std::collections::VecDeque<VertexId>,
}

impl Scripted {
    pub fn new(placement: VertexId, moves: impl IntoIterator<Item = VertexId>) -> Self {
        Scripted {
            placement,
            moves: moves.into_iter().collect(),
        }
    }
}

impl RobberPolicy for Scripted {
    fn place(&mut self, _: &GameSpec<'_>, _: &[VertexId]) -> VertexId {
        self.placement
    }

    fn respond(
        &mut self,
        _: &GameSpec<'_>,
        _: &[VertexId],
        robber: VertexId,
        _: &[VertexId],
    ) -> VertexId {
        self.moves.pop_front().unwrap_or(robber)
    }
}

/// The sequence of configurations of one play, ending in capture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    pub steps: Vec<Configuration>,
}

impl Transcript {
    /// Number of cop moves made.
    pub fn rounds(&self) -> usize {
        self.steps.iter().filter(|c| c.turn == Turn::Robber).count()
    }

    pub fn captured(&self) -> bool {
        self.steps.last().is_some_and(Configuration::is_capture)
    }

    /// One JSON object per line: `{"turn", "cops", "robber"}` by name.
    pub fn to_json_lines(&self, graph: &OrientedGraph) -> String {
        let mut out = String::new();
        for step in &self.steps {
            let line = serde_json::json!({
                "turn": step.turn,
                "cops": step.cops.iter().map(|&c| graph.name(c)).collect::<Vec<_>>(),
                "robber": graph.name(step.robber),
            });
            out.push_str(&line.to_string());
            out.push('\n');
        }
        out
    }
}

/// Plays `strategy` against `policy` until capture.
pub fn play(
    spec: &GameSpec<'_>,
    strategy: &Strategy,
    policy: &mut dyn RobberPolicy,
) -> Result<Transcript> {
    let n = spec.graph.vertex_count();
    let mut cops = strategy.placement.clone();
    let robber = policy.place(spec, &cops);
    if robber >= n {
        return Err(Error::RuleViolation(format!(
            "robber placed on missing vertex {robber}"
        )));
    }
    let mut steps = vec![Configuration {
        cops: cops.clone(),
        robber,
        turn: Turn::Cops,
    }];
    let mut robber = robber;
    // the strategy's rank strictly decreases, so this bound is never reached
    let limit = strategy.start_rounds as usize + 1;
    while !cops.contains(&robber) {
        if steps.len() > 2 * limit + 1 {
            return Err(Error::RuleViolation(
                "strategy failed to capture in time".into(),
            ));
        }
        let planned = strategy
            .next_move(&cops, robber)
            .ok_or(Error::NoStrategy { k: spec.cops })?;
        cops = planned.next.clone();
        cops.sort_unstable();
        steps.push(Configuration {
            cops: cops.clone(),
            robber,
            turn: Turn::Robber,
        });
        if cops.contains(&robber) {
            break;
        }
        let legal = spec.robber_moves(robber)?;
        let next = policy.respond(spec, &cops, robber, &legal);
        if !legal.contains(&next) {
            let target = if next < n {
                spec.graph.name(next).to_string()
            } else {
                next.to_string()
            };
            return Err(Error::RuleViolation(format!(
                "robber cannot move {} -> {target}",
                spec.graph.name(robber)
            )));
        }
        robber = next;
        steps.push(Configuration {
            cops: cops.clone(),
            robber,
            turn: Turn::Cops,
        });
    }
    Ok(Transcript { steps })
}
