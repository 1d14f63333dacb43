//! Retrograde attractor computation over the full configuration arena.
//!
//! States are `(cop multiset, robber vertex, side to move)`. Captured states
//! seed a FIFO queue with distance 0; a cop-turn state is won as soon as one
//! successor is won, a robber-turn state once every robber reply is won.
//! FIFO order hands out distances in nondecreasing order, so each stored
//! distance is the minimax number of plies to capture.

use std::time::Instant;

use super::arena::{arena_size, next_multiset, MoveTables, MultisetIndex};
use super::{CaptureRule, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::VertexId;

pub(crate) const UNKNOWN: u32 = u32::MAX;
const COP: usize = 0;
const ROBBER: usize = 1;

/// Solved arena for a fixed graph, model and cop count.
#[derive(Clone, Debug)]
pub struct Solution {
    pub(crate) tables: MoveTables,
    k: usize,
    index: MultisetIndex,
    tuples: Vec<u32>,
    dist: Vec<u32>,
    rule: CaptureRule,
}

impl Solution {
    pub(crate) fn compute(tables: MoveTables, k: usize, config: &SolverConfig) -> Result<Self> {
        let n = tables.n;
        let states = arena_size(n, k, config.arena_cap)? as usize;
        let index = MultisetIndex::new(n, k);
        let tuples = index.all_tuples();
        let multisets = index.count() as usize;

        let mut dist = vec![UNKNOWN; states];
        let mut remaining = vec![0u32; multisets * n];
        let mut queue: Vec<u32> = Vec::new();
        let state = |m: usize, r: usize, turn: usize| (m * n + r) * 2 + turn;

        for m in 0..multisets {
            let cops = &tuples[m * k..(m + 1) * k];
            for r in 0..n {
                if cops.contains(&(r as u32)) {
                    dist[state(m, r, ROBBER)] = 0;
                    queue.push(state(m, r, ROBBER) as u32);
                    if config.capture_rule == CaptureRule::Standard {
                        dist[state(m, r, COP)] = 0;
                        queue.push(state(m, r, COP) as u32);
                    }
                } else {
                    remaining[m * n + r] = tables.robber[r].len() as u32;
                }
            }
        }

        let mut digits = vec![0usize; k];
        let mut scratch = vec![0u32; k];
        let mut head = 0;
        while head < queue.len() {
            if head & 0xffff == 0 {
                check_deadline(config.deadline)?;
            }
            let s = queue[head] as usize;
            head += 1;
            let d = dist[s];
            let (m, r, turn) = (s / 2 / n, s / 2 % n, s % 2);
            if turn == COP {
                for &p in &tables.robber_inv[r] {
                    let ps = state(m, p as usize, ROBBER);
                    if dist[ps] != UNKNOWN {
                        continue;
                    }
                    let left = &mut remaining[m * n + p as usize];
                    *left -= 1;
                    if *left == 0 {
                        dist[ps] = d + 1;
                        queue.push(ps as u32);
                    }
                }
            } else {
                // every cop tuple with a joint move onto this multiset
                let target = &tuples[m * k..(m + 1) * k];
                let lists: Vec<&[u32]> = target
                    .iter()
                    .map(|&c| tables.cop_inv[c as usize].as_slice())
                    .collect();
                digits.iter_mut().for_each(|x| *x = 0);
                loop {
                    for i in 0..k {
                        scratch[i] = lists[i][digits[i]];
                    }
                    scratch.sort_unstable();
                    if !scratch.contains(&(r as u32)) {
                        let ps = state(index.rank(&scratch), r, COP);
                        if dist[ps] == UNKNOWN {
                            dist[ps] = d + 1;
                            queue.push(ps as u32);
                        }
                    }
                    if !advance(&mut digits, &lists) {
                        break;
                    }
                }
            }
        }

        Ok(Solution {
            tables,
            k,
            index,
            tuples,
            dist,
            rule: config.capture_rule,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.tables.n
    }

    pub fn cop_count(&self) -> usize {
        self.k
    }

    pub fn capture_rule(&self) -> CaptureRule {
        self.rule
    }

    /// Number of states in the arena.
    pub fn arena_size(&self) -> usize {
        self.dist.len()
    }

    fn state_of(&self, cops: &[VertexId], robber: VertexId, turn: usize) -> usize {
        let mut sorted: Vec<u32> = cops.iter().map(|&c| c as u32).collect();
        sorted.sort_unstable();
        (self.index.rank(&sorted) * self.tables.n + robber) * 2 + turn
    }

    /// Plies to capture from the cop-turn position, under optimal play.
    pub fn cop_turn_plies(&self, cops: &[VertexId], robber: VertexId) -> Option<u32> {
        let d = self.dist[self.state_of(cops, robber, COP)];
        (d != UNKNOWN).then_some(d)
    }

    /// Plies to capture from the robber-turn position, under optimal play.
    pub fn robber_turn_plies(&self, cops: &[VertexId], robber: VertexId) -> Option<u32> {
        let d = self.dist[self.state_of(cops, robber, ROBBER)];
        (d != UNKNOWN).then_some(d)
    }

    /// Cop moves needed from the cop-turn position (0 if already captured).
    pub fn cop_turn_rounds(&self, cops: &[VertexId], robber: VertexId) -> Option<u32> {
        self.cop_turn_plies(cops, robber).map(|d| d.div_ceil(2))
    }

    /// Worst case over robber placements of the rounds needed from `cops`,
    /// or `None` if some placement lets the robber escape forever.
    pub fn placement_rounds(&self, cops: &[VertexId]) -> Option<u32> {
        let mut worst = 0;
        for r in 0..self.tables.n {
            if cops.contains(&r) {
                continue;
            }
            worst = worst.max(self.cop_turn_rounds(cops, r)?);
        }
        Some(worst)
    }

    /// The winning placement with the fewest worst-case rounds; ties go to
    /// the lexicographically least sorted tuple.
    pub fn best_placement(&self) -> Option<(Vec<VertexId>, u32)> {
        let n = self.tables.n;
        if n == 0 {
            return None;
        }
        let mut best: Option<(Vec<VertexId>, u32)> = None;
        let mut cur = vec![0u32; self.k];
        loop {
            let cops: Vec<VertexId> = cur.iter().map(|&c| c as usize).collect();
            if let Some(rounds) = self.placement_rounds(&cops) {
                if best.as_ref().is_none_or(|(_, b)| rounds < *b) {
                    best = Some((cops, rounds));
                }
            }
            if !next_multiset(&mut cur, n) {
                break;
            }
        }
        best
    }

    /// True iff some placement of the cops wins against every robber
    /// placement.
    pub fn cops_win(&self) -> bool {
        let (n, k) = (self.tables.n, self.k);
        (0..self.index.count() as usize).any(|m| {
            let cops = &self.tuples[m * k..(m + 1) * k];
            (0..n)
                .all(|r| cops.contains(&(r as u32)) || self.dist[(m * n + r) * 2 + COP] != UNKNOWN)
        })
    }
}

fn check_deadline(deadline: Option<Instant>) -> Result<()> {
    match deadline {
        Some(t) if Instant::now() >= t => Err(Error::ResourceLimit("solver timed out".into())),
        _ => Ok(()),
    }
}

/// Odometer step over the cartesian product of `lists`.
fn advance(digits: &mut [usize], lists: &[&[u32]]) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < lists[i].len() {
            return true;
        }
        digits[i] = 0;
    }
    false
}
