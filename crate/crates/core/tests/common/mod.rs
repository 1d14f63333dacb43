//! Test-only oracles, written independently of the library's solver.
//!
//! `NaiveGame` plays over *unsorted* cop tuples (n^k of them), derives moves
//! straight from arc queries and decides the game round by round: a
//! cop-turn position is won within j rounds if some joint cop move captures
//! or leaves the robber only replies that are captured or won within j-1.
#![allow(dead_code)]

use oriented_pursuit::graph::{OrientedGraph, UndirectedGraph};
use oriented_pursuit::MoveModel;

pub struct NaiveGame {
    n: usize,
    k: usize,
    cop_moves: Vec<Vec<usize>>,
    robber_moves: Vec<Vec<usize>>,
    /// rounds-to-capture of each cop-turn position (tuple index, robber)
    rounds: Vec<Option<u32>>,
}

fn step_ok(g: &OrientedGraph, strong: bool, from: usize, to: usize) -> bool {
    from == to || g.has_arc(from, to) || (strong && g.has_arc(to, from))
}

impl NaiveGame {
    pub fn new(g: &OrientedGraph, model: MoveModel, k: usize) -> Self {
        let (cop_strong, robber_strong) = match model {
            MoveModel::StrongCop => (true, false),
            MoveModel::NormalCop => (false, false),
            MoveModel::WeakCop => (false, true),
            MoveModel::Undirected => (true, true),
        };
        let n = g.vertex_count();
        let table = |strong: bool| -> Vec<Vec<usize>> {
            (0..n)
                .map(|u| (0..n).filter(|&w| step_ok(g, strong, u, w)).collect())
                .collect()
        };
        let mut game = NaiveGame {
            n,
            k,
            cop_moves: table(cop_strong),
            robber_moves: table(robber_strong),
            rounds: Vec::new(),
        };
        game.solve();
        game
    }

    pub fn undirected(g: &UndirectedGraph, k: usize) -> Self {
        Self::new(&g.canonical_orientation(), MoveModel::Undirected, k)
    }

    fn decode(&self, mut idx: usize) -> Vec<usize> {
        let mut t = vec![0; self.k];
        for slot in t.iter_mut().rev() {
            *slot = idx % self.n;
            idx /= self.n;
        }
        t
    }

    fn encode(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &c| acc * self.n + c)
    }

    fn joint_moves(&self, t: &[usize]) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for &c in t {
            let mut next = Vec::new();
            for prefix in &out {
                for &w in &self.cop_moves[c] {
                    let mut p = prefix.clone();
                    p.push(w);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    fn solve(&mut self) {
        let n = self.n;
        let tuples = n.pow(self.k as u32);
        let mut rounds: Vec<Option<u32>> = vec![None; tuples * n];
        for ti in 0..tuples {
            let t = self.decode(ti);
            for r in 0..n {
                if t.contains(&r) {
                    rounds[ti * n + r] = Some(0);
                }
            }
        }
        let mut j = 0;
        loop {
            j += 1;
            let prev = rounds.clone();
            let mut changed = false;
            for ti in 0..tuples {
                let t = self.decode(ti);
                for r in 0..n {
                    if prev[ti * n + r].is_some() {
                        continue;
                    }
                    let wins = self.joint_moves(&t).into_iter().any(|next| {
                        if next.contains(&r) {
                            return true;
                        }
                        let ni = self.encode(&next);
                        self.robber_moves[r]
                            .iter()
                            .all(|&r2| next.contains(&r2) || prev[ni * n + r2].is_some())
                    });
                    if wins {
                        rounds[ti * n + r] = Some(j);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        self.rounds = rounds;
    }

    /// Rounds to capture from a cop-turn position, if the cops win it.
    pub fn rounds(&self, cops: &[usize], robber: usize) -> Option<u32> {
        self.rounds[self.encode(cops) * self.n + robber]
    }

    pub fn cops_win(&self) -> bool {
        (0..self.n.pow(self.k as u32))
            .any(|ti| (0..self.n).all(|r| self.rounds[ti * self.n + r].is_some()))
    }
}

pub fn naive_cop_number(g: &OrientedGraph, model: MoveModel) -> usize {
    (1..=g.vertex_count())
        .find(|&k| NaiveGame::new(g, model, k).cops_win())
        .expect("n cops always win")
}

pub fn naive_classical_cop_number(g: &UndirectedGraph) -> usize {
    naive_cop_number(&g.canonical_orientation(), MoveModel::Undirected)
}

pub fn directed_cycle(n: usize) -> OrientedGraph {
    OrientedGraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn single_arc() -> OrientedGraph {
    OrientedGraph::from_arcs(2, [(0, 1)]).unwrap()
}

pub fn transitive_triangle() -> OrientedGraph {
    OrientedGraph::from_named_arcs(&["u", "v", "w"], &[("u", "v"), ("u", "w"), ("v", "w")]).unwrap()
}

pub fn directed_path(n: usize) -> OrientedGraph {
    OrientedGraph::from_arcs(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Triangle 0-1-2 with pendant 3 on vertex 0.
pub fn paw() -> UndirectedGraph {
    UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
}
