//! Arena indexing: cop multisets ranked in colex order and per-vertex move
//! tables for each side.

use super::MoveModel;
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;

/// Ranks sorted k-multisets over `0..n` densely. A multiset c₀ ≤ … ≤ c_{k−1}
/// maps to the k-subset dᵢ = cᵢ + i of `0..n+k−1`, ranked by Σ C(dᵢ, i+1).
#[derive(Clone, Debug)]
pub(crate) struct MultisetIndex {
    n: usize,
    k: usize,
    binom: Vec<Vec<u64>>,
    count: u64,
}

fn binomial_table(rows: usize, cols: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; cols + 1]; rows + 1];
    for i in 0..=rows {
        t[i][0] = 1;
        for j in 1..=cols.min(i) {
            t[i][j] = t[i - 1][j - 1].saturating_add(t[i - 1][j]);
        }
    }
    t
}

impl MultisetIndex {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        let binom = binomial_table(n + k, k);
        let count = if n == 0 { 0 } else { binom[n + k - 1][k] };
        MultisetIndex { n, k, binom, count }
    }

    /// Number of k-multisets over n vertices (saturating).
    pub(crate) fn count(&self) -> u64 {
        self.count
    }

    pub(crate) fn rank(&self, sorted: &[u32]) -> usize {
        debug_assert_eq!(sorted.len(), self.k);
        sorted
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c as usize + i][i + 1])
            .sum::<u64>() as usize
    }

    /// All multisets laid out flat, `k` entries per rank.
    pub(crate) fn all_tuples(&self) -> Vec<u32> {
        let (n, k) = (self.n, self.k);
        let count = self.count as usize;
        let mut flat = vec![0u32; count * k];
        if count == 0 {
            return flat;
        }
        let mut cur = vec![0u32; k];
        loop {
            let r = self.rank(&cur);
            flat[r * k..(r + 1) * k].copy_from_slice(&cur);
            if !next_multiset(&mut cur, n) {
                break;
            }
        }
        flat
    }
}

/// Advances a sorted tuple to its lexicographic successor among sorted
/// tuples over `0..n`. Returns false after the last one.
pub(crate) fn next_multiset(cur: &mut [u32], n: usize) -> bool {
    let top = n as u32 - 1;
    let Some(i) = cur.iter().rposition(|&c| c < top) else {
        return false;
    };
    let v = cur[i] + 1;
    for slot in &mut cur[i..] {
        *slot = v;
    }
    true
}

#[derive(Clone, Debug)]
pub(crate) struct MoveTables {
    pub(crate) n: usize,
    pub(crate) cop: Vec<Vec<u32>>,
    pub(crate) robber: Vec<Vec<u32>>,
    /// `cop_inv[w]` = vertices from which a cop may step to `w`.
    pub(crate) cop_inv: Vec<Vec<u32>>,
    pub(crate) robber_inv: Vec<Vec<u32>>,
}

fn invert(table: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut inv = vec![Vec::new(); table.len()];
    for (u, targets) in table.iter().enumerate() {
        for &w in targets {
            inv[w as usize].push(u as u32);
        }
    }
    inv
}

impl MoveTables {
    pub(crate) fn new(g: &OrientedGraph, model: MoveModel) -> Self {
        let n = g.vertex_count();
        let table = |strong: bool| -> Vec<Vec<u32>> {
            (0..n)
                .map(|v| {
                    super::step_targets(g, strong, v)
                        .into_iter()
                        .map(|w| w as u32)
                        .collect()
                })
                .collect()
        };
        let cop = table(model.cop_is_strong());
        let robber = table(model.robber_is_strong());
        MoveTables {
            n,
            cop_inv: invert(&cop),
            robber_inv: invert(&robber),
            cop,
            robber,
        }
    }
}

/// Number of arena states for `k` cops on `n` vertices, or an error when it
/// exceeds `cap`.
pub(crate) fn arena_size(n: usize, k: usize, cap: u64) -> Result<u64> {
    let multisets = MultisetIndex::new(n, k).count();
    let states = multisets.saturating_mul(n as u64).saturating_mul(2);
    if states > cap || states > u32::MAX as u64 {
        return Err(Error::ResourceLimit(format!(
            "arena of {k} cop(s) on {n} vertices has {states} states, cap is {cap}"
        )));
    }
    Ok(states)
}
