use std::collections::VecDeque;

use super::{check_vertex, closed, NameTable, OrientedGraph, VertexId};
use crate::error::{Error, Result};

/// A finite simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UndirectedGraph {
    names: NameTable,
    adj: Vec<Vec<VertexId>>,
    edges: usize,
}

impl UndirectedGraph {
    pub fn new<I>(names: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::build(NameTable::new(names)?, edges)
    }

    /// Vertices are named `"0"`, `"1"`, ... .
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::build(NameTable::numbered(n), edges)
    }

    pub(crate) fn build<I>(names: NameTable, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let n = names.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(names.name(u).to_string()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(UndirectedGraph { names, adj, edges })
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// C_n for n ≥ 3.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            .expect("complete graph is simple")
    }

    /// K_{1,leaves} with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn name(&self, v: VertexId) -> &str {
        self.names.name(v)
    }

    pub fn names(&self) -> &[String] {
        self.names.names()
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.lookup(name)
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// N(v), sorted. Panics if `v` is out of range.
    pub fn adj(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        check_vertex(v, self.vertex_count())?;
        Ok(&self.adj[v])
    }

    pub fn closed_neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        Ok(closed(self.neighbors(v)?, v))
    }

    /// Orients every edge from its smaller to its larger id. Any orientation
    /// serves when only direction-blind moves are played on it.
    pub fn canonical_orientation(&self) -> OrientedGraph {
        OrientedGraph::build(self.names.clone(), self.edges()).expect("acyclic orientation")
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| {
            // common neighbor of an edge closes a triangle
            let (a, b) = (&self.adj[u], &self.adj[v]);
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return false,
                }
            }
            true
        })
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1 && self.is_connected() && self.edges + 1 == self.vertex_count()
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Smallest k such that every induced subgraph has a vertex of degree
    /// at most k, by repeatedly peeling a minimum-degree vertex.
    pub fn degeneracy(&self) -> usize {
        let n = self.vertex_count();
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut removed = vec![false; n];
        let mut best = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| degree[v])
                .expect("vertices remain");
            best = best.max(degree[v]);
            removed[v] = true;
            for &w in &self.adj[v] {
                if !removed[w] {
                    degree[w] -= 1;
                }
            }
        }
        best
    }

    /// Size of a minimum dominating set, by subset enumeration in
    /// increasing size. Refuses graphs with more than `cap` vertices.
    pub fn domination_number(&self, cap: usize) -> Result<usize> {
        let n = self.vertex_count();
        if n > cap || n > 63 {
            return Err(Error::ResourceLimit(format!(
                "domination number search over {n} vertices exceeds cap {}",
                cap.min(63)
            )));
        }
        if n == 0 {
            return Ok(0);
        }
        let full = (1u64 << n) - 1;
        let balls: Vec<u64> = (0..n)
            .map(|v| self.adj[v].iter().fold(1u64 << v, |m, &w| m | (1u64 << w)))
            .collect();
        for size in 1..=n {
            // Gosper's hack over all `size`-subsets of n bits
            let mut set: u64 = (1u64 << size) - 1;
            loop {
                let mut covered = 0u64;
                let mut bits = set;
                while bits != 0 {
                    covered |= balls[bits.trailing_zeros() as usize];
                    bits &= bits - 1;
                }
                if covered == full {
                    return Ok(size);
                }
                if size == n {
                    break;
                }
                let low = set & set.wrapping_neg();
                let ripple = set + low;
                set = (((ripple ^ set) >> 2) / low) | ripple;
                if set > full {
                    break;
                }
            }
        }
        unreachable!("V dominates itself")
    }

    /// Deletes `v`, recompacting ids. Returns the graph and the old→new map.
    pub fn remove_vertex(&self, v: VertexId) -> Result<(UndirectedGraph, Vec<Option<VertexId>>)> {
        check_vertex(v, self.vertex_count())?;
        let (map, keep) = super::deletion_map(self.vertex_count(), v);
        let edges = self
            .edges()
            .filter_map(|(a, b)| Some((map[a]?, map[b]?)))
            .collect::<Vec<_>>();
        let g = UndirectedGraph::build(self.names.restrict(&keep), edges)?;
        Ok((g, map))
    }
}
