use std::collections::VecDeque;

use super::{check_vertex, closed, union_sorted, NameTable, UndirectedGraph, VertexId};
use crate::error::{Error, Result};

/// A finite oriented graph: no loops, no pair of opposite arcs. Parallel arcs
/// in the same direction collapse to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedGraph {
    names: NameTable,
    out: Vec<Vec<VertexId>>,
    inn: Vec<Vec<VertexId>>,
    arcs: usize,
}

impl OrientedGraph {
    /// Builds a graph from vertex names and arcs given by index.
    pub fn new<I>(names: Vec<String>, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::build(NameTable::new(names)?, arcs)
    }

    /// Vertices are named `"0"`, `"1"`, ... .
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::build(NameTable::numbered(n), arcs)
    }

    /// Builds a graph from named vertices and arcs given by name.
    pub fn from_named_arcs(names: &[&str], arcs: &[(&str, &str)]) -> Result<Self> {
        let table = NameTable::new(names.iter().map(|s| s.to_string()).collect())?;
        let mut ids = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            let u = table
                .lookup(u)
                .ok_or_else(|| Error::UnknownVertex(u.into()))?;
            let v = table
                .lookup(v)
                .ok_or_else(|| Error::UnknownVertex(v.into()))?;
            ids.push((u, v));
        }
        Self::build(table, ids)
    }

    pub(crate) fn build<I>(names: NameTable, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let n = names.len();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(names.name(u).to_string()));
            }
            out[u].push(v);
            inn[v].push(u);
        }
        for list in out.iter_mut().chain(inn.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        for u in 0..n {
            for &v in &out[u] {
                if u < v && out[v].binary_search(&u).is_ok() {
                    return Err(Error::AntiParallel(
                        names.name(u).to_string(),
                        names.name(v).to_string(),
                    ));
                }
            }
        }
        let arcs = out.iter().map(Vec::len).sum();
        Ok(OrientedGraph {
            names,
            out,
            inn,
            arcs,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
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

    /// Arcs in ascending `(tail, head)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads.iter().map(move |&v| (u, v)))
    }

    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        self.out
            .get(u)
            .is_some_and(|heads| heads.binary_search(&v).is_ok())
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// N⁺(v), sorted. Panics if `v` is out of range.
    pub fn out(&self, v: VertexId) -> &[VertexId] {
        &self.out[v]
    }

    /// N⁻(v), sorted. Panics if `v` is out of range.
    pub fn inn(&self, v: VertexId) -> &[VertexId] {
        &self.inn[v]
    }

    /// N⁺(v).
    pub fn out_neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        check_vertex(v, self.vertex_count())?;
        Ok(&self.out[v])
    }

    /// N⁻(v).
    pub fn in_neighbors(&self, v: VertexId) -> Result<&[VertexId]> {
        check_vertex(v, self.vertex_count())?;
        Ok(&self.inn[v])
    }

    /// N⁺[v].
    pub fn closed_out_neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        Ok(closed(self.out_neighbors(v)?, v))
    }

    /// N⁻[v].
    pub fn closed_in_neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        Ok(closed(self.in_neighbors(v)?, v))
    }

    /// N(v) = N⁺(v) ∪ N⁻(v).
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        check_vertex(v, self.vertex_count())?;
        Ok(union_sorted(&self.out[v], &self.inn[v]))
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        Ok(closed(&self.neighbors(v)?, v))
    }

    pub fn underlying(&self) -> UndirectedGraph {
        UndirectedGraph::build(self.names.clone(), self.arcs()).expect("oriented graph is simple")
    }

    pub fn sources(&self) -> Vec<VertexId> {
        (0..self.vertex_count())
            .filter(|&v| self.inn[v].is_empty())
            .collect()
    }

    pub fn sinks(&self) -> Vec<VertexId> {
        (0..self.vertex_count())
            .filter(|&v| self.out[v].is_empty())
            .collect()
    }

    /// The smallest v with N⁺[v] = V, if any.
    pub fn dominating_vertex(&self) -> Option<VertexId> {
        let n = self.vertex_count();
        (0..n).find(|&v| self.out[v].len() + 1 == n)
    }

    fn reaches_all(&self, adj: &[Vec<VertexId>]) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.reaches_all(&self.out) && self.reaches_all(&self.inn)
    }

    /// Deletes `v`, recompacting ids. Returns the graph and the old→new map.
    pub fn remove_vertex(&self, v: VertexId) -> Result<(OrientedGraph, Vec<Option<VertexId>>)> {
        check_vertex(v, self.vertex_count())?;
        let (map, keep) = super::deletion_map(self.vertex_count(), v);
        let arcs = self
            .arcs()
            .filter_map(|(a, b)| Some((map[a]?, map[b]?)))
            .collect::<Vec<_>>();
        let g = OrientedGraph::build(self.names.restrict(&keep), arcs)?;
        Ok((g, map))
    }
}
