//! Graph value types: oriented graphs (the playing field) and simple
//! undirected graphs, with neighborhoods and the structural predicates the
//! rest of the crate relies on.
//!
//! Vertices are dense indices `0..n` with a side table of unique display
//! names. Graphs are immutable; every transformation builds a new value.

mod io;
mod oriented;
mod undirected;

pub use io::{parse_edge_list, GraphFile, GraphJson};
pub use oriented::OrientedGraph;
pub use undirected::UndirectedGraph;

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Dense vertex index, `0..n` within one graph.
pub type VertexId = usize;

/// Default vertex cap for [`UndirectedGraph::domination_number`].
pub const DEFAULT_DOMINATION_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct NameTable {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl NameTable {
    pub(crate) fn new(names: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        Ok(NameTable { names, index })
    }

    pub(crate) fn numbered(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect()).expect("numeric names are unique")
    }

    pub(crate) fn len(&self) -> usize {
        self.names.len()
    }

    pub(crate) fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub(crate) fn names(&self) -> &[String] {
        &self.names
    }

    pub(crate) fn lookup(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    /// Names of the vertices in `keep`, in that order.
    pub(crate) fn restrict(&self, keep: &[VertexId]) -> Self {
        Self::new(keep.iter().map(|&v| self.names[v].clone()).collect())
            .expect("subset of unique names is unique")
    }
}

pub(crate) fn check_vertex(v: VertexId, n: usize) -> Result<()> {
    if v < n {
        Ok(())
    } else {
        Err(Error::InvalidVertex { vertex: v, n })
    }
}

/// Sorted union of a sorted slice and one extra vertex.
pub(crate) fn closed(open: &[VertexId], v: VertexId) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(open.len() + 1);
    let pos = open.partition_point(|&w| w < v);
    out.extend_from_slice(&open[..pos]);
    out.push(v);
    out.extend_from_slice(&open[pos..]);
    out
}

/// Sorted, deduplicated union of two sorted slices.
pub(crate) fn union_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `a ⊆ b` for sorted slices.
pub(crate) fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Old-to-new id map after deleting `removed`; the deleted vertex maps to `None`.
pub(crate) fn deletion_map(n: usize, removed: VertexId) -> (Vec<Option<VertexId>>, Vec<VertexId>) {
    let keep: Vec<VertexId> = (0..n).filter(|&v| v != removed).collect();
    let mut map = vec![None; n];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    (map, keep)
}
