//! Strong t-subdivisions of undirected graphs and weak t-subdivisions of
//! oriented graphs, with their projections back onto the input.
//!
//! A new vertex on the path that leaves `y` and enters `x` is named
//! `x^y_i` (i = 1 next to `y`) and projects to `x`.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphFile, GraphJson, OrientedGraph, UndirectedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubdivisionKind {
    Strong,
    Weak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Original,
    /// `index`-th interior vertex of the path from `counterpart` to `owner`.
    New {
        owner: VertexId,
        counterpart: VertexId,
        index: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionResult {
    pub graph: OrientedGraph,
    /// Subdivided vertex → input vertex.
    pub projection: Vec<VertexId>,
    pub roles: Vec<VertexRole>,
    pub kind: SubdivisionKind,
    pub t: usize,
    pub original: GraphFile,
}

/// Replaces every (from, to) pair by a directed path with `t` arcs.
fn build(
    names: &[String],
    pairs: &[(VertexId, VertexId)],
    t: usize,
) -> Result<(OrientedGraph, Vec<VertexId>, Vec<VertexRole>)> {
    let n = names.len();
    let mut all_names = names.to_vec();
    let mut projection: Vec<VertexId> = (0..n).collect();
    let mut roles = vec![VertexRole::Original; n];
    let mut arcs = Vec::with_capacity(pairs.len() * t);
    for &(from, to) in pairs {
        let mut prev = from;
        for index in 1..t {
            let id = all_names.len();
            all_names.push(format!("{}^{}_{index}", names[to], names[from]));
            projection.push(to);
            roles.push(VertexRole::New {
                owner: to,
                counterpart: from,
                index,
            });
            arcs.push((prev, id));
            prev = id;
        }
        arcs.push((prev, to));
    }
    let graph = OrientedGraph::new(all_names, arcs)?;
    Ok((graph, projection, roles))
}

/// S_t(G): each edge uv becomes the two directed paths u → … → v and
/// v → … → u of length t.
pub fn strong_subdivide(g: &UndirectedGraph, t: usize) -> Result<SubdivisionResult> {
    if t < 2 {
        return Err(Error::InvalidParameter(format!(
            "strong subdivision needs t ≥ 2, got {t}"
        )));
    }
    let pairs: Vec<_> = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
    let (graph, projection, roles) = build(g.names(), &pairs, t)?;
    Ok(SubdivisionResult {
        graph,
        projection,
        roles,
        kind: SubdivisionKind::Strong,
        t,
        original: GraphFile::Undirected(g.clone()),
    })
}

/// W_t(G): each arc uv becomes a directed path from u to v of length t.
pub fn weak_subdivide(g: &OrientedGraph, t: usize) -> Result<SubdivisionResult> {
    if t < 1 {
        return Err(Error::InvalidParameter(
            "weak subdivision needs t ≥ 1".into(),
        ));
    }
    let pairs: Vec<_> = g.arcs().collect();
    let (graph, projection, roles) = build(g.names(), &pairs, t)?;
    Ok(SubdivisionResult {
        graph,
        projection,
        roles,
        kind: SubdivisionKind::Weak,
        t,
        original: GraphFile::Oriented(g.clone()),
    })
}

/// Replaces every edge by an undirected path with `t` edges. New vertices
/// on edge uv (u < v) are named `uv_i`, counted from u.
pub fn undirected_subdivide(g: &UndirectedGraph, t: usize) -> Result<UndirectedGraph> {
    if t < 1 {
        return Err(Error::InvalidParameter("subdivision needs t ≥ 1".into()));
    }
    let mut names = g.names().to_vec();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let mut prev = u;
        for i in 1..t {
            let id = names.len();
            names.push(format!("{}{}_{i}", g.name(u), g.name(v)));
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, v));
    }
    UndirectedGraph::new(names, edges)
}

/// Checks, for every x and every y reachable from x by a directed path of
/// at most t arcs, that the projections of x and y are adjacent or equal
/// in the input (out-adjacent from x's side for the weak kind).
pub fn check_projection_observation(r: &SubdivisionResult, kind: SubdivisionKind) -> Result<bool> {
    let close: Box<dyn Fn(VertexId, VertexId) -> bool + '_> = match (kind, &r.original) {
        (SubdivisionKind::Strong, GraphFile::Undirected(g)) if r.kind == kind => {
            Box::new(move |a, b| a == b || g.has_edge(a, b))
        }
        (SubdivisionKind::Weak, GraphFile::Oriented(g)) if r.kind == kind => {
            Box::new(move |a, b| a == b || g.has_arc(a, b))
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{:?} check on a {:?} subdivision",
                kind, r.kind
            )))
        }
    };
    let g = &r.graph;
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for x in 0..n {
        depth.fill(usize::MAX);
        depth[x] = 0;
        queue.push_back(x);
        while let Some(y) = queue.pop_front() {
            if !close(r.projection[x], r.projection[y]) {
                return Ok(false);
            }
            if depth[y] == r.t {
                continue;
            }
            for &z in g.out(y) {
                if depth[z] == usize::MAX {
                    depth[z] = depth[y] + 1;
                    queue.push_back(z);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleJson {
    pub vertex: String,
    pub role: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub owner: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterpart: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionJson {
    #[serde(flatten)]
    pub graph: GraphJson,
    pub kind: SubdivisionKind,
    pub t: usize,
    pub projection: BTreeMap<String, String>,
    pub roles: Vec<RoleJson>,
}

impl SubdivisionResult {
    fn original_names(&self) -> &[String] {
        match &self.original {
            GraphFile::Oriented(g) => g.names(),
            GraphFile::Undirected(g) => g.names(),
        }
    }

    pub fn to_json(&self) -> SubdivisionJson {
        let base = self.original_names();
        let names = self.graph.names();
        let projection = names
            .iter()
            .zip(&self.projection)
            .map(|(x, &p)| (x.clone(), base[p].clone()))
            .collect();
        let roles = names
            .iter()
            .zip(&self.roles)
            .map(|(x, role)| match *role {
                VertexRole::Original => RoleJson {
                    vertex: x.clone(),
                    role: "original".into(),
                    owner: None,
                    counterpart: None,
                    index: None,
                },
                VertexRole::New {
                    owner,
                    counterpart,
                    index,
                } => RoleJson {
                    vertex: x.clone(),
                    role: "new".into(),
                    owner: Some(base[owner].clone()),
                    counterpart: Some(base[counterpart].clone()),
                    index: Some(index),
                },
            })
            .collect();
        SubdivisionJson {
            graph: GraphJson::from(&self.graph),
            kind: self.kind,
            t: self.t,
            projection,
            roles,
        }
    }

    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }
}
