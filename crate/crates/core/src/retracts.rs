//! Single-vertex retracts of oriented graphs (strong, distributed, weak)
//! and corners of undirected graphs: detection, validated application,
//! exhaustive reduction, plus a sufficient condition for a graph not to be
//! cop-win in the normal model.
//!
//! Witness searches scan candidates in ascending id order and return the
//! first hit, so reductions are reproducible.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{closed, is_subset, union_sorted, OrientedGraph, UndirectedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RetractKind {
    /// u, v adjacent and N[v] ⊆ N[u], neighborhoods taken direction-blind.
    Strong,
    /// Arcs uᵢ→v with N⁺(v) ⊆ N⁺(uᵢ) for each i and N⁻(v) ⊆ ⋃ N⁻[uᵢ].
    Distributed,
    /// Arc u→v with N(v) ⊆ N⁺[u].
    Weak,
    /// Undirected corner: N[v] ⊆ N[u].
    #[serde(rename = "corner")]
    UndirectedCorner,
}

impl RetractKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RetractKind::Strong => "strong",
            RetractKind::Distributed => "distributed",
            RetractKind::Weak => "weak",
            RetractKind::UndirectedCorner => "corner",
        }
    }
}

impl std::str::FromStr for RetractKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(RetractKind::Strong),
            "distributed" => Ok(RetractKind::Distributed),
            "weak" => Ok(RetractKind::Weak),
            "corner" | "undirected_corner" => Ok(RetractKind::UndirectedCorner),
            other => Err(Error::InvalidParameter(format!(
                "unknown retract kind `{other}` (expected strong|distributed|weak|corner)"
            ))),
        }
    }
}

/// The deleted vertex and the vertices that certify the deletion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractWitness {
    pub kind: RetractKind,
    pub removed: VertexId,
    pub covers: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: RetractKind,
    pub removed: String,
    pub covers: Vec<String>,
}

impl RetractWitness {
    pub fn to_json(&self, names: &[String]) -> WitnessJson {
        WitnessJson {
            kind: self.kind,
            removed: names[self.removed].clone(),
            covers: self.covers.iter().map(|&u| names[u].clone()).collect(),
        }
    }
}

fn strong_closed(g: &OrientedGraph, v: VertexId) -> Vec<VertexId> {
    closed(&union_sorted(g.out(v), g.inn(v)), v)
}

fn strong_holds(g: &OrientedGraph, v: VertexId, u: VertexId) -> bool {
    u != v && g.adjacent(u, v) && is_subset(&strong_closed(g, v), &strong_closed(g, u))
}

fn weak_holds(g: &OrientedGraph, v: VertexId, u: VertexId) -> bool {
    g.has_arc(u, v) && is_subset(&union_sorted(g.out(v), g.inn(v)), &closed(g.out(u), u))
}

/// The maximal distributed cover of `v`, if it certifies a retract.
fn distributed_cover(g: &OrientedGraph, v: VertexId) -> Option<Vec<VertexId>> {
    let covers: Vec<VertexId> = g
        .inn(v)
        .iter()
        .copied()
        .filter(|&u| is_subset(g.out(v), g.out(u)))
        .collect();
    distributed_holds(g, v, &covers).then_some(covers)
}

fn distributed_holds(g: &OrientedGraph, v: VertexId, covers: &[VertexId]) -> bool {
    if covers.is_empty() {
        return false;
    }
    let per_cover = covers
        .iter()
        .all(|&u| u != v && g.has_arc(u, v) && is_subset(g.out(v), g.out(u)));
    let union = covers.iter().fold(Vec::new(), |acc, &u| {
        union_sorted(&acc, &closed(g.inn(u), u))
    });
    per_cover && is_subset(g.inn(v), &union)
}

fn corner_holds(g: &UndirectedGraph, v: VertexId, u: VertexId) -> bool {
    u != v && is_subset(&closed(g.adj(v), v), &closed(g.adj(u), u))
}

/// Every strong-retract witness, ascending by (removed, cover).
pub fn strong_retracts(g: &OrientedGraph) -> Vec<RetractWitness> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|v| (0..n).map(move |u| (v, u)))
        .filter(|&(v, u)| strong_holds(g, v, u))
        .map(|(v, u)| RetractWitness {
            kind: RetractKind::Strong,
            removed: v,
            covers: vec![u],
        })
        .collect()
}

pub fn find_strong_retract(g: &OrientedGraph) -> Option<RetractWitness> {
    strong_retracts(g).into_iter().next()
}

/// One witness per removable vertex, each with its maximal cover set.
pub fn distributed_retracts(g: &OrientedGraph) -> Vec<RetractWitness> {
    (0..g.vertex_count())
        .filter_map(|v| {
            distributed_cover(g, v).map(|covers| RetractWitness {
                kind: RetractKind::Distributed,
                removed: v,
                covers,
            })
        })
        .collect()
}

pub fn find_distributed_retract(g: &OrientedGraph) -> Option<RetractWitness> {
    (0..g.vertex_count()).find_map(|v| {
        distributed_cover(g, v).map(|covers| RetractWitness {
            kind: RetractKind::Distributed,
            removed: v,
            covers,
        })
    })
}

pub fn weak_retracts(g: &OrientedGraph) -> Vec<RetractWitness> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|v| g.inn(v).iter().map(move |&u| (v, u)))
        .filter(|&(v, u)| weak_holds(g, v, u))
        .map(|(v, u)| RetractWitness {
            kind: RetractKind::Weak,
            removed: v,
            covers: vec![u],
        })
        .collect()
}

pub fn find_weak_retract(g: &OrientedGraph) -> Option<RetractWitness> {
    weak_retracts(g).into_iter().next()
}

pub fn corners(g: &UndirectedGraph) -> Vec<RetractWitness> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|v| (0..n).map(move |u| (v, u)))
        .filter(|&(v, u)| corner_holds(g, v, u))
        .map(|(v, u)| RetractWitness {
            kind: RetractKind::UndirectedCorner,
            removed: v,
            covers: vec![u],
        })
        .collect()
}

pub fn find_corner(g: &UndirectedGraph) -> Option<RetractWitness> {
    let n = g.vertex_count();
    (0..n)
        .flat_map(|v| (0..n).map(move |u| (v, u)))
        .find(|&(v, u)| corner_holds(g, v, u))
        .map(|(v, u)| RetractWitness {
            kind: RetractKind::UndirectedCorner,
            removed: v,
            covers: vec![u],
        })
}

pub fn find_retract(g: &OrientedGraph, kind: RetractKind) -> Result<Option<RetractWitness>> {
    match kind {
        RetractKind::Strong => Ok(find_strong_retract(g)),
        RetractKind::Distributed => Ok(find_distributed_retract(g)),
        RetractKind::Weak => Ok(find_weak_retract(g)),
        RetractKind::UndirectedCorner => Ok(find_corner(&g.underlying())),
    }
}

/// Re-checks `w` against `g`.
pub fn validate_witness(g: &OrientedGraph, w: &RetractWitness) -> Result<()> {
    let n = g.vertex_count();
    let in_range = w.removed < n && w.covers.iter().all(|&u| u < n);
    let single = w.covers.len() == 1;
    let ok = in_range
        && match w.kind {
            RetractKind::Strong => single && strong_holds(g, w.removed, w.covers[0]),
            RetractKind::Weak => single && weak_holds(g, w.removed, w.covers[0]),
            RetractKind::Distributed => distributed_holds(g, w.removed, &w.covers),
            RetractKind::UndirectedCorner => {
                single && corner_holds(&g.underlying(), w.removed, w.covers[0])
            }
        };
    if ok {
        Ok(())
    } else {
        Err(Error::WitnessInvalid(format!(
            "{} retract removing {} via {:?}",
            w.kind.as_str(),
            w.removed,
            w.covers
        )))
    }
}

/// Deletes the witnessed vertex after re-validating the witness. Returns the
/// smaller graph and the old→new id map.
pub fn apply_retract(
    g: &OrientedGraph,
    w: &RetractWitness,
) -> Result<(OrientedGraph, Vec<Option<VertexId>>)> {
    validate_witness(g, w)?;
    g.remove_vertex(w.removed)
}

pub fn apply_corner(
    g: &UndirectedGraph,
    w: &RetractWitness,
) -> Result<(UndirectedGraph, Vec<Option<VertexId>>)> {
    let n = g.vertex_count();
    let ok = w.kind == RetractKind::UndirectedCorner
        && w.covers.len() == 1
        && w.removed < n
        && w.covers[0] < n
        && corner_holds(g, w.removed, w.covers[0]);
    if !ok {
        return Err(Error::WitnessInvalid(format!(
            "no corner at {} covered by {:?}",
            w.removed, w.covers
        )));
    }
    g.remove_vertex(w.removed)
}

/// A reduction run. Witness ids refer to the graph at the time of each
/// deletion; `removed_names` carries the stable names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction<G> {
    pub residue: G,
    pub steps: Vec<RetractWitness>,
    pub removed_names: Vec<WitnessJson>,
}

/// Applies retracts of `kind` until none exists or one vertex remains.
pub fn reduce(g: &OrientedGraph, kind: RetractKind) -> Result<Reduction<OrientedGraph>> {
    if kind == RetractKind::UndirectedCorner {
        return Err(Error::InvalidParameter(
            "corner reduction runs on undirected graphs".into(),
        ));
    }
    let mut cur = g.clone();
    let mut steps = Vec::new();
    let mut removed_names = Vec::new();
    while cur.vertex_count() > 1 {
        let Some(w) = find_retract(&cur, kind)? else {
            break;
        };
        removed_names.push(w.to_json(cur.names()));
        cur = apply_retract(&cur, &w)?.0;
        steps.push(w);
    }
    Ok(Reduction {
        residue: cur,
        steps,
        removed_names,
    })
}

pub fn reduce_corners(g: &UndirectedGraph) -> Reduction<UndirectedGraph> {
    let mut cur = g.clone();
    let mut steps = Vec::new();
    let mut removed_names = Vec::new();
    while cur.vertex_count() > 1 {
        let Some(w) = find_corner(&cur) else {
            break;
        };
        removed_names.push(w.to_json(cur.names()));
        cur = apply_corner(&cur, &w).expect("fresh corner is valid").0;
        steps.push(w);
    }
    Reduction {
        residue: cur,
        steps,
        removed_names,
    }
}

/// Dismantlable by corners down to one vertex; for connected graphs this is
/// exactly the cop-win graphs.
pub fn is_dismantlable(g: &UndirectedGraph) -> bool {
    g.vertex_count() >= 1 && reduce_corners(g).residue.vertex_count() == 1
}

/// True iff every arc u→v has an out-neighbor of v that is not an
/// out-neighbor of u. When it holds, one cop cannot win the normal game.
pub fn not_copwin_condition(g: &OrientedGraph) -> bool {
    g.arc_count() > 0
        && g.arcs()
            .all(|(u, v)| g.out(v).iter().any(|w| g.out(u).binary_search(w).is_err()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> OrientedGraph {
        OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    // u=0, v=1, w=2
    fn transitive() -> OrientedGraph {
        OrientedGraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn arc() -> OrientedGraph {
        OrientedGraph::from_arcs(2, [(0, 1)]).unwrap()
    }

    fn witness(kind: RetractKind, removed: VertexId, covers: &[VertexId]) -> RetractWitness {
        RetractWitness {
            kind,
            removed,
            covers: covers.to_vec(),
        }
    }

    #[test]
    fn strong_examples() {
        let all = strong_retracts(&transitive());
        assert!(all.contains(&witness(RetractKind::Strong, 2, &[0])));
        // the underlying graph of a directed triangle is K3
        assert_eq!(
            find_strong_retract(&c3()),
            Some(witness(RetractKind::Strong, 0, &[1]))
        );
        assert_eq!(
            find_strong_retract(&arc()),
            Some(witness(RetractKind::Strong, 0, &[1]))
        );
        assert!(strong_retracts(&arc()).contains(&witness(RetractKind::Strong, 1, &[0])));
    }

    #[test]
    fn distributed_examples() {
        assert_eq!(find_distributed_retract(&c3()), None);
        let all = distributed_retracts(&transitive());
        assert_eq!(all[0], witness(RetractKind::Distributed, 1, &[0]));
        assert!(all.contains(&witness(RetractKind::Distributed, 2, &[0, 1])));
        // a sink with in-neighbors always qualifies
        let g = OrientedGraph::from_arcs(4, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3)]).unwrap();
        assert_eq!(
            find_distributed_retract(&g),
            Some(witness(RetractKind::Distributed, 3, &[1, 2]))
        );
    }

    #[test]
    fn weak_examples() {
        assert_eq!(
            find_weak_retract(&transitive()),
            Some(witness(RetractKind::Weak, 1, &[0]))
        );
        assert!(weak_retracts(&transitive()).contains(&witness(RetractKind::Weak, 2, &[0])));
        assert_eq!(find_weak_retract(&c3()), None);
        assert_eq!(
            find_weak_retract(&arc()),
            Some(witness(RetractKind::Weak, 1, &[0]))
        );
    }

    #[test]
    fn corner_examples() {
        let tree = UndirectedGraph::path(4);
        assert_eq!(
            find_corner(&tree),
            Some(witness(RetractKind::UndirectedCorner, 0, &[1]))
        );
        assert_eq!(find_corner(&UndirectedGraph::cycle(4)), None);
        let k3 = find_corner(&UndirectedGraph::complete(3)).unwrap();
        assert_eq!((k3.removed, k3.covers.clone()), (0, vec![1]));
    }

    #[test]
    fn apply_examples() {
        let (g, _) = apply_retract(&transitive(), &witness(RetractKind::Weak, 2, &[0])).unwrap();
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
        let (g, _) = apply_retract(&arc(), &witness(RetractKind::Strong, 1, &[0])).unwrap();
        assert_eq!(g.vertex_count(), 1);
        let (g, _) = apply_corner(
            &UndirectedGraph::complete(3),
            &witness(RetractKind::UndirectedCorner, 0, &[1]),
        )
        .unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
    }

    #[test]
    fn stale_witnesses_are_rejected() {
        for w in [
            witness(RetractKind::Strong, 0, &[0]),
            witness(RetractKind::Weak, 1, &[0]),
            witness(RetractKind::Distributed, 1, &[0]),
            witness(RetractKind::Strong, 0, &[9]),
            witness(RetractKind::Distributed, 0, &[]),
        ] {
            assert!(matches!(
                apply_retract(&c3(), &w),
                Err(Error::WitnessInvalid(_))
            ));
        }
        assert!(apply_corner(
            &UndirectedGraph::cycle(4),
            &witness(RetractKind::UndirectedCorner, 0, &[1])
        )
        .is_err());
    }

    #[test]
    fn reductions() {
        let tree = reduce_corners(&UndirectedGraph::star(5));
        assert_eq!(tree.residue.vertex_count(), 1);
        assert_eq!(tree.steps.len(), 5);
        let c4 = reduce_corners(&UndirectedGraph::cycle(4));
        assert_eq!(c4.residue, UndirectedGraph::cycle(4));
        assert!(c4.steps.is_empty());
        let r = reduce(&transitive(), RetractKind::Weak).unwrap();
        assert_eq!(r.residue.vertex_count(), 1);
        assert_eq!(r.removed_names[0].removed, "1");
        assert!(reduce(&c3(), RetractKind::UndirectedCorner).is_err());
    }

    #[test]
    fn not_copwin_examples() {
        assert!(not_copwin_condition(&c3()));
        assert!(!not_copwin_condition(&arc()));
        assert!(!not_copwin_condition(&transitive()));
        assert!(!not_copwin_condition(
            &OrientedGraph::from_arcs(1, []).unwrap()
        ));
    }
}
