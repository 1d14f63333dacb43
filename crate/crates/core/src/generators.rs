//! Deterministic and seeded instance families, and exhaustive enumeration
//! of small labeled connected graphs.
//!
//! Random families draw from ChaCha8 seeded with the generator's 64-bit seed, so a
//! `(family, n, seed)` triple always yields the same graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphFile, OrientedGraph, UndirectedGraph, VertexId};

pub const MAX_ENUMERATE_UNDIRECTED: usize = 7;
pub const MAX_ENUMERATE_ORIENTED: usize = 5;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// K_{1,n−1}.
    Star,
    RandomTree,
    /// G(n, p); not necessarily connected.
    RandomGraph {
        p: f64,
    },
    /// Parts `0..n/2` and `n/2..n`, each cross pair kept with probability p.
    RandomBipartite {
        p: f64,
    },
    Tournament,
    /// Each edge of the inner graph oriented by a fair coin.
    RandomOrientation {
        of: Box<GeneratorSpec>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub family: Family,
    pub n: usize,
    #[serde(default)]
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, seed: u64) -> Self {
        GeneratorSpec { family, n, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParameter(format!("n = {} < 2", self.n)));
        }
        match &self.family {
            Family::Cycle if self.n < 3 => {
                Err(Error::InvalidParameter("a cycle needs n ≥ 3".into()))
            }
            Family::RandomGraph { p } | Family::RandomBipartite { p }
                if !(0.0..=1.0).contains(p) =>
            {
                Err(Error::InvalidParameter(format!(
                    "probability {p} outside [0, 1]"
                )))
            }
            Family::RandomOrientation { of } => {
                if of.n != self.n {
                    return Err(Error::InvalidParameter(
                        "orientation size differs from its base graph".into(),
                    ));
                }
                of.validate()
            }
            _ => Ok(()),
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn orient(g: &UndirectedGraph, rng: &mut ChaCha8Rng) -> OrientedGraph {
    let arcs: Vec<(VertexId, VertexId)> = g
        .edges()
        .map(|(u, v)| if rng.gen::<bool>() { (u, v) } else { (v, u) })
        .collect();
    OrientedGraph::new(g.names().to_vec(), arcs).expect("orientation of a simple graph")
}

fn undirected(spec: &GeneratorSpec) -> Result<UndirectedGraph> {
    match generate(spec)? {
        GraphFile::Undirected(g) => Ok(g),
        GraphFile::Oriented(_) => Err(Error::InvalidParameter(
            "cannot re-orient an oriented family".into(),
        )),
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<GraphFile> {
    spec.validate()?;
    let n = spec.n;
    let g = match &spec.family {
        Family::Path => UndirectedGraph::path(n),
        Family::Cycle => UndirectedGraph::cycle(n),
        Family::Complete => UndirectedGraph::complete(n),
        Family::Star => UndirectedGraph::star(n - 1),
        Family::RandomTree => {
            let mut rng = rng(spec.seed);
            let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
            UndirectedGraph::from_edges(n, edges)?
        }
        Family::RandomGraph { p } => {
            let mut rng = rng(spec.seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(*p) {
                        edges.push((u, v));
                    }
                }
            }
            UndirectedGraph::from_edges(n, edges)?
        }
        Family::RandomBipartite { p } => {
            let mut rng = rng(spec.seed);
            let half = n / 2;
            let mut edges = Vec::new();
            for u in 0..half {
                for v in half..n {
                    if rng.gen_bool(*p) {
                        edges.push((u, v));
                    }
                }
            }
            UndirectedGraph::from_edges(n, edges)?
        }
        Family::Tournament => {
            let mut rng = rng(spec.seed);
            return Ok(GraphFile::Oriented(orient(
                &UndirectedGraph::complete(n),
                &mut rng,
            )));
        }
        Family::RandomOrientation { of } => {
            let base = undirected(of)?;
            let mut rng = rng(spec.seed);
            return Ok(GraphFile::Oriented(orient(&base, &mut rng)));
        }
    };
    Ok(GraphFile::Undirected(g))
}

/// All connected labeled graphs on `n` vertices (or all orientations of
/// them), each exactly once: edge subsets in ascending bitmask order, and
/// for each, orientations in ascending bitmask order.
pub fn enumerate_connected(
    n: usize,
    oriented: bool,
) -> Result<Box<dyn Iterator<Item = GraphFile>>> {
    let cap = if oriented {
        MAX_ENUMERATE_ORIENTED
    } else {
        MAX_ENUMERATE_UNDIRECTED
    };
    if n > cap {
        return Err(Error::ResourceLimit(format!(
            "enumeration of {} graphs is capped at n = {cap}",
            if oriented { "oriented" } else { "undirected" }
        )));
    }
    if n == 0 {
        return Ok(Box::new(std::iter::empty()));
    }
    let pairs: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    let graphs = (0..total).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = UndirectedGraph::from_edges(n, edges).expect("simple by construction");
        g.is_connected().then_some(g)
    });
    if !oriented {
        return Ok(Box::new(graphs.map(GraphFile::Undirected)));
    }
    Ok(Box::new(graphs.flat_map(|g| {
        let edges: Vec<_> = g.edges().collect();
        let n = g.vertex_count();
        (0..1u64 << edges.len()).map(move |flip| {
            let arcs =
                edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| if flip >> i & 1 == 1 { (v, u) } else { (u, v) });
            GraphFile::Oriented(OrientedGraph::from_arcs(n, arcs).expect("orientation"))
        })
    })))
}

/// Connected undirected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Result<Vec<UndirectedGraph>> {
    Ok(enumerate_connected(n, false)?
        .map(|g| match g {
            GraphFile::Undirected(g) => g,
            GraphFile::Oriented(_) => unreachable!(),
        })
        .collect())
}

/// Connected oriented graphs on `n` vertices.
pub fn connected_oriented_graphs(n: usize) -> Result<Vec<OrientedGraph>> {
    Ok(enumerate_connected(n, true)?
        .map(|g| match g {
            GraphFile::Oriented(g) => g,
            GraphFile::Undirected(_) => unreachable!(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_edges() {
        let GraphFile::Undirected(g) = generate(&GeneratorSpec::new(Family::Cycle, 4, 0)).unwrap()
        else {
            panic!()
        };
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 3), (1, 2), (2, 3)]
        );
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(&GeneratorSpec::new(Family::Path, 1, 0)).is_err());
        assert!(generate(&GeneratorSpec::new(Family::Cycle, 2, 0)).is_err());
        assert!(generate(&GeneratorSpec::new(Family::RandomGraph { p: 1.5 }, 4, 0)).is_err());
        let nested = Family::RandomOrientation {
            of: Box::new(GeneratorSpec::new(Family::Tournament, 4, 0)),
        };
        assert!(generate(&GeneratorSpec::new(nested, 4, 0)).is_err());
    }

    #[test]
    fn enumeration_caps() {
        assert!(matches!(
            enumerate_connected(8, false),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            enumerate_connected(6, true),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn spec_json_shape() {
        let spec = GeneratorSpec::new(Family::RandomGraph { p: 0.5 }, 6, 9);
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"family":"random_graph","p":0.5,"n":6,"seed":9}"#);
        assert_eq!(serde_json::from_str::<GeneratorSpec>(&text).unwrap(), spec);
    }
}
