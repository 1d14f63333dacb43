//! Canonical JSON graph format, plain-text edge lists and DOT export.
//!
//! JSON: `{"directed": bool, "vertices": [names], "arcs": [[u, v], ...]}`
//! with arcs keyed by name. Emission lists vertices in id order and arcs
//! sorted by id pair, so emit → parse → emit is byte-identical.

use serde::{Deserialize, Serialize};

use super::{NameTable, OrientedGraph, UndirectedGraph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub directed: bool,
    pub vertices: Vec<String>,
    pub arcs: Vec<[String; 2]>,
}

/// A graph loaded from disk: oriented or undirected according to its
/// `directed` flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Oriented(OrientedGraph),
    Undirected(UndirectedGraph),
}

impl GraphJson {
    fn resolve(&self) -> Result<(NameTable, Vec<(usize, usize)>)> {
        let table = NameTable::new(self.vertices.clone())?;
        let mut ids = Vec::with_capacity(self.arcs.len());
        for [u, v] in &self.arcs {
            let a = table
                .lookup(u)
                .ok_or_else(|| Error::UnknownVertex(u.clone()))?;
            let b = table
                .lookup(v)
                .ok_or_else(|| Error::UnknownVertex(v.clone()))?;
            ids.push((a, b));
        }
        Ok((table, ids))
    }

    pub fn into_graph(self) -> Result<GraphFile> {
        let (table, ids) = self.resolve()?;
        if self.directed {
            OrientedGraph::build(table, ids).map(GraphFile::Oriented)
        } else {
            UndirectedGraph::build(table, ids).map(GraphFile::Undirected)
        }
    }

    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph json serializes");
        s.push('\n');
        s
    }
}

impl From<&OrientedGraph> for GraphJson {
    fn from(g: &OrientedGraph) -> Self {
        GraphJson {
            directed: true,
            vertices: g.names().to_vec(),
            arcs: g
                .arcs()
                .map(|(u, v)| [g.name(u).to_string(), g.name(v).to_string()])
                .collect(),
        }
    }
}

impl From<&UndirectedGraph> for GraphJson {
    fn from(g: &UndirectedGraph) -> Self {
        GraphJson {
            directed: false,
            vertices: g.names().to_vec(),
            arcs: g
                .edges()
                .map(|(u, v)| [g.name(u).to_string(), g.name(v).to_string()])
                .collect(),
        }
    }
}

impl GraphFile {
    /// Parses the canonical JSON format. Unknown top-level fields are
    /// ignored, so subdivision output loads as a plain graph.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(text)?;
        raw.into_graph()
    }

    /// JSON when the text starts with `{`, otherwise an edge list whose
    /// directedness comes from `directed`.
    pub fn parse(text: &str, directed: bool) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json_str(text)
        } else {
            parse_edge_list(text, directed)
        }
    }

    pub fn to_json(&self) -> GraphJson {
        match self {
            GraphFile::Oriented(g) => g.into(),
            GraphFile::Undirected(g) => g.into(),
        }
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_json().to_canonical_string()
    }

    pub fn to_dot(&self) -> String {
        let json = self.to_json();
        let (kind, sep) = if json.directed {
            ("digraph", "->")
        } else {
            ("graph", "--")
        };
        let mut out = format!("{kind} G {{\n");
        for v in &json.vertices {
            out.push_str(&format!("  {v:?};\n"));
        }
        for [u, v] in &json.arcs {
            out.push_str(&format!("  {u:?} {sep} {v:?};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// The oriented graph, or for undirected input its canonical orientation.
    pub fn as_oriented(&self) -> OrientedGraph {
        match self {
            GraphFile::Oriented(g) => g.clone(),
            GraphFile::Undirected(g) => g.canonical_orientation(),
        }
    }

    pub fn as_undirected(&self) -> UndirectedGraph {
        match self {
            GraphFile::Oriented(g) => g.underlying(),
            GraphFile::Undirected(g) => g.clone(),
        }
    }
}

/// One `u v` pair per line; a line with a single name declares an isolated
/// vertex. `#` starts a comment. Vertices are numbered in first-appearance
/// order.
pub fn parse_edge_list(text: &str, directed: bool) -> Result<GraphFile> {
    let mut names: Vec<String> = Vec::new();
    let mut index = std::collections::HashMap::new();
    let mut id = |name: &str, names: &mut Vec<String>| -> usize {
        *index.entry(name.to_string()).or_insert_with(|| {
            names.push(name.to_string());
            names.len() - 1
        })
    };
    let mut pairs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => {
                id(v, &mut names);
            }
            [u, v] => {
                let a = id(u, &mut names);
                let b = id(v, &mut names);
                pairs.push((a, b));
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected `u v`, got `{line}`",
                    lineno + 1
                )))
            }
        }
    }
    let table = NameTable::new(names)?;
    if directed {
        OrientedGraph::build(table, pairs).map(GraphFile::Oriented)
    } else {
        UndirectedGraph::build(table, pairs).map(GraphFile::Undirected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_canonical() {
        let text = r#"{"directed": true, "vertices": ["a", "b", "c"],
                       "arcs": [["c", "a"], ["a", "b"], ["b", "c"]]}"#;
        let g = GraphFile::from_json_str(text).unwrap();
        let once = g.to_canonical_string();
        let twice = GraphFile::from_json_str(&once)
            .unwrap()
            .to_canonical_string();
        assert_eq!(once, twice);
        assert!(
            once.find("\"a\",\n      \"b\"").unwrap() < once.find("\"c\",\n      \"a\"").unwrap()
        );
    }

    #[test]
    fn json_errors_name_the_offender() {
        let anti = r#"{"directed": true, "vertices": ["x", "y"], "arcs": [["x","y"],["y","x"]]}"#;
        assert_eq!(
            GraphFile::from_json_str(anti),
            Err(Error::AntiParallel("x".into(), "y".into()))
        );
        let dup = r#"{"directed": false, "vertices": ["x", "x"], "arcs": []}"#;
        assert_eq!(
            GraphFile::from_json_str(dup),
            Err(Error::DuplicateVertex("x".into()))
        );
        let unknown = r#"{"directed": false, "vertices": ["x"], "arcs": [["x","z"]]}"#;
        assert_eq!(
            GraphFile::from_json_str(unknown),
            Err(Error::UnknownVertex("z".into()))
        );
    }

    #[test]
    fn edge_list() {
        let text = "# triangle\na b\nb c # trailing\n\nc a\nd\n";
        let GraphFile::Oriented(g) = parse_edge_list(text, true).unwrap() else {
            panic!("expected oriented")
        };
        assert_eq!(g.vertex_count(), 4);
        assert!(!g.is_strongly_connected());
        assert!(g.has_arc(2, 0));
        let GraphFile::Undirected(u) = parse_edge_list(text, false).unwrap() else {
            panic!("expected undirected")
        };
        assert_eq!(u.edge_count(), 3);
        assert!(parse_edge_list("a b c", true).is_err());
    }

    #[test]
    fn dot_export() {
        let g = GraphFile::Oriented(OrientedGraph::from_arcs(2, [(0, 1)]).unwrap());
        assert_eq!(
            g.to_dot(),
            "digraph G {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\";\n}\n"
        );
    }
}
