//! Corpora: exhaustive small-graph families plus named instances listed in
//! a manifest.
//!
//! A manifest is a JSON file:
//!
//! ```json
//! {
//!   "exhaustive": {"undirected": 6, "oriented": 4, "subdivision": 4, "tree": 5},
//!   "instances": [
//!     {"name": "K3", "generate": {"family": "complete", "n": 3}, "sha256": "…"},
//!     {"name": "paw", "graph": {"directed": false, "vertices": […], "arcs": […]}},
//!     {"name": "mine", "file": "mine.json", "sha256": "…"}
//!   ]
//! }
//! ```
//!
//! `sha256` is over the canonical JSON text of the instance and is checked
//! whenever present.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::generators::{connected_graphs, connected_oriented_graphs, generate, GeneratorSpec};
use crate::graph::{GraphFile, GraphJson, OrientedGraph, UndirectedGraph};

pub const CORPUS_ENV: &str = "ORIENTED_PURSUIT_CORPUS";
pub const MANIFEST_FILE: &str = "manifest.json";

const BUILTIN_MANIFEST: &str = include_str!("../../corpus/manifest.json");

/// Largest n of each exhaustively enumerated family; 0 disables it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ExhaustiveScope {
    /// Connected undirected graphs for the structural and cop-win checks.
    pub undirected: usize,
    /// Connected oriented graphs for the chain, retract and monotonicity
    /// checks.
    pub oriented: usize,
    /// Connected undirected graphs fed to the subdivision bound checks.
    pub subdivision: usize,
    /// Connected undirected graphs for the tree characterization at t = 2.
    pub tree: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source {
    File { file: String },
    Generate { generate: GeneratorSpec },
    Graph { graph: GraphJson },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    #[serde(flatten)]
    pub source: Source,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sha256: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(default)]
    pub exhaustive: ExhaustiveScope,
    #[serde(default)]
    pub instances: Vec<ManifestEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance<G> {
    pub name: String,
    pub graph: G,
}

impl<G> Instance<G> {
    pub fn new(name: impl Into<String>, graph: G) -> Self {
        Instance {
            name: name.into(),
            graph,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    pub scope: ExhaustiveScope,
    pub undirected: Vec<Instance<UndirectedGraph>>,
    pub oriented: Vec<Instance<OrientedGraph>>,
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

fn load_entry(entry: &ManifestEntry, base: Option<&Path>) -> Result<GraphFile> {
    let graph = match &entry.source {
        Source::Generate { generate: spec } => generate(spec)?,
        Source::Graph { graph } => graph.clone().into_graph()?,
        Source::File { file } => {
            let base = base.ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "instance `{}` names a file but the manifest has no directory",
                    entry.name
                ))
            })?;
            let text = std::fs::read_to_string(base.join(file))
                .map_err(|e| Error::Io(format!("{file}: {e}")))?;
            GraphFile::from_json_str(&text)?
        }
    };
    if let Some(expected) = &entry.sha256 {
        let actual = sha256_hex(&graph.to_canonical_string());
        if !actual.eq_ignore_ascii_case(expected) {
            return Err(Error::Parse(format!(
                "instance `{}`: sha256 {actual} does not match manifest {expected}",
                entry.name
            )));
        }
    }
    Ok(graph)
}

impl Corpus {
    pub fn empty() -> Self {
        Corpus::default()
    }

    /// Builds a corpus; `base` resolves `file` entries.
    pub fn from_manifest(manifest: &Manifest, base: Option<&Path>) -> Result<Self> {
        let mut corpus = Corpus {
            scope: manifest.exhaustive,
            ..Corpus::default()
        };
        for entry in &manifest.instances {
            match load_entry(entry, base)? {
                GraphFile::Undirected(g) => corpus.undirected.push(Instance::new(&entry.name, g)),
                GraphFile::Oriented(g) => corpus.oriented.push(Instance::new(&entry.name, g)),
            }
        }
        Ok(corpus)
    }

    /// Reads `manifest.json` from `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self> {
        Corpus::load_manifest(&dir.join(MANIFEST_FILE))
    }

    pub fn load_manifest(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Corpus::from_manifest(&Manifest::parse(&text)?, path.parent())
    }

    /// The corpus shipped with the crate.
    pub fn builtin() -> Result<Self> {
        Corpus::from_manifest(&Manifest::parse(BUILTIN_MANIFEST)?, None)
    }

    pub fn builtin_manifest() -> &'static str {
        BUILTIN_MANIFEST
    }

    /// The directory named by `ORIENTED_PURSUIT_CORPUS` if set, else the
    /// built-in corpus.
    pub fn default_corpus() -> Result<Self> {
        match std::env::var_os(CORPUS_ENV) {
            Some(dir) if !dir.is_empty() => Corpus::load_dir(&PathBuf::from(dir)),
            _ => Corpus::builtin(),
        }
    }

    /// Connected oriented graphs with 2..=`scope.oriented` vertices, then
    /// the named oriented instances.
    pub fn oriented_instances(&self) -> Result<Vec<Instance<OrientedGraph>>> {
        let mut out = Vec::new();
        for n in 2..=self.scope.oriented {
            for (i, g) in connected_oriented_graphs(n)?.into_iter().enumerate() {
                out.push(Instance::new(format!("oriented-n{n}-{i}"), g));
            }
        }
        out.extend(self.oriented.iter().cloned());
        Ok(out)
    }

    /// Connected undirected graphs with 2..=`max_n` vertices, then the named
    /// undirected instances.
    pub fn undirected_instances(&self, max_n: usize) -> Result<Vec<Instance<UndirectedGraph>>> {
        let mut out = exhaustive_undirected(max_n)?;
        out.extend(self.undirected.iter().cloned());
        Ok(out)
    }
}

pub fn exhaustive_undirected(max_n: usize) -> Result<Vec<Instance<UndirectedGraph>>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for (i, g) in connected_graphs(n)?.into_iter().enumerate() {
            out.push(Instance::new(format!("undirected-n{n}-{i}"), g));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_manifest_loads_and_hashes_match() {
        let c = Corpus::builtin().unwrap();
        assert_eq!(c.scope.undirected, 6);
        assert!(c.undirected.iter().any(|i| i.name == "paw"));
        assert!(c.oriented.iter().any(|i| i.name == "directed-C3"));
    }

    #[test]
    fn hash_mismatch_is_rejected() {
        let text =
            r#"{"instances":[{"name":"K3","generate":{"family":"complete","n":3},"sha256":"00"}]}"#;
        let err = Corpus::from_manifest(&Manifest::parse(text).unwrap(), None).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn file_entries_need_a_directory() {
        let text = r#"{"instances":[{"name":"x","file":"x.json"}]}"#;
        assert!(Corpus::from_manifest(&Manifest::parse(text).unwrap(), None).is_err());
    }

    #[test]
    fn empty_manifest() {
        let c = Corpus::from_manifest(&Manifest::parse("{}").unwrap(), None).unwrap();
        assert_eq!(c, Corpus::empty());
        assert!(c.oriented_instances().unwrap().is_empty());
    }
}
