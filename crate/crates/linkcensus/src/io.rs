//! File formats: embeddings (with optional fixture metadata) and reports.
//!
//! Rationals serialize as strings `"p/q"` (or `"p"` for integers)
//! everywhere. An embedding file looks like:
//!
//! ```json
//! {
//!   "graph": "K331",
//!   "coords": { "1": ["0", "-3/2", "5"], "...": ["...", "...", "..."] },
//!   "metadata": { "name": "example", "expected_nontrivial_count": 1 }
//! }
//! ```
//!
//! `graph` is either a builtin name (`"K331"`, `"K33"`, `"K6"`) or an
//! explicit `{"vertices": [...], "edges": [[i, j], ...]}` object.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{BuiltinGraph, Graph, VertexId};
use crate::linking::census;
use crate::vec3::Vec3Q;

/// Graph field of an embedding file: builtin name or explicit lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphJson {
    Named(String),
    Custom {
        vertices: Vec<VertexId>,
        edges: Vec<[VertexId; 2]>,
    },
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        match self {
            GraphJson::Named(name) => match name.as_str() {
                "K331" => Ok(Graph::builtin(BuiltinGraph::K331)),
                "K33" => Ok(Graph::builtin(BuiltinGraph::K33)),
                "K6" => Ok(Graph::builtin(BuiltinGraph::K6)),
                other => Err(Error::Parse(format!("unknown builtin graph {other:?}"))),
            },
            GraphJson::Custom { vertices, edges } => {
                let pairs: Vec<(VertexId, VertexId)> =
                    edges.iter().map(|&[u, v]| (u, v)).collect();
                Graph::from_edges(vertices.clone(), &pairs)
            }
        }
    }

    pub fn from_graph(graph: &Graph) -> GraphJson {
        if graph.is_k331() {
            GraphJson::Named("K331".into())
        } else if graph.is_k33() {
            GraphJson::Named("K33".into())
        } else if graph.is_k6() {
            GraphJson::Named("K6".into())
        } else {
            GraphJson::Custom {
                vertices: graph.vertices().to_vec(),
                edges: graph.edges().map(|(u, v)| [u, v]).collect(),
            }
        }
    }
}

/// Optional expectations carried by fixture files, checked on verified
/// loads.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_nontrivial_count: Option<u32>,
    /// Apex-first triangle labels, e.g. `["752", "754"]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_linked_triangles: Option<Vec<String>>,
}

/// Wire form of an embedding file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub graph: GraphJson,
    pub coords: BTreeMap<String, Vec3Q>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

impl EmbeddingJson {
    pub fn from_embedding(emb: &Embedding, metadata: Option<Metadata>) -> EmbeddingJson {
        EmbeddingJson {
            graph: GraphJson::from_graph(emb.graph()),
            coords: emb
                .coords()
                .iter()
                .map(|(v, c)| (v.to_string(), c.clone()))
                .collect(),
            metadata,
        }
    }

    pub fn to_embedding(&self) -> Result<Embedding> {
        let graph = self.graph.to_graph()?;
        let mut coords = BTreeMap::new();
        for (key, value) in &self.coords {
            let v: VertexId = key
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex key {key:?}")))?;
            coords.insert(v, value.clone());
        }
        Embedding::new(graph, coords)
    }
}

/// An embedding plus its optional metadata, as read from or written to a
/// file.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingFile {
    pub embedding: Embedding,
    pub metadata: Option<Metadata>,
}

impl EmbeddingFile {
    pub fn new(embedding: Embedding, metadata: Option<Metadata>) -> EmbeddingFile {
        EmbeddingFile {
            embedding,
            metadata,
        }
    }

    pub fn from_json_str(text: &str) -> Result<EmbeddingFile> {
        let json: EmbeddingJson = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })?;
        Ok(EmbeddingFile {
            embedding: json.to_embedding()?,
            metadata: json.metadata,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<EmbeddingFile> {
        let text = std::fs::read_to_string(&path)?;
        EmbeddingFile::from_json_str(&text).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!(
                "{}: {msg}",
                path.as_ref().display()
            )),
            other => other,
        })
    }

    /// Loads and, when expectations are present, verifies them against a
    /// fresh census.
    pub fn load_verified(path: impl AsRef<Path>) -> Result<EmbeddingFile> {
        let file = EmbeddingFile::load(path)?;
        file.verify_expectations()?;
        Ok(file)
    }

    /// Checks the metadata expectations against a fresh census.
    pub fn verify_expectations(&self) -> Result<()> {
        let meta = match &self.metadata {
            Some(m) => m,
            None => return Ok(()),
        };
        if meta.expected_nontrivial_count.is_none() && meta.expected_linked_triangles.is_none() {
            return Ok(());
        }
        let report = census(&self.embedding)?;
        if let Some(want) = meta.expected_nontrivial_count {
            if report.nontrivial_count != want {
                return Err(Error::ExpectationMismatch(format!(
                    "{}: expected {want} nontrivial links, census found {}",
                    meta.name.as_deref().unwrap_or("embedding"),
                    report.nontrivial_count
                )));
            }
        }
        if let Some(want) = &meta.expected_linked_triangles {
            let mut want = want.clone();
            want.sort();
            let got = report.linked_triangles();
            if got != want {
                return Err(Error::ExpectationMismatch(format!(
                    "{}: expected linked triangles {want:?}, census found {got:?}",
                    meta.name.as_deref().unwrap_or("embedding")
                )));
            }
        }
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        let json = EmbeddingJson::from_embedding(&self.embedding, self.metadata.clone());
        serde_json::to_string_pretty(&json).expect("embedding serialization cannot fail")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json_string() + "\n")?;
        Ok(())
    }
}

/// Serializes any report type to pretty JSON and writes it.
pub fn save_report<T: Serialize>(report: &T, path: impl AsRef<Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| Error::Parse(format!("serialization failed: {e}")))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BuiltinGraph;

    fn sample_file() -> EmbeddingFile {
        let emb = Embedding::from_int_coords(
            Graph::builtin(BuiltinGraph::K331),
            &[
                (0, 0, 0),
                (4, 0, 0),
                (0, 4, 0),
                (0, 0, 4),
                (1, 1, 1),
                (2, 1, 3),
                (1, 3, 2),
            ],
        )
        .unwrap();
        EmbeddingFile::new(
            emb,
            Some(Metadata {
                name: Some("sample".into()),
                ..Metadata::default()
            }),
        )
    }

    #[test]
    fn round_trip_is_identity() {
        let file = sample_file();
        let text = file.to_json_string();
        let back = EmbeddingFile::from_json_str(&text).unwrap();
        assert_eq!(back, file);
    }

    #[test]
    fn malformed_rational_is_a_parse_error() {
        let text = r#"{"graph": "K331", "coords": {"1": ["1/0", "0", "0"]}}"#;
        assert!(matches!(
            EmbeddingFile::from_json_str(text),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn unknown_graph_name_rejected() {
        let text = r#"{"graph": "K5", "coords": {}}"#;
        assert!(matches!(
            EmbeddingFile::from_json_str(text),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn custom_graph_round_trips() {
        let g = Graph::from_edges(vec![1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let json = GraphJson::from_graph(&g);
        assert!(matches!(json, GraphJson::Custom { .. }));
        assert_eq!(json.to_graph().unwrap(), g);
    }

    #[test]
    fn reports_save_as_json() {
        let file = sample_file();
        let report = census(&file.embedding).unwrap();
        let path = std::env::temp_dir().join(format!("linkcensus-report-{}.json", std::process::id()));
        save_report(&report, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["entries"].as_array().unwrap().len(), 9);
        assert_eq!(value["nontrivial_count"], report.nontrivial_count);
        std::fs::remove_file(&path).ok();
    }
}
