//! A straight-edge embedding: a graph plus exact coordinates per vertex.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::predicates::{general_position, ValidationReport};
use crate::vec3::Vec3Q;

/// A graph with a coordinate for every vertex, validated so that no four
/// vertices are coplanar. Edges are the straight segments between endpoint
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    graph: Graph,
    coords: BTreeMap<VertexId, Vec3Q>,
}

impl Embedding {
    /// Validates that every vertex has a coordinate and that the points are
    /// in general position.
    pub fn new(graph: Graph, coords: BTreeMap<VertexId, Vec3Q>) -> Result<Embedding> {
        for &v in graph.vertices() {
            if !coords.contains_key(&v) {
                return Err(Error::MalformedGraph(format!("missing coordinate for vertex {v}")));
            }
        }
        let emb = Embedding { graph, coords };
        let report = emb.general_position_report();
        if !report.is_ok() {
            let ids = emb.graph.vertices();
            let violations = report
                .violations
                .iter()
                .map(|q| [ids[q[0]], ids[q[1]], ids[q[2]], ids[q[3]]])
                .collect();
            return Err(Error::GeneralPosition(violations));
        }
        Ok(emb)
    }

    /// Skips validation. Used by tests that exercise degenerate-input error
    /// paths and by the sampler, which validates incrementally as it draws.
    pub fn new_unchecked(graph: Graph, coords: BTreeMap<VertexId, Vec3Q>) -> Embedding {
        Embedding { graph, coords }
    }

    /// Convenience constructor from integer coordinates listed in vertex-id
    /// order of `graph.vertices()`.
    pub fn from_int_coords(graph: Graph, points: &[(i64, i64, i64)]) -> Result<Embedding> {
        if points.len() != graph.vertices().len() {
            return Err(Error::MalformedGraph(format!(
                "expected {} points, got {}",
                graph.vertices().len(),
                points.len()
            )));
        }
        let coords = graph
            .vertices()
            .iter()
            .copied()
            .zip(points.iter().map(|&(x, y, z)| Vec3Q::from_ints(x, y, z)))
            .collect();
        Embedding::new(graph, coords)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coord(&self, v: VertexId) -> &Vec3Q {
        &self.coords[&v]
    }

    pub fn coords(&self) -> &BTreeMap<VertexId, Vec3Q> {
        &self.coords
    }

    /// General-position scan over the coordinates, in vertex-id order.
    pub fn general_position_report(&self) -> ValidationReport {
        let pts: Vec<Vec3Q> = self
            .graph
            .vertices()
            .iter()
            .map(|v| self.coords[v].clone())
            .collect();
        general_position(&pts)
    }

    /// Relabels vertices by `map[v]`, keeping each coordinate with its image
    /// vertex. `map` must be a permutation of the vertex set; index 0 unused.
    pub fn relabel(&self, map: &[VertexId; 8]) -> Embedding {
        let coords = self
            .coords
            .iter()
            .map(|(&v, c)| (map[v as usize], c.clone()))
            .collect();
        Embedding {
            graph: self.graph.clone(),
            coords,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BuiltinGraph;

    #[test]
    fn rejects_coplanar_coordinates() {
        let g = Graph::builtin(BuiltinGraph::K331);
        let pts = [
            (0, 0, 0),
            (1, 0, 0),
            (2, 0, 0), // collinear with the first two
            (0, 1, 0),
            (0, 0, 1),
            (1, 1, 1),
            (2, 3, 5),
        ];
        match Embedding::from_int_coords(g, &pts) {
            Err(Error::GeneralPosition(v)) => assert!(!v.is_empty()),
            other => panic!("expected general-position rejection, got {other:?}"),
        }
    }

    #[test]
    fn accepts_generic_coordinates() {
        let g = Graph::builtin(BuiltinGraph::K331);
        let pts = [
            (0, 0, 0),
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
            (1, 1, 1),
            (2, 1, 3),
            (1, 3, 2),
        ];
        let emb = Embedding::from_int_coords(g, &pts).unwrap();
        assert_eq!(emb.coord(1), &Vec3Q::from_ints(0, 0, 0));
        assert_eq!(emb.coord(7), &Vec3Q::from_ints(1, 3, 2));
    }

    #[test]
    fn missing_coordinate_rejected() {
        let g = Graph::builtin(BuiltinGraph::K33);
        let coords: BTreeMap<_, _> = (1..=5u8)
            .map(|v| (v, Vec3Q::from_ints(v as i64, (v * v) as i64, 1 + (v % 3) as i64)))
            .collect();
        assert!(Embedding::new(g, coords).is_err());
    }
}
