//! Small labeled graphs, cycles, and the builtin graphs this crate studies.
//!
//! The tri-partite graph on 3+3+1 vertices is labeled `{1,...,7}` with
//! partition `{1,3,5} | {2,4,6} | {7}`; every pair of vertices from distinct
//! classes is an edge (15 edges, with vertex 7 adjacent to all others).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = u8;

/// Odd class of the bipartition used by the builtin graphs.
pub const ODD_CLASS: [VertexId; 3] = [1, 3, 5];
/// Even class of the bipartition used by the builtin graphs.
pub const EVEN_CLASS: [VertexId; 3] = [2, 4, 6];
/// The apex vertex of the builtin 3+3+1 graph.
pub const APEX: VertexId = 7;

/// Names of the builtin graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BuiltinGraph {
    /// Complete bipartite graph on `{1,3,5} | {2,4,6}`.
    K33,
    /// Complete graph on `{1,...,6}`.
    K6,
    /// Complete tri-partite graph on `{1,3,5} | {2,4,6} | {7}`.
    K331,
}

/// An undirected simple graph on small integer vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: BTreeSet<(VertexId, VertexId)>,
    partition: Option<Vec<Vec<VertexId>>>,
}

fn norm_edge(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph from an explicit vertex and edge list.
    pub fn from_edges(vertices: Vec<VertexId>, edge_list: &[(VertexId, VertexId)]) -> Result<Graph> {
        let vertex_set: BTreeSet<_> = vertices.iter().copied().collect();
        if vertex_set.len() != vertices.len() {
            return Err(Error::MalformedGraph("duplicate vertex id".into()));
        }
        let mut edges = BTreeSet::new();
        for &(u, v) in edge_list {
            if u == v {
                return Err(Error::MalformedGraph(format!("self-loop at vertex {u}")));
            }
            if !vertex_set.contains(&u) || !vertex_set.contains(&v) {
                return Err(Error::MalformedGraph(format!(
                    "edge ({u},{v}) uses an undeclared vertex"
                )));
            }
            if !edges.insert(norm_edge(u, v)) {
                return Err(Error::MalformedGraph(format!("duplicate edge ({u},{v})")));
            }
        }
        let mut vertices = vertices;
        vertices.sort_unstable();
        Ok(Graph {
            vertices,
            edges,
            partition: None,
        })
    }

    pub fn builtin(name: BuiltinGraph) -> Graph {
        match name {
            BuiltinGraph::K33 => {
                let mut edges = BTreeSet::new();
                for &a in &ODD_CLASS {
                    for &b in &EVEN_CLASS {
                        edges.insert(norm_edge(a, b));
                    }
                }
                Graph {
                    vertices: (1..=6).collect(),
                    edges,
                    partition: Some(vec![ODD_CLASS.to_vec(), EVEN_CLASS.to_vec()]),
                }
            }
            BuiltinGraph::K6 => {
                let mut edges = BTreeSet::new();
                for u in 1..=6 {
                    for v in u + 1..=6 {
                        edges.insert((u, v));
                    }
                }
                Graph {
                    vertices: (1..=6).collect(),
                    edges,
                    partition: None,
                }
            }
            BuiltinGraph::K331 => {
                let mut g = Graph::builtin(BuiltinGraph::K33);
                g.vertices.push(APEX);
                for v in 1..=6 {
                    g.edges.insert((v, APEX));
                }
                g.partition = Some(vec![ODD_CLASS.to_vec(), EVEN_CLASS.to_vec(), vec![APEX]]);
                g
            }
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&norm_edge(u, v))
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.vertices
            .iter()
            .copied()
            .filter(|&u| u != v && self.has_edge(u, v))
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn partition(&self) -> Option<&[Vec<VertexId>]> {
        self.partition.as_deref()
    }

    /// Structural check used by the census: vertices 1..=7 with the builtin
    /// tri-partite edge set.
    pub fn is_k331(&self) -> bool {
        *self == Graph::builtin(BuiltinGraph::K331)
    }

    pub fn is_k33(&self) -> bool {
        *self == Graph::builtin(BuiltinGraph::K33)
    }

    pub fn is_k6(&self) -> bool {
        *self == Graph::builtin(BuiltinGraph::K6)
    }
}

/// A simple cycle, stored in a canonical cyclic order.
///
/// Two vertex lists describing the same cyclic sequence up to rotation and
/// reversal construct equal values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<VertexId>,
}

impl Cycle {
    /// Validates the list against the graph: length >= 3, no repeats, every
    /// consecutive pair (including last-first) an edge.
    pub fn new(vertices: Vec<VertexId>, graph: &Graph) -> Result<Cycle> {
        if vertices.len() < 3 {
            return Err(Error::MalformedGraph("cycle shorter than 3".into()));
        }
        let distinct: BTreeSet<_> = vertices.iter().copied().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::MalformedGraph("repeated vertex in cycle".into()));
        }
        for i in 0..vertices.len() {
            let u = vertices[i];
            let v = vertices[(i + 1) % vertices.len()];
            if !graph.has_edge(u, v) {
                return Err(Error::MalformedGraph(format!(
                    "cycle step ({u},{v}) is not an edge"
                )));
            }
        }
        Ok(Cycle {
            vertices: canonical_cycle(&vertices),
        })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn is_disjoint_from(&self, other: &Cycle) -> bool {
        self.vertices.iter().all(|v| !other.contains(*v))
    }

    /// Consecutive vertex pairs in cyclic order, including the wrap-around.
    pub fn directed_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Concatenated vertex labels, e.g. `"752"`. Triangles through the apex
    /// are printed apex-first with the odd-class vertex next, matching the
    /// naming used throughout the reports.
    pub fn label(&self) -> String {
        if self.vertices.len() == 3 && self.contains(APEX) {
            let a = *self
                .vertices
                .iter()
                .find(|v| ODD_CLASS.contains(v))
                .unwrap_or(&self.vertices[0]);
            let b = *self
                .vertices
                .iter()
                .find(|v| EVEN_CLASS.contains(v))
                .unwrap_or(&self.vertices[1]);
            if ODD_CLASS.contains(&a) && EVEN_CLASS.contains(&b) {
                return format!("{APEX}{a}{b}");
            }
        }
        self.vertices.iter().map(|v| v.to_string()).collect()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Lexicographically smallest among all rotations of the list and of its
/// reversal.
fn canonical_cycle(vs: &[VertexId]) -> Vec<VertexId> {
    let n = vs.len();
    let mut best: Option<Vec<VertexId>> = None;
    let reversed: Vec<VertexId> = vs.iter().rev().copied().collect();
    for list in [vs, reversed.as_slice()] {
        for start in 0..n {
            let rotated: Vec<VertexId> = (0..n).map(|i| list[(start + i) % n]).collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap()
}

/// Enumerates every simple cycle of the graph, each exactly once, in a
/// deterministic order.
pub fn all_cycles(graph: &Graph) -> Vec<Cycle> {
    let mut cycles = Vec::new();
    let vertices = graph.vertices().to_vec();
    for &start in &vertices {
        let mut path = vec![start];
        dfs_cycles(graph, start, &mut path, &mut cycles);
    }
    cycles.sort();
    cycles.dedup();
    cycles
}

fn dfs_cycles(graph: &Graph, start: VertexId, path: &mut Vec<VertexId>, out: &mut Vec<Cycle>) {
    let last = *path.last().unwrap();
    for next in graph.neighbors(last) {
        if next == start && path.len() >= 3 {
            // Direction canonicalization: record each cycle once.
            if path[1] < *path.last().unwrap() {
                out.push(Cycle::new(path.clone(), graph).expect("dfs produces valid cycles"));
            }
        } else if next > start && !path.contains(&next) {
            path.push(next);
            dfs_cycles(graph, start, path, out);
            path.pop();
        }
    }
}

/// All unordered pairs of vertex-disjoint cycles, shorter cycle first,
/// sorted deterministically.
///
/// For the builtin 3+3+1 graph this is exactly the nine
/// (apex triangle, complementary quadrilateral) pairs; for the complete
/// graph on six vertices, the ten triangle-triangle pairs; for the
/// complete bipartite 3+3 graph, empty (two disjoint cycles would need
/// eight vertices).
pub fn disjoint_cycle_pairs(graph: &Graph) -> Vec<(Cycle, Cycle)> {
    let cycles = all_cycles(graph);
    let mut pairs = Vec::new();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if cycles[i].is_disjoint_from(&cycles[j]) {
                let (a, b) = (&cycles[i], &cycles[j]);
                if (a.len(), a.vertices()) <= (b.len(), b.vertices()) {
                    pairs.push((a.clone(), b.clone()));
                } else {
                    pairs.push((b.clone(), a.clone()));
                }
            }
        }
    }
    pairs.sort();
    pairs
}

/// A vertex relabeling of the builtin graphs that preserves the class
/// structure: it permutes `{1,3,5}` and `{2,4,6}` (possibly swapping the
/// two classes) and fixes the apex.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Relabeling {
    map: [VertexId; 8],
}

impl Relabeling {
    pub fn identity() -> Relabeling {
        Relabeling {
            map: [0, 1, 2, 3, 4, 5, 6, 7],
        }
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.map[v as usize]
    }

    pub fn is_identity(&self) -> bool {
        *self == Relabeling::identity()
    }

    pub fn map(&self) -> &[VertexId; 8] {
        &self.map
    }

    pub fn inverse(&self) -> Relabeling {
        let mut map = [0u8; 8];
        for v in 1..=7u8 {
            map[self.map[v as usize] as usize] = v;
        }
        Relabeling { map }
    }

    /// All 72 class-respecting relabelings: 6 permutations of each class,
    /// with or without swapping the classes.
    pub fn all() -> Vec<Relabeling> {
        fn perms3(base: [VertexId; 3]) -> Vec<[VertexId; 3]> {
            let [a, b, c] = base;
            vec![
                [a, b, c],
                [a, c, b],
                [b, a, c],
                [b, c, a],
                [c, a, b],
                [c, b, a],
            ]
        }
        let mut out = Vec::with_capacity(72);
        for swap in [false, true] {
            let odd_targets = if swap { EVEN_CLASS } else { ODD_CLASS };
            let even_targets = if swap { ODD_CLASS } else { EVEN_CLASS };
            for podd in perms3(odd_targets) {
                for peven in perms3(even_targets) {
                    let mut map = [0u8; 8];
                    map[APEX as usize] = APEX;
                    for (i, &src) in ODD_CLASS.iter().enumerate() {
                        map[src as usize] = podd[i];
                    }
                    for (i, &src) in EVEN_CLASS.iter().enumerate() {
                        map[src as usize] = peven[i];
                    }
                    out.push(Relabeling { map });
                }
            }
        }
        out
    }
}

impl fmt::Display for Relabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<String> = (1..=7u8)
            .filter(|&v| self.map[v as usize] != v)
            .map(|v| format!("{v}->{}", self.map[v as usize]))
            .collect();
        if moved.is_empty() {
            write!(f, "identity")
        } else {
            write!(f, "{}", moved.join(", "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k331_shape() {
        let g = Graph::builtin(BuiltinGraph::K331);
        assert_eq!(g.vertices(), &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(g.edge_count(), 15);
        for v in 1..=6 {
            assert!(g.has_edge(v, 7), "apex adjacent to {v}");
        }
        assert!(!g.has_edge(1, 3));
        assert!(!g.has_edge(2, 4));
    }

    #[test]
    fn k33_shape() {
        let g = Graph::builtin(BuiltinGraph::K33);
        assert_eq!(g.edge_count(), 9);
        for &a in &ODD_CLASS {
            for &b in &ODD_CLASS {
                assert!(!g.has_edge(a, b));
            }
        }
        for &a in &EVEN_CLASS {
            for &b in &EVEN_CLASS {
                assert!(!g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn k6_shape() {
        let g = Graph::builtin(BuiltinGraph::K6);
        assert_eq!(g.edge_count(), 15);
        for u in 1..=6 {
            for v in u + 1..=6 {
                assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn malformed_custom_graphs_rejected() {
        assert!(Graph::from_edges(vec![1, 2], &[(1, 1)]).is_err());
        assert!(Graph::from_edges(vec![1, 2], &[(1, 3)]).is_err());
        assert!(Graph::from_edges(vec![1, 2], &[(1, 2), (2, 1)]).is_err());
        assert!(Graph::from_edges(vec![1, 1], &[]).is_err());
    }

    #[test]
    fn cycle_equality_up_to_rotation_and_reversal() {
        let g = Graph::builtin(BuiltinGraph::K331);
        let a = Cycle::new(vec![7, 5, 2], &g).unwrap();
        let b = Cycle::new(vec![5, 2, 7], &g).unwrap();
        let c = Cycle::new(vec![2, 5, 7], &g).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
    }

    #[test]
    fn cycle_validation() {
        let g = Graph::builtin(BuiltinGraph::K33);
        assert!(Cycle::new(vec![1, 2, 3, 4], &g).is_ok());
        assert!(Cycle::new(vec![1, 3, 5], &g).is_err()); // not edges
        assert!(Cycle::new(vec![1, 2], &g).is_err()); // too short
        assert!(Cycle::new(vec![1, 2, 1, 4], &g).is_err()); // repeat
    }

    #[test]
    fn k331_has_nine_triangle_quadrilateral_pairs() {
        let pairs = disjoint_cycle_pairs(&Graph::builtin(BuiltinGraph::K331));
        assert_eq!(pairs.len(), 9);
        for (tri, quad) in &pairs {
            assert_eq!(tri.len(), 3);
            assert_eq!(quad.len(), 4);
            assert!(tri.contains(APEX));
            assert!(tri.is_disjoint_from(quad));
        }
        // Spot-check the pair for triangle 752: complementary quadrilateral
        // alternates between the classes as 1-4-3-6.
        let g = Graph::builtin(BuiltinGraph::K331);
        let tri = Cycle::new(vec![7, 5, 2], &g).unwrap();
        let quad = Cycle::new(vec![1, 4, 3, 6], &g).unwrap();
        assert!(pairs.iter().any(|(t, q)| *t == tri && *q == quad));
    }

    #[test]
    fn k6_has_ten_triangle_pairs() {
        let pairs = disjoint_cycle_pairs(&Graph::builtin(BuiltinGraph::K6));
        assert_eq!(pairs.len(), 10);
        for (a, b) in &pairs {
            assert_eq!(a.len(), 3);
            assert_eq!(b.len(), 3);
        }
    }

    #[test]
    fn k33_has_no_disjoint_cycle_pairs() {
        assert!(disjoint_cycle_pairs(&Graph::builtin(BuiltinGraph::K33)).is_empty());
    }

    #[test]
    fn relabelings_form_the_full_class_group() {
        let all = Relabeling::all();
        assert_eq!(all.len(), 72);
        let distinct: std::collections::BTreeSet<_> = all.iter().map(|r| *r.map()).collect();
        assert_eq!(distinct.len(), 72);
        let g = Graph::builtin(BuiltinGraph::K331);
        for r in &all {
            assert_eq!(r.apply(APEX), APEX);
            // Graph automorphism: edges map to edges.
            for (u, v) in g.edges() {
                assert!(g.has_edge(r.apply(u), r.apply(v)));
            }
            let inv = r.inverse();
            for v in 1..=7 {
                assert_eq!(inv.apply(r.apply(v)), v);
            }
        }
    }
}
