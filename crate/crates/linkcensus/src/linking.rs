//! Linking numbers of disjoint straight-edge cycles, computed two
//! independent ways, and the per-embedding census of all nine
//! (apex triangle, complementary quadrilateral) links.
//!
//! All reported linking numbers are absolute values. A 7-edge link with
//! linking number zero is a trivial link, so the census classifies each pair
//! purely by its linking number: 0 = trivial, 1 = Hopf, 2 = (2,4)-torus.

use serde::{Deserialize, Serialize};

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{disjoint_cycle_pairs, Cycle, VertexId};
use crate::predicates::{orient3d, projected_orientation, segment_pierces_triangle, PierceResult};
use crate::rational::Sign;
use crate::vec3::Vec3Q;

/// Fixed projection directions tried in order by the signed-crossing count.
/// The first direction that projects the two cycles without coincident
/// vertices or collinear point triples is used; the schedule is part of the
/// output contract (same input, same direction, same diagram).
pub const DIRECTION_SCHEDULE: [(i64, i64, i64); 16] = [
    (0, 0, 1),
    (0, 1, 1),
    (1, 1, 1),
    (1, 2, 3),
    (3, 1, 2),
    (2, 3, 1),
    (1, 3, 2),
    (2, 1, 3),
    (3, 2, 1),
    (1, 1, 2),
    (1, 2, 1),
    (2, 1, 1),
    (1, 0, 2),
    (0, 2, 1),
    (2, 0, 1),
    (5, 7, 11),
];

/// Isotopy class of a 2-component link made of a triangle and a
/// quadrilateral, determined by the absolute linking number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LinkType {
    Trivial,
    Hopf,
    Torus24,
}

/// Classifies a triangle-quadrilateral link by its absolute linking number.
///
/// Valid only for seven total edges: linking number zero implies the trivial
/// link there, and 1 and 2 are realized exactly by the Hopf link and the
/// (2,4)-torus link. Anything else is outside this classification and is an
/// error.
pub fn classify_link(linking_number: u32, total_edges: usize) -> Result<LinkType> {
    if total_edges != 7 {
        return Err(Error::UnsupportedLink(format!(
            "classification requires 7 total edges, got {total_edges}"
        )));
    }
    match linking_number {
        0 => Ok(LinkType::Trivial),
        1 => Ok(LinkType::Hopf),
        2 => Ok(LinkType::Torus24),
        lk => Err(Error::UnsupportedLink(format!(
            "linking number {lk} is not realizable by a 7-edge link"
        ))),
    }
}

/// Absolute linking number via signed piercings of the triangle's flat disk.
///
/// Each directed edge of `other` that crosses the open disk of `tri`
/// contributes the side sign of its tail; the absolute value of the total is
/// the linking number.
pub fn linking_number_disk(tri: &Cycle, other: &Cycle, emb: &Embedding) -> Result<u32> {
    assert_eq!(tri.len(), 3, "disk method needs a triangle");
    assert!(tri.is_disjoint_from(other), "cycles must be vertex-disjoint");
    let tv = tri.vertices();
    let (a, b, c) = (emb.coord(tv[0]), emb.coord(tv[1]), emb.coord(tv[2]));
    let mut total: i64 = 0;
    for (tail, head) in other.directed_edges() {
        match segment_pierces_triangle(emb.coord(tail), emb.coord(head), a, b, c)? {
            PierceResult::Pierce(sign) => total += sign.as_i8() as i64,
            PierceResult::Miss => {}
        }
    }
    Ok(total.unsigned_abs() as u32)
}

/// Absolute linking number via signed crossings of a generic projection.
///
/// Projects both cycles along the first generic direction of
/// [`DIRECTION_SCHEDULE`], sums crossing signs between the two components,
/// and halves the absolute value. Independent of the disk method; the two
/// must agree on every valid input.
pub fn linking_number_gauss(c1: &Cycle, c2: &Cycle, emb: &Embedding) -> Result<u32> {
    assert!(c1.is_disjoint_from(c2), "cycles must be vertex-disjoint");
    let vertices: Vec<VertexId> = c1
        .vertices()
        .iter()
        .chain(c2.vertices().iter())
        .copied()
        .collect();
    let dir = generic_direction(&vertices, emb)?;

    let mut total: i64 = 0;
    for (a0, a1) in c1.directed_edges() {
        for (b0, b1) in c2.directed_edges() {
            total += crossing_sign(
                emb.coord(a0),
                emb.coord(a1),
                emb.coord(b0),
                emb.coord(b1),
                &dir,
            )?;
        }
    }
    debug_assert!(total % 2 == 0, "signed inter-component crossings come in pairs");
    Ok((total.unsigned_abs() / 2) as u32)
}

/// First schedule direction that projects the given vertices generically:
/// no two projected points coincide and no three are collinear (which also
/// rules out a projected vertex interior to a projected edge).
fn generic_direction(vertices: &[VertexId], emb: &Embedding) -> Result<Vec3Q> {
    'dirs: for &(x, y, z) in DIRECTION_SCHEDULE.iter() {
        let dir = Vec3Q::from_ints(x, y, z);
        for (i, &u) in vertices.iter().enumerate() {
            for &v in vertices.iter().skip(i + 1) {
                if emb.coord(u).sub(emb.coord(v)).is_parallel(&dir) {
                    continue 'dirs;
                }
            }
        }
        for i in 0..vertices.len() {
            for j in i + 1..vertices.len() {
                for k in j + 1..vertices.len() {
                    let p = emb.coord(vertices[i]);
                    let q = emb.coord(vertices[j]);
                    let r = emb.coord(vertices[k]);
                    if projected_orientation(p, q, r, &dir).is_zero() {
                        continue 'dirs;
                    }
                }
            }
        }
        return Ok(dir);
    }
    Err(Error::NoGenericDirection)
}

/// Signed crossing contribution of edge pair (a0->a1, b0->b1) under
/// projection along `dir`: 0 if the projected segments do not properly
/// cross, else +/-1 by diagram orientation and which strand passes nearer
/// the viewer.
fn crossing_sign(a0: &Vec3Q, a1: &Vec3Q, b0: &Vec3Q, b1: &Vec3Q, dir: &Vec3Q) -> Result<i64> {
    // Side of r relative to the projected line pq, oriented by dir.
    let side = |p: &Vec3Q, q: &Vec3Q, r: &Vec3Q| projected_orientation(p, q, r, dir);

    let sb0 = side(a0, a1, b0);
    let sb1 = side(a0, a1, b1);
    if sb0.is_zero() || sb1.is_zero() || sb0 == sb1 {
        return Ok(0);
    }
    let sa0 = side(b0, b1, a0);
    let sa1 = side(b0, b1, a1);
    if sa0.is_zero() || sa1.is_zero() || sa0 == sa1 {
        return Ok(0);
    }

    // Heights along dir at the common projected point, exact.
    let da = a1.sub(a0);
    let db = b1.sub(b0);
    let denom = da.cross(&db).dot(dir);
    debug_assert!(!denom.is_zero(), "proper crossing implies non-parallel projections");
    let diff = b0.sub(a0);
    let t = &diff.cross(&db).dot(dir) / &denom; // parameter on a
    let u = &diff.cross(&da).dot(dir) / &denom; // parameter on b
    let pa = a0.add(&da.scale(&t));
    let pb = b0.add(&db.scale(&u));
    let ha = pa.dot(dir);
    let hb = pb.dot(dir);
    let over_first = match ha.cmp(&hb) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => {
            return Err(Error::DegenerateInput(
                "projected edges meet at equal height: segments intersect".into(),
            ))
        }
    };

    // Crossing sign: +1 when the under-strand direction is the over-strand
    // direction rotated counterclockwise (as seen looking against dir).
    let orient = da.cross(&db).dot_sign(dir);
    let sign = if over_first { orient } else { -orient };
    Ok(sign.as_i8() as i64)
}

/// One (triangle, quadrilateral) pair of the census with its linking data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkEntry {
    pub triangle: Cycle,
    pub quadrilateral: Cycle,
    pub linking_number: u32,
    pub link_type: LinkType,
}

impl LinkEntry {
    pub fn is_nontrivial(&self) -> bool {
        self.linking_number > 0
    }

    /// Apex-first triangle label, e.g. `"752"`.
    pub fn triangle_label(&self) -> String {
        self.triangle.label()
    }
}

/// Census over all nine apex-triangle links of a 3+3+1 embedding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub entries: Vec<LinkEntry>,
    pub nontrivial_count: u32,
    pub total_linking: u32,
    pub torus24_count: u32,
}

impl CensusReport {
    /// Labels of the linked (nontrivial) triangles, sorted.
    pub fn linked_triangles(&self) -> Vec<String> {
        let mut labels: Vec<String> = self
            .entries
            .iter()
            .filter(|e| e.is_nontrivial())
            .map(|e| e.triangle_label())
            .collect();
        labels.sort();
        labels
    }
}

/// A falsified census invariant, carrying everything needed to reproduce it.
///
/// Constructing one of these from a genuine straight-edge embedding would be
/// a counterexample to published theorems; the sweep harness treats any
/// occurrence as a reportable artifact, never a panic.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremViolation {
    pub failures: Vec<String>,
    pub linking_numbers: Vec<(String, u32)>,
    pub embedding: crate::io::EmbeddingJson,
}

impl std::fmt::Display for TheoremViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.failures.join("; "))
    }
}

/// Runs the nine-pair link census of a 3+3+1 embedding.
///
/// Linking numbers come from the disk method; types from `classify_link`.
/// Violations of the census invariants (odd total linking, at most one
/// torus link, nontrivial count in 1..=5, torus present exactly when the
/// count is even) are returned as a `TheoremViolation` error value.
pub fn census(emb: &Embedding) -> Result<CensusReport> {
    if !emb.graph().is_k331() {
        return Err(Error::MalformedGraph(
            "census requires the builtin 3+3+1 graph".into(),
        ));
    }
    let pairs = disjoint_cycle_pairs(emb.graph());
    debug_assert_eq!(pairs.len(), 9);

    let mut raw: Vec<(Cycle, Cycle, u32)> = Vec::with_capacity(9);
    for (tri, quad) in pairs {
        let lk = linking_number_disk(&tri, &quad, emb)?;
        raw.push((tri, quad, lk));
    }

    let mut entries = Vec::with_capacity(9);
    let mut failures = Vec::new();
    for (tri, quad, lk) in &raw {
        match classify_link(*lk, tri.len() + quad.len()) {
            Ok(link_type) => entries.push(LinkEntry {
                triangle: tri.clone(),
                quadrilateral: quad.clone(),
                linking_number: *lk,
                link_type,
            }),
            Err(e) => failures.push(format!("pair ({tri}, {quad}): {e}")),
        }
    }

    let nontrivial_count = entries.iter().filter(|e| e.is_nontrivial()).count() as u32;
    let total_linking: u32 = entries.iter().map(|e| e.linking_number).sum();
    let torus24_count = entries
        .iter()
        .filter(|e| e.link_type == LinkType::Torus24)
        .count() as u32;

    if failures.is_empty() {
        if total_linking.is_multiple_of(2) {
            failures.push(format!("total linking {total_linking} is even"));
        }
        if torus24_count > 1 {
            failures.push(format!("{torus24_count} links with linking number 2"));
        }
        if !(1..=5).contains(&nontrivial_count) {
            failures.push(format!("nontrivial count {nontrivial_count} outside 1..=5"));
        }
        let expect_torus = u32::from(nontrivial_count.is_multiple_of(2));
        if torus24_count != expect_torus {
            failures.push(format!(
                "nontrivial count {nontrivial_count} with {torus24_count} torus links"
            ));
        }
    }

    if !failures.is_empty() {
        return Err(Error::TheoremViolation(Box::new(TheoremViolation {
            failures,
            linking_numbers: raw
                .iter()
                .map(|(t, _, lk)| (t.label(), *lk))
                .collect(),
            embedding: crate::io::EmbeddingJson::from_embedding(emb, None),
        })));
    }

    Ok(CensusReport {
        entries,
        nontrivial_count,
        total_linking,
        torus24_count,
    })
}

/// Nontrivial triangle-triangle link count of a complete-graph-on-six
/// embedding, with both linking routes cross-checked on every pair.
pub fn k6_nontrivial_count(emb: &Embedding) -> Result<u32> {
    if !emb.graph().is_k6() {
        return Err(Error::MalformedGraph(
            "expected the complete graph on six vertices".into(),
        ));
    }
    let pairs = disjoint_cycle_pairs(emb.graph());
    debug_assert_eq!(pairs.len(), 10);
    let mut nontrivial = 0;
    for (t1, t2) in &pairs {
        let g = linking_number_gauss(t1, t2, emb)?;
        let d1 = linking_number_disk(t1, t2, emb)?;
        let d2 = linking_number_disk(t2, t1, emb)?;
        if g != d1 || g != d2 {
            return Err(Error::DegenerateInput(format!(
                "linking routes disagree on pair ({t1}, {t2}): gauss {g}, disks {d1}/{d2}"
            )));
        }
        if g > 0 {
            nontrivial += 1;
        }
    }
    Ok(nontrivial)
}

/// Signed tail-side of a piercing as used by the disk method, exposed for
/// the circuit-census correspondence.
pub fn piercing_sign(tri: &[VertexId; 3], tail: VertexId, emb: &Embedding) -> Sign {
    orient3d(
        emb.coord(tri[0]),
        emb.coord(tri[1]),
        emb.coord(tri[2]),
        emb.coord(tail),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BuiltinGraph, Graph};

    /// Triangle in the xy-plane plus a quadrilateral with exactly one edge
    /// through its disk: a Hopf configuration.
    fn hopf_configuration() -> (Cycle, Cycle, Embedding) {
        let g = Graph::builtin(BuiltinGraph::K331);
        // Triangle 7-1-2 carries the flat disk; quadrilateral 3-4-5-6 pierces
        // it once with edge 3->4.
        let coords = [
            (1, (0, 0, 0)),
            (2, (4, 0, 0)),
            (7, (0, 4, 0)),
            (3, (1, 1, -1)),
            (4, (1, 1, 1)),
            (5, (6, 6, 1)),
            (6, (6, 6, -1)),
        ];
        let coords = coords
            .iter()
            .map(|&(v, (x, y, z))| (v as u8, Vec3Q::from_ints(x, y, z)))
            .collect();
        let emb = Embedding::new_unchecked(g.clone(), coords);
        let tri = Cycle::new(vec![7, 1, 2], &g).unwrap();
        let quad = Cycle::new(vec![3, 4, 5, 6], &g).unwrap();
        (tri, quad, emb)
    }

    #[test]
    fn disk_method_counts_single_piercing() {
        let (tri, quad, emb) = hopf_configuration();
        assert_eq!(linking_number_disk(&tri, &quad, &emb).unwrap(), 1);
    }

    #[test]
    fn disk_method_zero_for_split_configuration() {
        let g = Graph::builtin(BuiltinGraph::K331);
        let coords = [
            (1, (0, 0, 0)),
            (2, (4, 0, 0)),
            (7, (0, 4, 0)),
            (3, (1, 1, 2)),
            (4, (1, 2, 3)),
            (5, (3, 1, 2)),
            (6, (2, 2, 5)),
        ];
        let coords = coords
            .iter()
            .map(|&(v, (x, y, z))| (v as u8, Vec3Q::from_ints(x, y, z)))
            .collect();
        let emb = Embedding::new_unchecked(g.clone(), coords);
        let tri = Cycle::new(vec![7, 1, 2], &g).unwrap();
        let quad = Cycle::new(vec![3, 4, 5, 6], &g).unwrap();
        assert_eq!(linking_number_disk(&tri, &quad, &emb).unwrap(), 0);
    }

    #[test]
    fn gauss_method_agrees_on_hopf_configuration() {
        let (tri, quad, emb) = hopf_configuration();
        assert_eq!(linking_number_gauss(&tri, &quad, &emb).unwrap(), 1);
        assert_eq!(linking_number_gauss(&quad, &tri, &emb).unwrap(), 1);
    }

    #[test]
    fn classification_table() {
        assert_eq!(classify_link(0, 7).unwrap(), LinkType::Trivial);
        assert_eq!(classify_link(1, 7).unwrap(), LinkType::Hopf);
        assert_eq!(classify_link(2, 7).unwrap(), LinkType::Torus24);
        assert!(classify_link(3, 7).is_err());
        assert!(classify_link(0, 6).is_err());
    }

    #[test]
    fn disk_method_invariant_under_cycle_presentation() {
        let (tri, quad, emb) = hopf_configuration();
        let g = emb.graph().clone();
        let lk = linking_number_disk(&tri, &quad, &emb).unwrap();
        for rot in [vec![4, 5, 6, 3], vec![6, 5, 4, 3], vec![5, 6, 3, 4]] {
            let quad2 = Cycle::new(rot, &g).unwrap();
            assert_eq!(quad2, quad);
            assert_eq!(linking_number_disk(&tri, &quad2, &emb).unwrap(), lk);
        }
    }
}
