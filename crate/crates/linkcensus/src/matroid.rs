//! The rank-4 oriented matroid of a seven-point configuration: chirotope,
//! signed circuits via Radon partitions, the weak-elimination axiom, and
//! the correspondence between circuits and the piercing/containment
//! predicates that drive the link census.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::embedding::Embedding;
use crate::error::{Error, Result};
use crate::graph::{disjoint_cycle_pairs, VertexId, EVEN_CLASS, ODD_CLASS};
use crate::linking::linking_number_disk;
use crate::predicates::{orient3d, point_in_tetrahedron, segment_pierces_triangle, PierceResult};
use crate::rational::{Rational, Sign};
use crate::vec3::Vec3Q;

/// The alternating sign map on ordered 4-tuples of a point configuration.
#[derive(Clone, Debug)]
pub struct Chirotope {
    ground_set: Vec<VertexId>,
    /// Signs of the sorted 4-subsets, indexed positionally.
    base_signs: BTreeMap<[VertexId; 4], Sign>,
}

impl Chirotope {
    pub fn ground_set(&self) -> &[VertexId] {
        &self.ground_set
    }

    /// Sign of an arbitrary ordered 4-tuple of distinct elements, derived
    /// from the stored sorted-tuple sign and the permutation parity.
    pub fn sign(&self, tuple: [VertexId; 4]) -> Sign {
        let mut sorted = tuple;
        sorted.sort_unstable();
        let base = self.base_signs[&sorted];
        base * permutation_parity(&tuple)
    }

    /// True when no 4-tuple of distinct elements maps to zero.
    pub fn is_zero_free(&self) -> bool {
        self.base_signs.values().all(|s| !s.is_zero())
    }
}

/// Parity of the permutation that sorts the tuple: `Positive` for even.
fn permutation_parity(tuple: &[VertexId; 4]) -> Sign {
    let mut inversions = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if tuple[i] > tuple[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Extracts the chirotope of the embedded points: the sign of every ordered
/// 4-tuple is the orientation of those four coordinates.
pub fn chirotope(emb: &Embedding) -> Result<Chirotope> {
    let ids = emb.graph().vertices().to_vec();
    let n = ids.len();
    let mut base_signs = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let tuple = [ids[i], ids[j], ids[k], ids[l]];
                    let s = orient3d(
                        emb.coord(tuple[0]),
                        emb.coord(tuple[1]),
                        emb.coord(tuple[2]),
                        emb.coord(tuple[3]),
                    );
                    if s.is_zero() {
                        return Err(Error::DegenerateInput(format!(
                            "coplanar quadruple {tuple:?}"
                        )));
                    }
                    base_signs.insert(tuple, s);
                }
            }
        }
    }
    Ok(Chirotope {
        ground_set: ids,
        base_signs,
    })
}

/// A signed circuit: the minimal signed affine dependency on a 5-subset.
///
/// Stored canonically: the smallest element of the support lies in the
/// positive part. The support always splits 3/2 (a pierced triangle) or 4/1
/// (a point inside a tetrahedron) in general position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SignedCircuit {
    pub pos: BTreeSet<VertexId>,
    pub neg: BTreeSet<VertexId>,
}

impl SignedCircuit {
    pub fn negated(&self) -> SignedCircuit {
        SignedCircuit {
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    pub fn support(&self) -> BTreeSet<VertexId> {
        self.pos.union(&self.neg).copied().collect()
    }

    /// Split sizes as (larger, smaller).
    pub fn split(&self) -> (usize, usize) {
        let (a, b) = (self.pos.len(), self.neg.len());
        (a.max(b), a.min(b))
    }

    fn mask(set: &BTreeSet<VertexId>) -> u8 {
        set.iter().fold(0u8, |m, &v| m | (1 << v))
    }

    pub fn pos_mask(&self) -> u8 {
        Self::mask(&self.pos)
    }

    pub fn neg_mask(&self) -> u8 {
        Self::mask(&self.neg)
    }

    /// Compact pair notation with the positive part first, e.g.
    /// `(712, 34)`.
    pub fn label(&self) -> String {
        let fmt = |set: &BTreeSet<VertexId>| -> String {
            let mut ids: Vec<VertexId> = set.iter().copied().collect();
            // Print the apex first within a part, matching triangle labels.
            ids.sort_by_key(|&v| (v != crate::graph::APEX, v));
            ids.iter().map(|v| v.to_string()).collect()
        };
        format!("({}, {})", fmt(&self.pos), fmt(&self.neg))
    }
}

impl std::fmt::Display for SignedCircuit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Exact affine-dependency coefficients of five points: the unique (up to
/// scale) rationals with `sum(l) = 0` and `sum(l * p) = 0`, normalized so
/// the coefficient of the first point is positive.
pub fn radon_coefficients(ids: &[VertexId; 5], emb: &Embedding) -> Result<Vec<Rational>> {
    let pts: Vec<&Vec3Q> = ids.iter().map(|&v| emb.coord(v)).collect();
    let mut coeffs = Vec::with_capacity(5);
    for m in 0..5 {
        let others: Vec<&Vec3Q> = (0..5).filter(|&i| i != m).map(|i| pts[i]).collect();
        let det = det3_of_differences(others[0], others[1], others[2], others[3]);
        let signed = if m % 2 == 0 { det } else { -det };
        if signed.is_zero() {
            return Err(Error::DegenerateInput(format!(
                "coplanar quadruple within {ids:?}"
            )));
        }
        coeffs.push(signed);
    }
    if coeffs[0].sign() == Sign::Negative {
        for c in &mut coeffs {
            *c = -c.clone();
        }
    }
    Ok(coeffs)
}

/// Exact determinant `det [b-a, c-a, d-a]` as a rational value.
fn det3_of_differences(a: &Vec3Q, b: &Vec3Q, c: &Vec3Q, d: &Vec3Q) -> Rational {
    let u = b.sub(a);
    let v = c.sub(a);
    let w = d.sub(a);
    u.dot(&v.cross(&w))
}

/// The signed Radon partition of five points: positive part where the
/// dependency coefficient is positive, negative part where negative,
/// canonicalized so the smallest element is positive.
///
/// Only coefficient signs are needed, so this runs on the orientation
/// predicate directly; [`radon_coefficients`] computes the exact values and
/// must agree sign-for-sign.
pub fn radon_circuit(ids: &[VertexId; 5], emb: &Embedding) -> Result<SignedCircuit> {
    let mut sorted = *ids;
    sorted.sort_unstable();
    let pts: Vec<&Vec3Q> = sorted.iter().map(|&v| emb.coord(v)).collect();
    let mut signs = [Sign::Zero; 5];
    for (m, sign) in signs.iter_mut().enumerate() {
        let o: Vec<&Vec3Q> = (0..5).filter(|&i| i != m).map(|i| pts[i]).collect();
        let s = orient3d(o[0], o[1], o[2], o[3]);
        if s.is_zero() {
            return Err(Error::DegenerateInput(format!(
                "coplanar quadruple within {sorted:?}"
            )));
        }
        *sign = if m % 2 == 0 { s } else { -s };
    }
    if signs[0] == Sign::Negative {
        for s in &mut signs {
            *s = -*s;
        }
    }
    let mut pos = BTreeSet::new();
    let mut neg = BTreeSet::new();
    for (i, s) in signs.iter().enumerate() {
        if *s == Sign::Positive {
            pos.insert(sorted[i]);
        } else {
            neg.insert(sorted[i]);
        }
    }
    Ok(SignedCircuit { pos, neg })
}

/// One canonical circuit per 5-subset of the embedded points: C(7,5) = 21
/// for the seven-vertex configurations this crate studies.
pub fn all_circuits(emb: &Embedding) -> Result<Vec<SignedCircuit>> {
    let ids = emb.graph().vertices();
    let n = ids.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let subset = [ids[a], ids[b], ids[c], ids[d], ids[e]];
                        out.push(radon_circuit(&subset, emb)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Extends a canonical circuit list with the negation of each circuit.
pub fn close_under_negation(circuits: &[SignedCircuit]) -> Vec<SignedCircuit> {
    let mut out: Vec<SignedCircuit> = circuits.to_vec();
    out.extend(circuits.iter().map(SignedCircuit::negated));
    out
}

/// One checked instance of the weak-elimination axiom.
#[derive(Clone, Debug, Serialize)]
pub struct EliminationWitness {
    pub c1: SignedCircuit,
    pub c2: SignedCircuit,
    pub eliminated: VertexId,
    pub c3: SignedCircuit,
}

/// Outcome of checking weak elimination over a negation-closed circuit
/// list.
#[derive(Clone, Debug, Default, Serialize)]
pub struct WitnessReport {
    pub instances: u64,
    pub witnesses: Vec<EliminationWitness>,
    /// Instances with no eliminating circuit. Nonempty would falsify
    /// realizability of the configuration the circuits came from.
    pub failures: Vec<(SignedCircuit, SignedCircuit, VertexId)>,
}

impl WitnessReport {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies the weak-elimination axiom: for every pair of circuits
/// `C1 != -C2` and every `e` positive in `C1` and negative in `C2`, some
/// circuit `C3` has its positive part inside `(C1+ u C2+) - e` and its
/// negative part inside `(C1- u C2-) - e`.
///
/// `circuits` must be closed under negation (see [`close_under_negation`]).
pub fn verify_weak_elimination(circuits: &[SignedCircuit]) -> WitnessReport {
    let mut report = WitnessReport::default();
    for c1 in circuits {
        for c2 in circuits {
            if c1.pos == c2.neg && c1.neg == c2.pos {
                continue; // C1 == -C2
            }
            for &e in c1.pos.intersection(&c2.neg) {
                report.instances += 1;
                let e_bit = 1u8 << e;
                let pos_bound = (c1.pos_mask() | c2.pos_mask()) & !e_bit;
                let neg_bound = (c1.neg_mask() | c2.neg_mask()) & !e_bit;
                let c3 = circuits.iter().find(|c| {
                    c.pos_mask() & !pos_bound == 0 && c.neg_mask() & !neg_bound == 0
                });
                match c3 {
                    Some(c3) => report.witnesses.push(EliminationWitness {
                        c1: c1.clone(),
                        c2: c2.clone(),
                        eliminated: e,
                        c3: c3.clone(),
                    }),
                    None => report.failures.push((c1.clone(), c2.clone(), e)),
                }
            }
        }
    }
    report
}

/// Full report of the circuit-geometry correspondence on one embedding.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CorrespondenceReport {
    pub subsets_checked: usize,
    /// Per apex triangle: label, linking number from the disk method, and
    /// the absolute signed piercing count recovered from circuits.
    pub linking_from_circuits: Vec<(String, u32, u32)>,
    pub mismatches: Vec<String>,
}

impl CorrespondenceReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks that circuits say exactly what the geometric predicates say:
/// a 3/2 circuit's triangle part is pierced by its segment part, a 4/1
/// circuit's singleton lies inside its tetrahedron part, and the absolute
/// signed count of complementary-quadrilateral edges piercing each apex
/// triangle (read off circuits plus chirotope signs) equals the disk-method
/// linking number.
pub fn circuit_geometry_correspondence(emb: &Embedding) -> Result<CorrespondenceReport> {
    if !emb.graph().is_k331() {
        return Err(Error::MalformedGraph(
            "correspondence requires the builtin 3+3+1 graph".into(),
        ));
    }
    let mut report = CorrespondenceReport::default();
    let ids = emb.graph().vertices();
    let n = ids.len();

    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for e in d + 1..n {
                        let subset = [ids[a], ids[b], ids[c], ids[d], ids[e]];
                        let circuit = radon_circuit(&subset, emb)?;
                        report.subsets_checked += 1;
                        check_subset(&circuit, emb, &mut report.mismatches)?;
                    }
                }
            }
        }
    }

    // Tie circuits to the census: for each apex triangle, recover the
    // linking number from circuit data alone.
    let chi = chirotope(emb)?;
    for (tri, quad) in disjoint_cycle_pairs(emb.graph()) {
        let tv = tri.vertices();
        let apex = crate::graph::APEX;
        let a = *tv.iter().find(|v| ODD_CLASS.contains(v)).expect("apex triangle");
        let b = *tv.iter().find(|v| EVEN_CLASS.contains(v)).expect("apex triangle");
        let tri_set: BTreeSet<VertexId> = [apex, a, b].into_iter().collect();

        let mut signed: i64 = 0;
        for (tail, head) in quad.directed_edges() {
            let circuit = radon_circuit(&[apex, a, b, tail, head], emb)?;
            let pierces = circuit.pos == tri_set || circuit.neg == tri_set;
            if pierces {
                signed += chi.sign([apex, a, b, tail]).as_i8() as i64;
            }
        }
        let from_circuits = signed.unsigned_abs() as u32;
        let from_disk = linking_number_disk(&tri, &quad, emb)?;
        if from_circuits != from_disk {
            report.mismatches.push(format!(
                "triangle {}: circuits give {from_circuits}, disk method gives {from_disk}",
                tri.label()
            ));
        }
        report
            .linking_from_circuits
            .push((tri.label(), from_disk, from_circuits));
    }

    Ok(report)
}

fn check_subset(
    circuit: &SignedCircuit,
    emb: &Embedding,
    mismatches: &mut Vec<String>,
) -> Result<()> {
    let (large, small) = circuit.split();
    match (large, small) {
        (3, 2) => {
            let (tri_part, seg_part) = if circuit.pos.len() == 3 {
                (&circuit.pos, &circuit.neg)
            } else {
                (&circuit.neg, &circuit.pos)
            };
            let t: Vec<VertexId> = tri_part.iter().copied().collect();
            let s: Vec<VertexId> = seg_part.iter().copied().collect();
            let pierce = segment_pierces_triangle(
                emb.coord(s[0]),
                emb.coord(s[1]),
                emb.coord(t[0]),
                emb.coord(t[1]),
                emb.coord(t[2]),
            )?;
            if !matches!(pierce, PierceResult::Pierce(_)) {
                mismatches.push(format!(
                    "{circuit}: segment does not pierce the triangle part"
                ));
            }
        }
        (4, 1) => {
            let (tet_part, point_part) = if circuit.pos.len() == 4 {
                (&circuit.pos, &circuit.neg)
            } else {
                (&circuit.neg, &circuit.pos)
            };
            let t: Vec<VertexId> = tet_part.iter().copied().collect();
            let p = *point_part.iter().next().expect("singleton part");
            let inside = point_in_tetrahedron(
                emb.coord(p),
                emb.coord(t[0]),
                emb.coord(t[1]),
                emb.coord(t[2]),
                emb.coord(t[3]),
            )?;
            if !inside {
                mismatches.push(format!(
                    "{circuit}: singleton is not inside the tetrahedron part"
                ));
            }
        }
        other => {
            mismatches.push(format!("{circuit}: unexpected split {other:?}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{BuiltinGraph, Graph};

    fn generic_embedding() -> Embedding {
        let g = Graph::builtin(BuiltinGraph::K331);
        Embedding::from_int_coords(
            g,
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
        .unwrap()
    }

    #[test]
    fn chirotope_matches_orientation_and_alternates() {
        let emb = generic_embedding();
        let chi = chirotope(&emb).unwrap();
        assert!(chi.is_zero_free());
        assert_eq!(
            chi.sign([1, 2, 3, 4]),
            orient3d(emb.coord(1), emb.coord(2), emb.coord(3), emb.coord(4))
        );
        // Transposition negates.
        assert_eq!(chi.sign([2, 1, 3, 4]), -chi.sign([1, 2, 3, 4]));
        assert_eq!(chi.sign([1, 2, 4, 3]), -chi.sign([1, 2, 3, 4]));
        // 3-cycle (even permutation) preserves.
        assert_eq!(chi.sign([2, 3, 1, 4]), chi.sign([1, 2, 3, 4]));
    }

    #[test]
    fn interior_point_gives_four_one_split() {
        // Vertices 1..4 form a tetrahedron with vertex 5 = (1,1,1) inside.
        let emb = generic_embedding();
        let circuit = radon_circuit(&[1, 2, 3, 4, 5], &emb).unwrap();
        assert_eq!(circuit.split(), (4, 1));
        let singleton: Vec<VertexId> = if circuit.pos.len() == 1 {
            circuit.pos.iter().copied().collect()
        } else {
            circuit.neg.iter().copied().collect()
        };
        assert_eq!(singleton, vec![5]);
    }

    #[test]
    fn pierced_triangle_gives_three_two_split() {
        let g = Graph::builtin(BuiltinGraph::K331);
        // Triangle on vertices 1,2,3; segment 4-5 through its interior.
        let emb = Embedding::from_int_coords(
            g,
            &[
                (0, 0, 0),
                (4, 0, 0),
                (0, 4, 0),
                (1, 1, -1),
                (1, 1, 1),
                (9, 2, 7),
                (3, 8, 5),
            ],
        )
        .unwrap();
        let circuit = radon_circuit(&[1, 2, 3, 4, 5], &emb).unwrap();
        assert_eq!(circuit.split(), (3, 2));
        let tri_part: BTreeSet<VertexId> = [1, 2, 3].into_iter().collect();
        assert!(circuit.pos == tri_part || circuit.neg == tri_part);
    }

    #[test]
    fn dependency_identities_hold_exactly() {
        let emb = generic_embedding();
        let coeffs = radon_coefficients(&[1, 2, 3, 4, 5], &emb).unwrap();
        let sum: Rational = coeffs.iter().cloned().sum();
        assert!(sum.is_zero());
        let mut weighted = Vec3Q::zero();
        for (i, &v) in [1u8, 2, 3, 4, 5].iter().enumerate() {
            weighted = weighted.add(&emb.coord(v).scale(&coeffs[i]));
        }
        assert!(weighted.is_zero());
    }

    #[test]
    fn circuit_signs_agree_with_exact_coefficients() {
        let emb = generic_embedding();
        let ids = [1u8, 2, 4, 6, 7];
        let circuit = radon_circuit(&ids, &emb).unwrap();
        let coeffs = radon_coefficients(&ids, &emb).unwrap();
        for (i, &v) in ids.iter().enumerate() {
            match coeffs[i].sign() {
                Sign::Positive => assert!(circuit.pos.contains(&v)),
                Sign::Negative => assert!(circuit.neg.contains(&v)),
                Sign::Zero => panic!("general position"),
            }
        }
    }

    #[test]
    fn twenty_one_canonical_circuits() {
        let emb = generic_embedding();
        let circuits = all_circuits(&emb).unwrap();
        assert_eq!(circuits.len(), 21);
        for c in &circuits {
            assert_eq!(c.support().len(), 5);
            let min = *c.support().iter().next().unwrap();
            assert!(c.pos.contains(&min), "canonical form: smallest element positive");
        }
    }

    #[test]
    fn weak_elimination_holds_on_a_real_configuration() {
        let emb = generic_embedding();
        let closed = close_under_negation(&all_circuits(&emb).unwrap());
        let report = verify_weak_elimination(&closed);
        assert!(report.is_ok(), "failures: {:?}", report.failures);
        assert!(report.instances > 0);
        assert_eq!(report.witnesses.len() as u64, report.instances);
    }

    #[test]
    fn elimination_witness_for_a_shared_edge_pair() {
        // Configuration whose circuits include (712, 56) and (714, 52);
        // eliminating vertex 2 must produce a circuit supported inside
        // {7,1,4} positive and {5,6} negative.
        let g = Graph::builtin(BuiltinGraph::K331);
        let emb = Embedding::from_int_coords(
            g,
            &[
                (6, -3, -6),
                (0, 5, 2),
                (6, -6, 4),
                (-5, 7, 2),
                (-1, -1, -4),
                (7, -6, 4),
                (-9, -3, -2),
            ],
        )
        .unwrap();
        let c1 = SignedCircuit {
            pos: [7u8, 1, 2].into_iter().collect(),
            neg: [5u8, 6].into_iter().collect(),
        };
        let c2 = SignedCircuit {
            pos: [7u8, 1, 4].into_iter().collect(),
            neg: [5u8, 2].into_iter().collect(),
        };
        let circuits = all_circuits(&emb).unwrap();
        assert!(circuits.contains(&c1), "configuration must realize {c1}");
        assert!(circuits.contains(&c2), "configuration must realize {c2}");

        let report = verify_weak_elimination(&close_under_negation(&circuits));
        assert!(report.is_ok());
        let witness = report
            .witnesses
            .iter()
            .find(|w| w.c1 == c1 && w.c2 == c2 && w.eliminated == 2)
            .expect("instance (c1, c2, 2) must be checked");
        let pos_bound: BTreeSet<VertexId> = [7u8, 1, 4].into_iter().collect();
        let neg_bound: BTreeSet<VertexId> = [5u8, 6].into_iter().collect();
        assert!(witness.c3.pos.is_subset(&pos_bound), "got {}", witness.c3);
        assert!(witness.c3.neg.is_subset(&neg_bound), "got {}", witness.c3);
    }

    #[test]
    fn correspondence_holds_on_a_generic_embedding() {
        let emb = generic_embedding();
        let report = circuit_geometry_correspondence(&emb).unwrap();
        assert!(report.is_ok(), "mismatches: {:?}", report.mismatches);
        assert_eq!(report.subsets_checked, 21);
        assert_eq!(report.linking_from_circuits.len(), 9);
    }
}
