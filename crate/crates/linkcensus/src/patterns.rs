//! Structural analysis of crossing sets: the unique nine-crossing pattern,
//! the seven-crossing conclusion for adjacent crossing-free edges, the
//! non-realizability detectors, and the crossing-alternation consistency
//! check that ties over/under data back to the link census.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::embedding::Embedding;
use crate::error::Result;
use crate::graph::{Relabeling, VertexId, EVEN_CLASS, ODD_CLASS};
use crate::linking::census;
use crate::sphere::{crossing_set, crossings_along_edge, project, Crossing, EdgeId};

/// Unordered crossing pairs of an immersion, without over/under data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingPattern {
    pub pairs: BTreeSet<(EdgeId, EdgeId)>,
}

fn norm_pair(a: EdgeId, b: EdgeId) -> (EdgeId, EdgeId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl CrossingPattern {
    pub fn from_crossings(crossings: &[Crossing]) -> CrossingPattern {
        CrossingPattern {
            pairs: crossings.iter().map(|c| c.edge_pair()).collect(),
        }
    }

    pub fn from_labels(labels: &[(&str, &str)]) -> Result<CrossingPattern> {
        let mut pairs = BTreeSet::new();
        for (a, b) in labels {
            pairs.insert(norm_pair(a.parse()?, b.parse()?));
        }
        Ok(CrossingPattern { pairs })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn relabeled(&self, r: &Relabeling) -> CrossingPattern {
        let pairs = self
            .pairs
            .iter()
            .map(|&(a, b)| {
                let a2 = EdgeId::new(r.apply(a.odd()), r.apply(a.even())).expect("relabeling preserves edges");
                let b2 = EdgeId::new(r.apply(b.odd()), r.apply(b.even())).expect("relabeling preserves edges");
                norm_pair(a2, b2)
            })
            .collect();
        CrossingPattern { pairs }
    }
}

/// The unique crossing pattern of a nine-crossing immersion, in one fixed
/// labeling: edges 12 and 34 crossing-free, every quadrilateral with
/// exactly one self-crossing.
pub fn canonical_nine_pattern() -> CrossingPattern {
    CrossingPattern::from_labels(&[
        ("14", "32"),
        ("16", "32"),
        ("14", "52"),
        ("16", "52"),
        ("14", "36"),
        ("14", "56"),
        ("32", "54"),
        ("32", "56"),
        ("36", "54"),
    ])
    .expect("canonical labels are valid")
}

/// Searches the 72 class-respecting relabelings for one carrying the given
/// nine-pair pattern onto the canonical pattern.
pub fn match_nine_crossing_pattern(pattern: &CrossingPattern) -> Option<Relabeling> {
    assert_eq!(pattern.len(), 9, "pattern must have nine pairs");
    let canonical = canonical_nine_pattern();
    Relabeling::all()
        .into_iter()
        .find(|r| pattern.relabeled(r) == canonical)
}

/// For a seven-crossing immersion with two crossing-free edges sharing a
/// vertex, the conclusion forced on the rest of the diagram: at least one
/// edge joining the shared vertex's class-mates to the opposite-class
/// vertex not used by the pair must also be crossing-free.
///
/// Returns `None` when no two adjacent crossing-free edges exist (nothing
/// to check), otherwise whether the conclusion holds.
pub fn seven_crossing_adjacent_free_conclusion(
    crossings: &[Crossing],
    free_edges: &[EdgeId],
) -> Option<bool> {
    debug_assert_eq!(crossings.len(), 7);
    let is_free = |e: EdgeId| free_edges.contains(&e);
    let mut checked_any = false;
    let mut all_hold = true;
    for i in 0..free_edges.len() {
        for j in i + 1..free_edges.len() {
            let (e1, e2) = (free_edges[i], free_edges[j]);
            let shared: Option<(VertexId, VertexId, VertexId)> = if e1.odd() == e2.odd() {
                Some((e1.odd(), e1.even(), e2.even()))
            } else if e1.even() == e2.even() {
                Some((e1.even(), e1.odd(), e2.odd()))
            } else {
                None
            };
            let (v, a, b) = match shared {
                Some(t) => t,
                None => continue,
            };
            checked_any = true;
            // Class-mates of v, and the vertex of the opposite class not in {a, b}.
            let own_class: &[VertexId; 3] = if ODD_CLASS.contains(&v) { &ODD_CLASS } else { &EVEN_CLASS };
            let other_class: &[VertexId; 3] = if ODD_CLASS.contains(&v) { &EVEN_CLASS } else { &ODD_CLASS };
            let mates: Vec<VertexId> = own_class.iter().copied().filter(|&u| u != v).collect();
            let spare = other_class
                .iter()
                .copied()
                .find(|u| *u != a && *u != b)
                .expect("three-element class");
            let conclusion = mates
                .iter()
                .any(|&m| is_free(EdgeId::new(m, spare).expect("valid edge")));
            all_hold &= conclusion;
        }
    }
    if checked_any {
        Some(all_hold)
    } else {
        None
    }
}

/// Over/under relation table for fast detector lookups.
struct OverRelation {
    pairs: BTreeSet<(EdgeId, EdgeId)>,
}

impl OverRelation {
    fn new(crossings: &[Crossing]) -> OverRelation {
        OverRelation {
            pairs: crossings.iter().map(|c| (c.over, c.under)).collect(),
        }
    }

    /// Is there a crossing where `over` passes over `under`?
    fn over(&self, over: EdgeId, under: EdgeId) -> bool {
        self.pairs.contains(&(over, under))
    }
}

fn edge(u: VertexId, v: VertexId) -> Option<EdgeId> {
    EdgeId::new(u, v).ok()
}

/// Finds every labeled 6-tuple (A,B,C,X,Y,Z) whose crossings realize the
/// cyclic over/under chain AB over XY, XY over BC, BC over YZ, YZ over AB.
/// Such a chain cannot occur in the projection of a straight-edge
/// embedding; a nonempty result certifies non-realizability.
pub fn detect_nonrealizable_triangles(crossings: &[Crossing]) -> Vec<[VertexId; 6]> {
    let rel = OverRelation::new(crossings);
    let mut witnesses = Vec::new();
    let vertices: Vec<VertexId> = (1..=6).collect();
    permute(&vertices, 6, &mut |p| {
        let [a, b, c, x, y, z] = [p[0], p[1], p[2], p[3], p[4], p[5]];
        let (ab, bc, xy, yz) = match (edge(a, b), edge(b, c), edge(x, y), edge(y, z)) {
            (Some(ab), Some(bc), Some(xy), Some(yz)) => (ab, bc, xy, yz),
            _ => return,
        };
        if rel.over(ab, xy) && rel.over(xy, bc) && rel.over(bc, yz) && rel.over(yz, ab) {
            witnesses.push([a, b, c, x, y, z]);
        }
    });
    witnesses
}

/// Finds every labeled 5-tuple (A,B,P,Y,X) whose crossings realize the
/// chain YP over AB, AB over XY, XY over BP, which likewise cannot occur in
/// a realized projection.
pub fn detect_nonrealizable_path(crossings: &[Crossing]) -> Vec<[VertexId; 5]> {
    let rel = OverRelation::new(crossings);
    let mut witnesses = Vec::new();
    let vertices: Vec<VertexId> = (1..=6).collect();
    permute(&vertices, 5, &mut |p| {
        let [a, b, pp, y, x] = [p[0], p[1], p[2], p[3], p[4]];
        let (yp, ab, xy, bp) = match (edge(y, pp), edge(a, b), edge(x, y), edge(b, pp)) {
            (Some(yp), Some(ab), Some(xy), Some(bp)) => (yp, ab, xy, bp),
            _ => return,
        };
        if rel.over(yp, ab) && rel.over(ab, xy) && rel.over(xy, bp) {
            witnesses.push([a, b, pp, y, x]);
        }
    });
    witnesses
}

/// Calls `f` on every ordered selection of `k` distinct items.
fn permute(items: &[VertexId], k: usize, f: &mut impl FnMut(&[VertexId])) {
    fn rec(items: &[VertexId], k: usize, chosen: &mut Vec<VertexId>, f: &mut impl FnMut(&[VertexId])) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        for &v in items {
            if !chosen.contains(&v) {
                chosen.push(v);
                rec(items, k, chosen, f);
                chosen.pop();
            }
        }
    }
    rec(items, k, &mut Vec::with_capacity(k), f);
}

/// One double-crossing configuration of the alternation check: the two
/// edges at `middle_odd` each cross the two edges at `middle_even`.
#[derive(Clone, Debug, Serialize)]
pub struct AlternationConfig {
    pub middle_odd: VertexId,
    pub middle_even: VertexId,
    /// The four configuration edges that satisfy one of the two linking
    /// conditions (two crossings only and a linked apex triangle, or an
    /// apex triangle of linking number two).
    pub satisfied: Vec<EdgeId>,
}

/// Result of the alternation consistency check over all configurations of
/// an embedding.
#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyReport {
    pub configurations: Vec<AlternationConfig>,
}

impl ConsistencyReport {
    /// Configurations violating the bound (three or more satisfied edges).
    pub fn violations(&self) -> Vec<&AlternationConfig> {
        self.configurations
            .iter()
            .filter(|c| c.satisfied.len() >= 3)
            .collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Checks, for every configuration in which the two edges at an odd vertex
/// each cross the two edges at an even vertex, that fewer than three of the
/// four edges have an apex triangle linking its complementary quadrilateral
/// while crossing nothing else, or linking with linking number two.
pub fn check_alternation_consistency(emb: &Embedding) -> Result<ConsistencyReport> {
    let report = census(emb)?;
    let imm = project(emb, crate::graph::APEX)?;
    let crossings = crossing_set(&imm, emb)?;
    Ok(check_alternation_consistency_with(&report, &crossings))
}

/// As [`check_alternation_consistency`], over an already computed census
/// and crossing set.
pub fn check_alternation_consistency_with(
    report: &crate::linking::CensusReport,
    crossings: &[Crossing],
) -> ConsistencyReport {
    let mut lk = std::collections::BTreeMap::new();
    for entry in &report.entries {
        let tri = entry.triangle.vertices();
        let a = *tri.iter().find(|v| ODD_CLASS.contains(v)).expect("apex triangle");
        let b = *tri.iter().find(|v| EVEN_CLASS.contains(v)).expect("apex triangle");
        lk.insert(EdgeId::new(a, b).expect("valid edge"), entry.linking_number);
    }

    let crossing_count =
        |e: EdgeId| crossings.iter().filter(|c| c.involves(e)).count();
    let crosses = |e1: EdgeId, e2: EdgeId| {
        crossings
            .iter()
            .any(|c| c.edge_pair() == norm_pair(e1, e2))
    };

    let mut configurations = Vec::new();
    for &b_mid in &ODD_CLASS {
        for &y_mid in &EVEN_CLASS {
            let others_even: Vec<VertexId> =
                EVEN_CLASS.iter().copied().filter(|&v| v != y_mid).collect();
            let others_odd: Vec<VertexId> =
                ODD_CLASS.iter().copied().filter(|&v| v != b_mid).collect();
            let at_b: Vec<EdgeId> = others_even
                .iter()
                .map(|&a| EdgeId::new(b_mid, a).expect("valid edge"))
                .collect();
            let at_y: Vec<EdgeId> = others_odd
                .iter()
                .map(|&x| EdgeId::new(x, y_mid).expect("valid edge"))
                .collect();
            let applies = at_b
                .iter()
                .all(|&e1| at_y.iter().all(|&e2| crosses(e1, e2)));
            if !applies {
                continue;
            }
            let four = [at_b[0], at_b[1], at_y[0], at_y[1]];
            let satisfied = four
                .iter()
                .copied()
                .filter(|&e| {
                    let lk_e = lk[&e];
                    let cond_two_only = crossing_count(e) == 2 && lk_e >= 1;
                    let cond_torus = lk_e == 2;
                    cond_two_only || cond_torus
                })
                .collect();
            configurations.push(AlternationConfig {
                middle_odd: b_mid,
                middle_even: y_mid,
                satisfied,
            });
        }
    }
    ConsistencyReport { configurations }
}

/// Whether consecutive crossings along `e` (in position order) alternate
/// over/under.
pub fn crossings_alternate_along(crossings: &[Crossing], e: EdgeId) -> bool {
    let items = crossings_along_edge(crossings, e);
    items.windows(2).all(|w| w[0].1 != w[1].1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use crate::vec3::Vec3Q;

    fn fake_crossing(over: &str, under: &str) -> Crossing {
        Crossing {
            over: over.parse().unwrap(),
            under: under.parse().unwrap(),
            direction: Vec3Q::from_ints(1, 1, 1),
            over_pos: Rational::from_int(1),
            under_pos: Rational::from_int(1),
        }
    }

    #[test]
    fn canonical_pattern_matches_identity() {
        let got = match_nine_crossing_pattern(&canonical_nine_pattern()).expect("must match");
        assert!(got.is_identity());
    }

    #[test]
    fn swapped_pattern_matches_the_swap() {
        // Relabel by 1<->3, 2<->4.
        let swap = Relabeling::all()
            .into_iter()
            .find(|r| r.apply(1) == 3 && r.apply(3) == 1 && r.apply(2) == 4 && r.apply(4) == 2 && r.apply(5) == 5 && r.apply(6) == 6)
            .unwrap();
        let relabeled = canonical_nine_pattern().relabeled(&swap);
        let found = match_nine_crossing_pattern(&relabeled).expect("must match");
        // Applying the found relabeling must restore the canonical pattern.
        assert_eq!(relabeled.relabeled(&found), canonical_nine_pattern());
    }

    #[test]
    fn corrupted_pattern_does_not_match() {
        // Swap one pair of the canonical set for a pair using edge 12; the
        // result has nine pairs but no valid relabeling, because its two
        // crossing-free edges are adjacent.
        let mut pattern = canonical_nine_pattern();
        pattern.pairs.remove(&norm_pair("14".parse().unwrap(), "32".parse().unwrap()));
        pattern
            .pairs
            .insert(norm_pair("12".parse().unwrap(), "36".parse().unwrap()));
        assert_eq!(pattern.len(), 9);
        assert!(match_nine_crossing_pattern(&pattern).is_none());
    }

    #[test]
    fn triangle_detector_fires_on_synthetic_cycle() {
        // A=1, B=2, C=3, X=4, Y=5, Z=6: AB over XY, XY over BC, BC over YZ,
        // YZ over AB.
        let crossings = vec![
            fake_crossing("12", "54"),
            fake_crossing("54", "32"),
            fake_crossing("32", "56"),
            fake_crossing("56", "12"),
        ];
        let witnesses = detect_nonrealizable_triangles(&crossings);
        assert!(witnesses.contains(&[1, 2, 3, 4, 5, 6]));
    }

    #[test]
    fn triangle_detector_empty_on_empty_input() {
        assert!(detect_nonrealizable_triangles(&[]).is_empty());
    }

    #[test]
    fn path_detector_fires_on_synthetic_chain() {
        // A=1, B=2, P=3, Y=4, X=5: YP over AB, AB over XY, XY over BP.
        let crossings = vec![
            fake_crossing("34", "12"),
            fake_crossing("12", "54"),
            fake_crossing("54", "32"),
        ];
        let witnesses = detect_nonrealizable_path(&crossings);
        assert!(witnesses.contains(&[1, 2, 3, 4, 5]));
    }

    #[test]
    fn path_detector_empty_on_empty_input() {
        assert!(detect_nonrealizable_path(&[]).is_empty());
    }
}
