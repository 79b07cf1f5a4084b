//! Bundled reference embeddings with 1, 2, 3, 4 and 5 nontrivial links.
//!
//! Each fixture is an integer-coordinate general-position embedding of the
//! builtin 3+3+1 graph whose census was verified by both linking routes;
//! the expected nontrivial count and the exact set of linked triangles ride
//! along as metadata and are re-checked by `verify_all` and the test suite.

use crate::error::{Error, Result};
use crate::io::EmbeddingFile;

const LINKS1: &str = include_str!("../fixtures/links1.json");
const LINKS2: &str = include_str!("../fixtures/links2.json");
const LINKS3: &str = include_str!("../fixtures/links3.json");
const LINKS4: &str = include_str!("../fixtures/links4.json");
const LINKS5: &str = include_str!("../fixtures/links5.json");

/// The five bundled embeddings, in order of nontrivial link count 1..=5.
pub fn all() -> Vec<EmbeddingFile> {
    [LINKS1, LINKS2, LINKS3, LINKS4, LINKS5]
        .iter()
        .map(|text| EmbeddingFile::from_json_str(text).expect("bundled fixture parses"))
        .collect()
}

/// The bundled embedding with exactly `count` nontrivial links, when
/// `count` is in 1..=5.
pub fn by_count(count: u32) -> Option<EmbeddingFile> {
    if (1..=5).contains(&count) {
        Some(all().into_iter().nth(count as usize - 1).expect("five fixtures"))
    } else {
        None
    }
}

/// Re-runs the census of every bundled fixture against its recorded
/// expectations.
pub fn verify_all() -> Result<()> {
    for (i, fixture) in all().iter().enumerate() {
        let expected = i as u32 + 1;
        let meta = fixture
            .metadata
            .as_ref()
            .ok_or_else(|| Error::ExpectationMismatch("fixture without metadata".into()))?;
        if meta.expected_nontrivial_count != Some(expected) {
            return Err(Error::ExpectationMismatch(format!(
                "fixture {} records count {:?}, expected {expected}",
                meta.name.as_deref().unwrap_or("?"),
                meta.expected_nontrivial_count
            )));
        }
        fixture.verify_expectations()?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linking::{census, LinkType};

    #[test]
    fn fixtures_parse_and_verify() {
        verify_all().expect("bundled fixtures must verify");
    }

    #[test]
    fn by_count_bounds() {
        assert!(by_count(0).is_none());
        assert!(by_count(6).is_none());
        assert!(by_count(3).is_some());
    }

    #[test]
    fn single_link_fixture_has_one_piercing_pair() {
        let fixture = by_count(1).unwrap();
        let report = census(&fixture.embedding).unwrap();
        assert_eq!(report.total_linking, 1);
        for entry in &report.entries {
            let expected = u32::from(entry.triangle_label() == "752");
            assert_eq!(entry.linking_number, expected);
        }
    }

    #[test]
    fn even_count_fixtures_carry_one_torus_link() {
        for count in [2u32, 4] {
            let report = census(&by_count(count).unwrap().embedding).unwrap();
            assert_eq!(report.torus24_count, 1);
            assert_eq!(
                report
                    .entries
                    .iter()
                    .filter(|e| e.link_type == LinkType::Hopf)
                    .count() as u32,
                count - 1
            );
        }
    }

    #[test]
    fn fixture_projections_have_odd_crossing_counts() {
        for fixture in all() {
            let emb = &fixture.embedding;
            let imm = crate::sphere::project(emb, crate::graph::APEX).unwrap();
            let crossings = crate::sphere::crossing_set(&imm, emb).unwrap();
            assert!(crossings.len() % 2 == 1 && crossings.len() <= 9);
        }
    }

    #[test]
    fn torus_triangle_is_pierced_by_exactly_two_quadrilateral_edges() {
        let report = census(&by_count(2).unwrap().embedding).unwrap();
        let entry = report
            .entries
            .iter()
            .find(|e| e.link_type == LinkType::Torus24)
            .expect("even-count fixture has a torus link");
        let tri: std::collections::BTreeSet<u8> =
            entry.triangle.vertices().iter().copied().collect();
        // Each piercing quadrilateral edge yields a distinct 3/2 circuit
        // whose triangle part is exactly the apex triangle.
        let mut piercing_circuits = Vec::new();
        for (d, e) in entry.quadrilateral.directed_edges() {
            let mut ids = [0u8; 5];
            ids[..3].copy_from_slice(&entry.triangle.vertices()[..3]);
            ids[3] = d;
            ids[4] = e;
            let circuit = crate::matroid::radon_circuit(&ids, &by_count(2).unwrap().embedding)
                .unwrap();
            if circuit.pos == tri || circuit.neg == tri {
                piercing_circuits.push(circuit);
            }
        }
        piercing_circuits.sort();
        piercing_circuits.dedup();
        assert_eq!(piercing_circuits.len(), 2);
    }
}
