//! Batched invariant sweeps over random embeddings, and witness search.
//!
//! Each sample runs the full battery: link census, both linking routes,
//! spherical crossing analysis, crossing-pattern checks, non-realizability
//! detectors, circuit extraction, weak elimination, and the
//! circuit-geometry correspondence. Every breach lands in the violations
//! list together with the offending embedding; an empty list is the
//! expected outcome of every sweep.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::embedding::Embedding;
use crate::error::Error;
use crate::fixtures;
use crate::io::{EmbeddingFile, EmbeddingJson, Metadata};
use crate::linking::{census, linking_number_gauss};
use crate::matroid::{all_circuits, circuit_geometry_correspondence, close_under_negation, verify_weak_elimination};
use crate::patterns::{
    check_alternation_consistency_with, detect_nonrealizable_path, detect_nonrealizable_triangles,
    match_nine_crossing_pattern, seven_crossing_adjacent_free_conclusion, CrossingPattern,
};
use crate::sample::{sample_embedding_with_rejects, SampleConfig};
use crate::sphere::{crossing_free_edges, crossing_set, project};

/// Torus-link tallies split by the parity of each census's nontrivial
/// count. Every torus link must fall in the `even` bucket.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Torus24ByParity {
    pub odd: u64,
    pub even: u64,
}

/// One recorded invariant breach, carrying the embedding that caused it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub sample_index: u64,
    pub kind: String,
    pub detail: String,
    pub embedding: EmbeddingJson,
}

/// Aggregate outcome of a sweep.
#[derive(Clone, Debug, Default, Serialize)]
pub struct AggregateStats {
    /// nontrivial link count -> number of samples.
    pub histogram: BTreeMap<u32, u64>,
    pub torus24_by_parity: Torus24ByParity,
    /// spherical crossing count -> number of samples.
    pub crossing_histogram: BTreeMap<usize, u64>,
    pub violations: Vec<Violation>,
    pub samples_accepted: u64,
    pub samples_rejected: u64,
    /// Individual point redraws inside accepted samples.
    pub point_resamples: u64,
}

impl AggregateStats {
    fn absorb(&mut self, outcome: SampleOutcome) {
        match outcome {
            SampleOutcome::Rejected { resamples } => {
                self.samples_rejected += 1;
                self.point_resamples += resamples;
            }
            SampleOutcome::Analyzed {
                resamples,
                nontrivial_count,
                torus24_count,
                crossing_count,
                violations,
            } => {
                self.samples_accepted += 1;
                self.point_resamples += resamples;
                if let Some(n) = nontrivial_count {
                    *self.histogram.entry(n).or_insert(0) += 1;
                    if n % 2 == 0 {
                        self.torus24_by_parity.even += torus24_count;
                    } else {
                        self.torus24_by_parity.odd += torus24_count;
                    }
                }
                if let Some(c) = crossing_count {
                    *self.crossing_histogram.entry(c).or_insert(0) += 1;
                }
                self.violations.extend(violations);
            }
        }
    }
}

enum SampleOutcome {
    Rejected {
        resamples: u64,
    },
    Analyzed {
        resamples: u64,
        nontrivial_count: Option<u32>,
        torus24_count: u64,
        crossing_count: Option<usize>,
        violations: Vec<Violation>,
    },
}

/// Runs every check on one embedding. Returns the census outcome, crossing
/// count, and all recorded violations.
pub fn analyze_embedding(index: u64, emb: &Embedding) -> SampleAnalysis {
    let mut violations = Vec::new();
    let mut push = |kind: &str, detail: String| {
        violations.push(Violation {
            sample_index: index,
            kind: kind.into(),
            detail,
            embedding: EmbeddingJson::from_embedding(emb, None),
        });
    };

    // Census and the per-census invariants (checked inside `census`).
    let report = match census(emb) {
        Ok(r) => Some(r),
        Err(Error::TheoremViolation(v)) => {
            push("census-invariant", v.to_string());
            None
        }
        Err(e) => {
            push("census-error", e.to_string());
            None
        }
    };

    // Cross-validate the two linking routes on all nine pairs.
    if let Some(report) = &report {
        for entry in &report.entries {
            match linking_number_gauss(&entry.triangle, &entry.quadrilateral, emb) {
                Ok(gauss) => {
                    if gauss != entry.linking_number {
                        push(
                            "linking-route-mismatch",
                            format!(
                                "pair ({}, {}): disk {} vs projection {}",
                                entry.triangle,
                                entry.quadrilateral,
                                entry.linking_number,
                                gauss
                            ),
                        );
                    }
                }
                Err(e) => push("linking-route-error", e.to_string()),
            }
        }
    }

    // Spherical crossing analysis.
    let mut crossing_count = None;
    let mut kept_crossings = None;
    match project(emb, crate::graph::APEX).and_then(|imm| Ok((crossing_set(&imm, emb)?, imm))) {
        Ok((crossings, imm)) => {
            let n = crossings.len();
            crossing_count = Some(n);
            if n % 2 == 0 {
                push("crossing-parity", format!("even crossing count {n}"));
            }
            if n > 9 {
                push("crossing-count", format!("crossing count {n} exceeds 9"));
            }
            let free = crossing_free_edges(&crossings, imm.edges());
            if free.len() < 2 {
                push(
                    "crossing-free-edges",
                    format!("only {} crossing-free edges", free.len()),
                );
            }
            if n == 9 {
                let pattern = CrossingPattern::from_crossings(&crossings);
                if match_nine_crossing_pattern(&pattern).is_none() {
                    push(
                        "nine-crossing-pattern",
                        format!("unmatched nine-crossing pattern {:?}", pattern.pairs),
                    );
                }
            }
            if n == 7 {
                if let Some(false) = seven_crossing_adjacent_free_conclusion(&crossings, &free) {
                    push(
                        "seven-crossing-conclusion",
                        format!("adjacent crossing-free edges {free:?} without a forced third"),
                    );
                }
            }
            let triangles = detect_nonrealizable_triangles(&crossings);
            if !triangles.is_empty() {
                push(
                    "nonrealizable-triangles",
                    format!("witnesses {triangles:?} in a realized projection"),
                );
            }
            let paths = detect_nonrealizable_path(&crossings);
            if !paths.is_empty() {
                push(
                    "nonrealizable-path",
                    format!("witnesses {paths:?} in a realized projection"),
                );
            }
            kept_crossings = Some(crossings);
        }
        Err(e) => push("projection-error", e.to_string()),
    }

    // Alternation consistency over the census and crossings just computed.
    if let (Some(report), Some(crossings)) = (&report, &kept_crossings) {
        let consistency = check_alternation_consistency_with(report, crossings);
        if !consistency.is_consistent() {
            push(
                "alternation-consistency",
                format!("{:?}", consistency.violations()),
            );
        }
    }

    // Oriented-matroid checks.
    match all_circuits(emb) {
        Ok(circuits) => {
            if circuits.len() != 21 {
                push(
                    "circuit-count",
                    format!("{} circuits instead of 21", circuits.len()),
                );
            }
            let elimination = verify_weak_elimination(&close_under_negation(&circuits));
            if !elimination.is_ok() {
                push(
                    "weak-elimination",
                    format!("{} instances without witnesses", elimination.failures.len()),
                );
            }
        }
        Err(e) => push("circuit-error", e.to_string()),
    }
    match circuit_geometry_correspondence(emb) {
        Ok(corr) => {
            if !corr.is_ok() {
                push("circuit-correspondence", corr.mismatches.join("; "));
            }
        }
        Err(e) => push("correspondence-error", e.to_string()),
    }

    SampleAnalysis {
        nontrivial_count: report.as_ref().map(|r| r.nontrivial_count),
        torus24_count: report.as_ref().map_or(0, |r| r.torus24_count as u64),
        crossing_count,
        violations,
    }
}

/// Everything the sweep keeps from one analyzed embedding.
pub struct SampleAnalysis {
    pub nontrivial_count: Option<u32>,
    pub torus24_count: u64,
    pub crossing_count: Option<usize>,
    pub violations: Vec<Violation>,
}

fn run_one(cfg: &SampleConfig, index: u64) -> SampleOutcome {
    match sample_embedding_with_rejects(cfg, index) {
        Ok((emb, resamples)) => {
            let analysis = analyze_embedding(index, &emb);
            SampleOutcome::Analyzed {
                resamples,
                nontrivial_count: analysis.nontrivial_count,
                torus24_count: analysis.torus24_count,
                crossing_count: analysis.crossing_count,
                violations: analysis.violations,
            }
        }
        Err(Error::TooManyRejects { attempts, .. }) => SampleOutcome::Rejected {
            resamples: attempts as u64,
        },
        Err(e) => {
            // Sampling can only fail by rejection; anything else is a bug.
            panic!("sampler error at index {index}: {e}");
        }
    }
}

/// Runs the sweep over `cfg.count` samples, in parallel over the current
/// rayon thread pool.
///
/// Sample `i` is always generated from `(seed, i)` and results are merged
/// in index order, so the output is identical for any thread count.
pub fn run_sweep(cfg: &SampleConfig) -> AggregateStats {
    let outcomes: Vec<SampleOutcome> = (0..cfg.count)
        .into_par_iter()
        .map(|i| run_one(cfg, i))
        .collect();
    let mut stats = AggregateStats::default();
    for outcome in outcomes {
        stats.absorb(outcome);
    }
    stats
}

/// Searches the sample stream for embeddings whose censuses hit each target
/// nontrivial count. The result always contains every requested target:
/// entries not found within the budget fall back to the bundled reference
/// embeddings.
pub fn find_witnesses(
    targets: &BTreeSet<u32>,
    cfg: &SampleConfig,
    budget: u64,
) -> BTreeMap<u32, EmbeddingFile> {
    let mut result: BTreeMap<u32, EmbeddingFile> = BTreeMap::new();
    for &t in targets {
        if let Some(fixture) = fixtures::by_count(t) {
            result.insert(t, fixture);
        }
    }
    let mut missing: BTreeSet<u32> = targets.clone();
    for index in 0..budget {
        if missing.is_empty() {
            break;
        }
        let emb = match sample_embedding_with_rejects(cfg, index) {
            Ok((emb, _)) => emb,
            Err(_) => continue,
        };
        let report = match census(&emb) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let n = report.nontrivial_count;
        if missing.remove(&n) {
            let metadata = Metadata {
                name: Some(format!("witness-{n}")),
                expected_nontrivial_count: Some(n),
                expected_linked_triangles: Some(report.linked_triangles()),
            };
            result.insert(n, EmbeddingFile::new(emb, Some(metadata)));
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_has_no_violations() {
        let cfg = SampleConfig {
            seed: 42,
            count: 25,
            coordinate_bound: 100,
            ..SampleConfig::default()
        };
        let stats = run_sweep(&cfg);
        assert_eq!(stats.samples_accepted, 25);
        assert!(stats.violations.is_empty(), "{:?}", stats.violations);
        assert!(stats.histogram.keys().all(|k| (1..=5).contains(k)));
        assert!(stats
            .crossing_histogram
            .keys()
            .all(|k| [1, 3, 5, 7, 9].contains(k)));
    }

    #[test]
    fn single_sample_sweep() {
        let cfg = SampleConfig {
            seed: 5,
            count: 1,
            coordinate_bound: 100,
            ..SampleConfig::default()
        };
        let stats = run_sweep(&cfg);
        assert_eq!(stats.samples_accepted + stats.samples_rejected, 1);
        let processed: u64 = stats.histogram.values().sum();
        assert_eq!(processed, stats.samples_accepted);
    }

    #[test]
    fn empty_targets_give_empty_witness_map() {
        let cfg = SampleConfig::default();
        let map = find_witnesses(&BTreeSet::new(), &cfg, 0);
        assert!(map.is_empty());
    }
}
