//! The complete graph on six vertices: every straight-edge embedding has
//! exactly 1 or 3 nontrivial triangle-triangle links. Sample a few hundred
//! and tally.
//!
//!     cargo run --release --example k6_count

use std::collections::BTreeMap;

use linkcensus::linking::k6_nontrivial_count;
use linkcensus::sample::{sample_embedding_for, SampleConfig};
use linkcensus::BuiltinGraph;

fn main() {
    let cfg = SampleConfig {
        seed: 6,
        coordinate_bound: 500,
        ..SampleConfig::default()
    };
    let mut histogram: BTreeMap<u32, u64> = BTreeMap::new();
    for position in 0..400u64 {
        let (emb, _) = sample_embedding_for(BuiltinGraph::K6, &cfg, position).expect("sample");
        let n = k6_nontrivial_count(&emb).expect("census");
        assert!(n == 1 || n == 3, "impossible count {n}");
        *histogram.entry(n).or_insert(0) += 1;
    }
    println!("nontrivial links over 400 embeddings of the complete graph on six vertices:");
    for (count, n) in &histogram {
        println!("  {count}: {n}");
    }
}
