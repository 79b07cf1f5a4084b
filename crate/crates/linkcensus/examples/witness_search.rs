//! Find a witness embedding for every attainable nontrivial-link count.
//! Counts not hit within the sampling budget fall back to the bundled
//! reference embeddings, so the result is always total.
//!
//!     cargo run --release --example witness_search

use std::collections::BTreeSet;

use linkcensus::sample::SampleConfig;
use linkcensus::sweep::find_witnesses;

fn main() {
    let targets: BTreeSet<u32> = (1..=5).collect();
    let cfg = SampleConfig {
        seed: 42,
        coordinate_bound: 100,
        ..SampleConfig::default()
    };
    let witnesses = find_witnesses(&targets, &cfg, 3000);

    for (count, file) in &witnesses {
        let meta = file.metadata.as_ref().expect("witnesses carry metadata");
        println!(
            "{count} nontrivial links: {} (linked triangles {})",
            meta.name.as_deref().unwrap_or("?"),
            meta.expected_linked_triangles
                .as_ref()
                .map(|t| t.join(", "))
                .unwrap_or_default()
        );
        for (v, c) in file.embedding.coords() {
            println!("    {v}: {c}");
        }
    }
}
