//! Sweep a seeded stream of random general-position embeddings through
//! every structural check and print the aggregate statistics.
//!
//!     cargo run --release --example random_sweep

use linkcensus::sample::SampleConfig;
use linkcensus::sweep::run_sweep;

fn main() {
    let cfg = SampleConfig {
        seed: 7,
        count: 500,
        coordinate_bound: 1000,
        ..SampleConfig::default()
    };
    let stats = run_sweep(&cfg);

    println!("samples accepted : {}", stats.samples_accepted);
    println!("violations       : {}", stats.violations.len());
    println!("\nnontrivial-link histogram (only 1..=5 can occur):");
    for (count, n) in &stats.histogram {
        println!("  {count}: {n:>5}  {}", "#".repeat((*n as usize / 4).max(1)));
    }
    println!("\ncrossing-count histogram (only odd counts up to 9 can occur):");
    for (count, n) in &stats.crossing_histogram {
        println!("  {count}: {n:>5}  {}", "#".repeat((*n as usize / 4).max(1)));
    }
    println!(
        "\ntorus links by census parity: odd {}, even {}",
        stats.torus24_by_parity.odd, stats.torus24_by_parity.even
    );
    if !stats.violations.is_empty() {
        // Any entry here would contradict a theorem; dump it verbatim.
        println!("\n{}", serde_json::to_string_pretty(&stats.violations).unwrap());
        std::process::exit(1);
    }
}
