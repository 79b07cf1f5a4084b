//! Extract the rank-4 oriented matroid of a seven-point configuration:
//! chirotope signs, the 21 signed circuits, the weak-elimination axiom,
//! and the correspondence between circuits and piercing geometry.
//!
//!     cargo run --example matroid_circuits

use linkcensus::fixtures;
use linkcensus::matroid::{
    all_circuits, chirotope, circuit_geometry_correspondence, close_under_negation,
    verify_weak_elimination,
};

fn main() {
    let fixture = fixtures::by_count(2).expect("bundled");
    let emb = &fixture.embedding;

    let chi = chirotope(emb).expect("chirotope");
    println!(
        "chirotope on {:?}: zero-free = {}",
        chi.ground_set(),
        chi.is_zero_free()
    );
    println!("  sign(1,2,3,4) = {:?}", chi.sign([1, 2, 3, 4]));
    println!("  sign(2,1,3,4) = {:?} (alternating)", chi.sign([2, 1, 3, 4]));

    let circuits = all_circuits(emb).expect("circuits");
    println!("\n{} circuits, one per 5-subset:", circuits.len());
    for c in &circuits {
        let (large, small) = c.split();
        println!("  {c}  [{large}/{small} split]");
    }

    let elimination = verify_weak_elimination(&close_under_negation(&circuits));
    println!(
        "\nweak elimination: {} instances checked, {} failures",
        elimination.instances,
        elimination.failures.len()
    );
    if let Some(w) = elimination.witnesses.first() {
        println!(
            "  e.g. eliminating {} from {} and {} yields {}",
            w.eliminated, w.c1, w.c2, w.c3
        );
    }

    let corr = circuit_geometry_correspondence(emb).expect("correspondence");
    println!(
        "\ncircuit/geometry correspondence: {} subsets, {} mismatches",
        corr.subsets_checked,
        corr.mismatches.len()
    );
    println!("linking numbers recovered from circuits alone:");
    for (label, from_disk, from_circuits) in &corr.linking_from_circuits {
        println!("  triangle {label}: disk {from_disk}, circuits {from_circuits}");
    }
}
