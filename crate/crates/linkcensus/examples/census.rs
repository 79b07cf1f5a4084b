//! Run the full link census of one embedding and print it as a table.
//!
//!     cargo run --example census

use linkcensus::fixtures;
use linkcensus::linking::census;

fn main() {
    // The bundled embedding with five nontrivial links. Any general-position
    // integer or rational coordinates work the same way; see `save_and_load`
    // for building an embedding from scratch.
    let fixture = fixtures::by_count(5).expect("bundled");
    let report = census(&fixture.embedding).expect("census");

    println!("{:<10} {:<16} {:>8}  type", "triangle", "quadrilateral", "linking");
    for entry in &report.entries {
        println!(
            "{:<10} {:<16} {:>8}  {:?}",
            entry.triangle_label(),
            entry.quadrilateral.label(),
            entry.linking_number,
            entry.link_type,
        );
    }
    println!();
    println!("nontrivial links : {}", report.nontrivial_count);
    println!("total linking    : {}", report.total_linking);
    println!("torus links      : {}", report.torus24_count);
    println!("linked triangles : {}", report.linked_triangles().join(", "));
}
