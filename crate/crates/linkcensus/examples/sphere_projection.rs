//! Project the bipartite subgraph onto a sphere around the apex and list
//! every geodesic crossing with its over/under data, then walk one edge
//! crossing by crossing.
//!
//!     cargo run --example sphere_projection

use linkcensus::fixtures;
use linkcensus::sphere::{crossing_free_edges, crossing_set, crossings_along_edge, project};
use linkcensus::APEX;

fn main() {
    let fixture = fixtures::by_count(3).expect("bundled");
    let emb = &fixture.embedding;
    let imm = project(emb, APEX).expect("projection");
    let crossings = crossing_set(&imm, emb).expect("crossings");

    println!("crossings: {} (always odd, at most 9)", crossings.len());
    for c in &crossings {
        println!(
            "  {} passes over {} at ray {}",
            c.over, c.under, c.direction
        );
    }

    let free = crossing_free_edges(&crossings, imm.edges());
    println!(
        "crossing-free edges: {} (always at least two)",
        free.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")
    );

    // Order the crossings along one edge by their exact position keys.
    if let Some(edge) = imm
        .edges()
        .iter()
        .find(|e| crossings.iter().filter(|c| c.involves(**e)).count() > 1)
    {
        println!("walking edge {edge} from vertex {}:", edge.odd());
        for (pos, over, other) in crossings_along_edge(&crossings, *edge) {
            println!(
                "  at {pos}: {}",
                if over { format!("over {other}") } else { format!("under {other}") }
            );
        }
    }
}
