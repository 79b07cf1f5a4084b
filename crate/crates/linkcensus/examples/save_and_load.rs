//! Build an embedding from explicit rational coordinates, save it as JSON,
//! load it back with expectations, and analyze it.
//!
//!     cargo run --example save_and_load

use std::collections::BTreeMap;

use linkcensus::embedding::Embedding;
use linkcensus::io::{EmbeddingFile, Metadata};
use linkcensus::linking::census;
use linkcensus::{BuiltinGraph, Graph, Vec3Q};

fn main() -> linkcensus::Result<()> {
    // Coordinates may be arbitrary rationals, written "p/q" in files.
    let coords: BTreeMap<u8, Vec3Q> = [
        (1u8, ("3", "-4", "-6")),
        (2, ("-9", "7", "-5")),
        (3, ("-8", "-9", "-8")),
        (4, ("3", "-3", "4")),
        (5, ("0", "-3", "-1")),
        (6, ("-5", "2", "1")),
        (7, ("7/2", "4", "-5/2")),
    ]
    .into_iter()
    .map(|(v, (x, y, z))| {
        Ok((
            v,
            Vec3Q::new(x.parse()?, y.parse()?, z.parse()?),
        ))
    })
    .collect::<linkcensus::Result<_>>()?;

    let emb = Embedding::new(Graph::builtin(BuiltinGraph::K331), coords)?;
    let report = census(&emb)?;
    println!(
        "census: {} nontrivial links ({})",
        report.nontrivial_count,
        report.linked_triangles().join(", ")
    );

    // Record the census outcome as expectations and round-trip the file.
    let metadata = Metadata {
        name: Some("hand-built".into()),
        expected_nontrivial_count: Some(report.nontrivial_count),
        expected_linked_triangles: Some(report.linked_triangles()),
    };
    let file = EmbeddingFile::new(emb, Some(metadata));
    let path = std::env::temp_dir().join("linkcensus-example.json");
    file.save(&path)?;
    println!("saved {}", path.display());

    let loaded = EmbeddingFile::load_verified(&path)?;
    assert_eq!(loaded, file);
    println!("reloaded and verified against its recorded expectations");
    std::fs::remove_file(&path).ok();
    Ok(())
}
