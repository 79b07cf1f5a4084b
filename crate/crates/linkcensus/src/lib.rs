//! Exact-arithmetic analysis of 2-component links in straight-edge
//! embeddings of small spatial graphs, chiefly the complete tri-partite
//! graph on 3+3+1 vertices.
//!
//! Given exact rational coordinates for the seven vertices, this crate
//! enumerates all nine (apex triangle, complementary quadrilateral) pairs,
//! computes each absolute linking number two independent ways, classifies
//! the link types, projects the bipartite subgraph onto a sphere around the
//! apex to analyze geodesic crossings with exact over/under data, extracts
//! the rank-4 oriented matroid of the configuration (chirotope and signed
//! circuits), and provides a seeded sweep harness that checks every
//! invariant on streams of random embeddings.
//!
//! There is no floating point anywhere on a decision path: every predicate
//! is an exact sign computation over arbitrary-precision rationals, and
//! degenerate inputs are structured errors rather than tie-breaks.
//!
//! The `examples/` directory of this crate walks through each capability;
//! the `linkcensus` binary exposes the same operations as subcommands.

pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod linking;
pub mod matroid;
pub mod patterns;
pub mod predicates;
pub mod rational;
pub mod sample;
pub mod sphere;
pub mod sweep;
pub mod vec3;

pub use embedding::Embedding;
pub use error::{Error, Result};
pub use graph::{BuiltinGraph, Cycle, Graph, Relabeling, VertexId, APEX, EVEN_CLASS, ODD_CLASS};
pub use io::EmbeddingFile;
pub use linking::{census, CensusReport, LinkEntry, LinkType};
pub use predicates::{general_position, orient3d, segment_pierces_triangle, PierceResult};
pub use rational::{Rational, Sign};
pub use sample::{sample_embedding, SampleConfig};
pub use sphere::{arcs_cross, crossing_set, project, Crossing, EdgeId, GeodesicArc, SphericalImmersion};
pub use sweep::{find_witnesses, run_sweep, AggregateStats};
pub use vec3::Vec3Q;
