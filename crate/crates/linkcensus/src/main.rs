//! Command-line front end: every subcommand is a thin wrapper over the
//! library (see the crate examples for the same operations as code).

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use linkcensus::error::Result;
use linkcensus::io::EmbeddingFile;
use linkcensus::linking::census;
use linkcensus::matroid::{
    all_circuits, circuit_geometry_correspondence, close_under_negation, verify_weak_elimination,
};
use linkcensus::sample::SampleConfig;
use linkcensus::sphere::{crossing_set, project};
use linkcensus::sweep::{find_witnesses, run_sweep};
use linkcensus::{fixtures, APEX};

/// Environment variable overriding the sweep seed.
const SEED_ENV: &str = "LINKCENSUS_SEED";

#[derive(Parser)]
#[command(name = "linkcensus", version, about = "Exact link census of straight-edge spatial graph embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Print the link census of an embedding file.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print the spherical immersion and its crossings.
    Project {
        file: PathBuf,
        #[arg(long, default_value_t = APEX)]
        center: u8,
    },
    /// Print the 21 canonical circuits, the circuit-geometry
    /// correspondence, and the weak-elimination report.
    Matroid { file: PathBuf },
    /// Run a seeded random sweep; exit nonzero if any violation is found.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        count: u64,
        #[arg(long, default_value_t = 1000)]
        bound: i64,
        /// Worker threads (default: all cores). The report is identical for
        /// any value.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Search for witness embeddings per nontrivial-link count and write
    /// them as embedding files.
    Witness {
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5")]
        targets: Vec<u32>,
        #[arg(long, default_value_t = 2000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Validate the bundled reference embeddings.
    Fixtures {
        #[arg(long)]
        verify: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn env_seed(default: u64) -> u64 {
    match std::env::var(SEED_ENV) {
        Ok(value) => value.parse().unwrap_or_else(|_| {
            eprintln!("warning: ignoring unparsable {SEED_ENV}={value:?}");
            default
        }),
        Err(_) => default,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { file, format } => {
            let emb = EmbeddingFile::load(&file)?;
            let report = census(&emb.embedding)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                ),
                Format::Table => {
                    println!("{:<10} {:<14} {:>8} {:>9}", "triangle", "quadrilateral", "linking", "type");
                    for e in &report.entries {
                        println!(
                            "{:<10} {:<14} {:>8} {:>9}",
                            e.triangle_label(),
                            e.quadrilateral.label(),
                            e.linking_number,
                            format!("{:?}", e.link_type)
                        );
                    }
                    println!(
                        "nontrivial: {}   total linking: {}   torus links: {}",
                        report.nontrivial_count, report.total_linking, report.torus24_count
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Project { file, center } => {
            let emb = EmbeddingFile::load(&file)?;
            let imm = project(&emb.embedding, center)?;
            let crossings = crossing_set(&imm, &emb.embedding)?;
            let out = serde_json::json!({
                "immersion": imm,
                "crossings": crossings,
                "crossing_count": crossings.len(),
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Matroid { file } => {
            let emb = EmbeddingFile::load(&file)?;
            let circuits = all_circuits(&emb.embedding)?;
            let correspondence = circuit_geometry_correspondence(&emb.embedding)?;
            let elimination = verify_weak_elimination(&close_under_negation(&circuits));
            let out = serde_json::json!({
                "circuits": circuits,
                "correspondence": correspondence,
                "weak_elimination": {
                    "instances": elimination.instances,
                    "witnesses": elimination.witnesses.len(),
                    "failures": elimination.failures,
                },
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            seed,
            count,
            bound,
            jobs,
        } => {
            let cfg = SampleConfig {
                seed: env_seed(seed),
                count,
                coordinate_bound: bound,
                ..SampleConfig::default()
            };
            cfg.validate()?;
            let stats = match jobs {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .expect("thread pool")
                    .install(|| run_sweep(&cfg)),
                None => run_sweep(&cfg),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&stats).expect("stats serialize")
            );
            if stats.violations.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("{} violation(s) found", stats.violations.len());
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Witness {
            targets,
            budget,
            seed,
            out_dir,
        } => {
            let targets: BTreeSet<u32> = targets.into_iter().collect();
            let cfg = SampleConfig {
                seed: env_seed(seed),
                ..SampleConfig::default()
            };
            let witnesses = find_witnesses(&targets, &cfg, budget);
            std::fs::create_dir_all(&out_dir)?;
            for (n, file) in &witnesses {
                let path = out_dir.join(format!("witness-{n}.json"));
                file.save(&path)?;
                println!(
                    "{}: {} nontrivial links ({})",
                    path.display(),
                    n,
                    file.metadata
                        .as_ref()
                        .and_then(|m| m.expected_linked_triangles.as_ref())
                        .map(|t| t.join(", "))
                        .unwrap_or_default()
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { verify } => {
            if verify {
                fixtures::verify_all()?;
                println!("all bundled fixtures verified");
            } else {
                for fixture in fixtures::all() {
                    let meta = fixture.metadata.as_ref().expect("fixtures carry metadata");
                    println!(
                        "{}: {} nontrivial links ({})",
                        meta.name.as_deref().unwrap_or("?"),
                        meta.expected_nontrivial_count.unwrap_or(0),
                        meta.expected_linked_triangles
                            .as_ref()
                            .map(|t| t.join(", "))
                            .unwrap_or_default()
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
