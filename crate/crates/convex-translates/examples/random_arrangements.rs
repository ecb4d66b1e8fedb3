//! Seeded random arrangements under the strict hypotheses, verified one by
//! one: the singularity count equals the number of translates, the
//! Gauss-measure inequalities hold with margin, and the polygonal oracle
//! reproduces the vertex set.
//!
//! Run with: cargo run --release --example random_arrangements [trials]

use convex_translates::fuzz::{run_campaign, FuzzConfig};

fn main() {
    let trials: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(25);
    let cfg = FuzzConfig {
        trials,
        ..FuzzConfig::default()
    };
    let t0 = std::time::Instant::now();
    let report = run_campaign(&cfg).expect("campaign runs");
    println!(
        "seed {}: {}/{} trials passed in {:.2?}",
        cfg.seed,
        report.passes,
        report.trials,
        t0.elapsed()
    );
    println!(
        "margins: vertex-normal ≥ {:.3e}, outside measure ≥ π + {:.3e}, edge measure ≤ π − {:.3e}",
        report.min_vertex_normal_margin,
        report.min_outside_measure - std::f64::consts::PI,
        std::f64::consts::PI - report.max_edge_measure,
    );
    println!(
        "Gauss partition residual ≤ {:.3e}, oracle vertex distance ≤ {:.3e}",
        report.max_partition_residual, report.max_oracle_distance
    );
    for r in report.records.iter().filter(|r| !r.pass) {
        println!("FAILED trial {}: digest {}", r.trial, r.digest);
    }
    assert!(report.all_pass());
}
