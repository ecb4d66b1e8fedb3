//! Walk the sharpness gallery: each scenario drops exactly one hypothesis
//! of the singularity-count theorem and the count deviates from n exactly
//! as stated. Writes one figure per scenario.
//!
//! Run with: cargo run --example gallery_tour

use convex_translates::gallery::{run_scenario, scenario, SCENARIO_NAMES};
use convex_translates::svg::render_scenario;

fn main() {
    let dir = std::path::Path::new("gallery-out");
    std::fs::create_dir_all(dir).expect("create output dir");
    println!("{:<22} {:>8} {:>8}  pass", "scenario", "expected", "actual");
    let mut all = true;
    for name in SCENARIO_NAMES {
        let s = scenario(name).expect("known scenario");
        let outcome = run_scenario(&s).expect("scenario runs");
        println!(
            "{:<22} {:>8} {:>8}  {}",
            outcome.scenario, outcome.expected, outcome.actual, outcome.pass
        );
        if !outcome.flags.is_empty() {
            println!("{:<22} flags: {:?}", "", outcome.flags);
        }
        std::fs::write(
            dir.join(format!("{name}.svg")),
            render_scenario(&s, &outcome),
        )
        .expect("write figure");
        all &= outcome.pass;
    }
    println!("figures written to {}", dir.display());
    assert!(all, "every scenario must match its stated count");
}
