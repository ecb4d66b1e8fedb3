//! Gauss-measure bookkeeping on a random arrangement: every overlapping
//! pair leaves more than half of its normal circle outside the other
//! translate, every intersection edge spans less than half, and edges plus
//! vertex normal cones tile the circle exactly.
//!
//! Run with: cargo run --example gauss_measures

use std::f64::consts::PI;

use convex_translates::fuzz::{random_arrangement, FuzzConfig};
use convex_translates::intersection::outside_gauss_measure;

fn main() {
    let cfg = FuzzConfig {
        seed: 7,
        n_range: (4, 4),
        ..FuzzConfig::default()
    };
    let mut rng = cfg.trial_rng(0);
    let arr = random_arrangement(&mut rng, &cfg).expect("generation succeeds");
    let bodies = arr.bodies();

    println!("outside Gauss measures (all must exceed π):");
    for i in 0..arr.n() {
        for j in 0..arr.n() {
            if i != j {
                let m = outside_gauss_measure(&bodies[i], &bodies[j]).expect("proper overlap");
                println!(
                    "  bd({i}) outside translate {j}: {m:.9}  (π + {:+.3e})",
                    m - PI
                );
            }
        }
    }

    let shape = arr.intersect();
    println!("edge Gauss measures (all must stay below π):");
    let mut total = 0.0;
    for e in &shape.edges {
        println!(
            "  owner {}: {:.9}  (π − {:+.3e})",
            e.owner,
            e.measure(),
            PI - e.measure()
        );
        total += e.measure();
    }
    for v in &shape.vertices {
        total += v.cone_measure();
    }
    println!(
        "edges + vertex cones sum to {total:.12} = 2π {:+.3e}",
        total - 2.0 * PI
    );
}
