//! The two-translate base case: the boundaries of two properly overlapping
//! translates cross in exactly two points, found through the chord
//! construction perpendicular to the translation direction. At each
//! crossing the two normals are neither equal nor opposite, and each
//! translate keeps more than half of its Gauss circle outside the other.
//!
//! Run with: cargo run --example base_case

use std::f64::consts::PI;

use convex_translates::body::{SupportBody, SupportFunction, Vec2};
use convex_translates::intersection::{
    outside_gauss_measure, pair_boundary_points, verify_nonparallel_normals, PairCrossing,
};

fn main() {
    // A gently wavy body and a translate of it.
    let shape = SupportFunction::new(1.0, vec![(0.0, 0.0), (0.06, -0.02), (0.0, 0.025)]);
    let b1 = SupportBody::new(shape, Vec2::ZERO).expect("valid body");
    let b2 = b1.translated_to(Vec2::new(0.8, 0.35));

    match pair_boundary_points(&b1, &b2).expect("translates share a shape") {
        PairCrossing::TwoPoints(p1, p2) => {
            println!("boundary crossings:");
            for p in [p1, p2] {
                let (n1, n2) = verify_nonparallel_normals(&b1, &b2, p).expect("normals differ");
                println!(
                    "  ({:+.9}, {:+.9})  normals {:.6} / {:.6} rad (margin from parallel {:.3e})",
                    p.x,
                    p.y,
                    n1.radians(),
                    n2.radians(),
                    n1.parallel_margin(n2)
                );
                println!(
                    "    containment gaps: b1 {:+.2e}, b2 {:+.2e}",
                    b1.contains(p).gap,
                    b2.contains(p).gap
                );
            }
        }
        other => println!("unexpected crossing structure: {other:?}"),
    }

    let m12 = outside_gauss_measure(&b1, &b2).expect("proper overlap");
    let m21 = outside_gauss_measure(&b2, &b1).expect("proper overlap");
    println!("outside Gauss measures: {m12:.9} and {m21:.9} (both above π = {PI:.9})");
}
