//! Intersect three unit disks centered at the vertices of an equilateral
//! triangle of side 1 (the Reuleaux configuration) and inspect the result:
//! three singular vertices, three edges of Gauss measure π/3, and a clean
//! partition of the circle of normals.
//!
//! Run with: cargo run --example reuleaux

use convex_translates::body::{SupportFunction, Vec2};
use convex_translates::intersection::Arrangement;
use convex_translates::svg::render_arrangement;

fn main() {
    let h = 3.0f64.sqrt() / 2.0;
    let arr = Arrangement::new(
        SupportFunction::disk(1.0),
        vec![Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(0.5, h)],
    )
    .expect("valid arrangement");

    let shape = arr.intersect();
    println!("status: {:?}", shape.status);
    println!("singular vertices ({}):", shape.vertices.len());
    for v in &shape.vertices {
        println!(
            "  ({:+.6}, {:+.6})  translates {:?}  normal cone {:.6} rad",
            v.point.x,
            v.point.y,
            v.pair,
            v.cone_measure()
        );
    }
    println!("edges ({}):", shape.edges.len());
    for e in &shape.edges {
        println!("  owner {}  Gauss measure {:.6} rad", e.owner, e.measure());
    }
    println!(
        "Gauss partition residual: {:.3e}",
        shape.gauss_partition_residual()
    );

    let report = arr.verify_theorem(true).expect("hypotheses hold");
    println!(
        "singularity count check: n = {}, |sing| = {}, pass = {}",
        report.n, report.vertex_count, report.pass
    );

    let out = "reuleaux.svg";
    std::fs::write(out, render_arrangement(&arr, &shape)).expect("write figure");
    println!("figure written to {out}");
}
