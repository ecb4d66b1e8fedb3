//! Chord function of a body perpendicular to a direction w: strictly
//! unimodal, zero at both support points, with a unique maximum η. Every
//! length in (0, η) is attained by exactly two chords; both are located and
//! checked here, and the profile is written as an SVG graph.
//!
//! Run with: cargo run --example chord_profile

use convex_translates::body::{Angle, SupportBody, SupportFunction, Vec2};
use convex_translates::chords::max_chord;
use convex_translates::svg::render_chord_profile;

fn main() {
    let shape = SupportFunction::new(1.0, vec![(0.0, 0.0), (0.07, 0.03), (0.0, -0.02)]);
    let body = SupportBody::new(shape, Vec2::ZERO).expect("valid body");
    let w = Angle::new(1.1);

    let profile = max_chord(&body, w);
    println!(
        "direction w = {:.3} rad: maximum chord η = {:.9} at t = {:.9}",
        w.radians(),
        profile.eta(),
        profile.t_max()
    );

    let r = 0.7 * profile.eta();
    let (c1, c2) = profile.chords_of_length(r).expect("r inside (0, η)");
    println!("the two chords of length {r:.9}:");
    for c in [&c1, &c2] {
        println!(
            "  offset s = {:+.9}, endpoints ({:+.6}, {:+.6}) .. ({:+.6}, {:+.6}), length {:.12}",
            c.s, c.p.x, c.p.y, c.q.x, c.q.y, c.length
        );
    }

    let samples = profile.samples(1001);
    let increasing = samples.windows(2).take_while(|w| w[0].1 < w[1].1).count();
    println!(
        "profile rises for {increasing} samples, then falls for {}",
        1000 - increasing
    );

    let out = "chord_profile.svg";
    std::fs::write(
        out,
        render_chord_profile(&samples, profile.t_max(), profile.eta()),
    )
    .expect("write figure");
    println!("graph written to {out}");
}
