//! Property tests for the geometric invariants: Gauss round trips, support
//! inequalities, chord behavior, measure positivity and the inductive
//! growth of the singularity count.

use std::f64::consts::{PI, TAU};

use proptest::prelude::*;

use convex_translates::body::{Angle, SupportBody, Vec2};
use convex_translates::chords::max_chord;
use convex_translates::fuzz::{random_arrangement, random_body, FuzzConfig};
use convex_translates::intersection::{
    outside_gauss_measure, pair_boundary_points, verify_nonparallel_normals, IntersectionStatus,
    PairCrossing,
};
use convex_translates::oracle;

fn body_from_seed(seed: usize) -> SupportBody {
    let cfg = FuzzConfig::default();
    let mut rng = cfg.trial_rng(seed);
    random_body(&mut rng, &cfg)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn angle_normalization_is_idempotent(x in -1e6f64..1e6) {
        let once = Angle::new(x);
        let twice = Angle::new(once.radians());
        prop_assert_eq!(once.radians(), twice.radians());
        prop_assert!((0.0..TAU).contains(&once.radians()));
    }

    #[test]
    fn angle_arcs_respect_wraparound(a in 0.0f64..TAU, d in 0.0f64..TAU) {
        let from = Angle::new(a);
        let to = Angle::new(a + d);
        // ccw arc length reproduces the offset, up to fp on the wrap.
        prop_assert!((from.ccw_to(to) - d).abs() < 1e-9 || (from.ccw_to(to) - d).abs() > TAU - 1e-9);
        let mid = from.ccw_midpoint(to);
        prop_assert!(from.ccw_contains(to, mid));
        prop_assert!((from.dist(to) - d.min(TAU - d)).abs() < 1e-9);
    }

    #[test]
    fn gauss_round_trip(seed in 0usize..256, theta in 0.0f64..TAU) {
        let body = body_from_seed(seed);
        let t = Angle::new(theta);
        let p = body.boundary_point(t);
        let back = body.gauss_map(p).unwrap();
        prop_assert!(back.dist(t) < 1e-9);
    }

    #[test]
    fn support_inequality(seed in 0usize..128, theta in 0.0f64..TAU, psi in 0.0f64..TAU) {
        let body = body_from_seed(seed);
        let support = body.support(Angle::new(theta));
        let q = body.boundary_point(Angle::new(psi));
        prop_assert!(q.dot(Angle::new(theta).unit()) <= support + 1e-12);
    }

    #[test]
    fn segments_between_boundary_points_stay_inside(
        seed in 0usize..64,
        t1 in 0.0f64..TAU,
        t2 in 0.0f64..TAU,
    ) {
        let body = body_from_seed(seed);
        let a = body.boundary_point(Angle::new(t1));
        let b = body.boundary_point(Angle::new(t2));
        for frac in [0.25, 0.5, 0.75] {
            let p = a + (b - a) * frac;
            prop_assert!(body.contains(p).is_inside());
        }
    }

    #[test]
    fn chords_are_perpendicular_and_on_boundary(
        seed in 0usize..64,
        w in 0.0f64..TAU,
        t in 0.01f64..0.99,
    ) {
        let body = body_from_seed(seed);
        let profile = max_chord(&body, Angle::new(w));
        let c = profile.chord_at(t);
        prop_assert!(body.contains(c.p).is_boundary());
        prop_assert!(body.contains(c.q).is_boundary());
        prop_assert!((c.q - c.p).dot(Angle::new(w).unit()).abs() < 1e-9);
    }

    #[test]
    fn translation_equivariance(seed in 0usize..64, dx in -2.0f64..2.0, dy in -2.0f64..2.0, theta in 0.0f64..TAU) {
        let body = body_from_seed(seed);
        let moved = body.translated_to(body.center() + Vec2::new(dx, dy));
        let t = Angle::new(theta);
        let p = body.boundary_point(t);
        prop_assert!(moved.boundary_point(t).dist(p + Vec2::new(dx, dy)) < 1e-12);
    }
}

#[test]
fn chord_profiles_have_zero_boundary_values() {
    for seed in 0..32 {
        let body = body_from_seed(seed);
        let profile = max_chord(&body, Angle::new(seed as f64 * 0.2));
        assert!(profile.chord_at(0.0).length < 1e-9);
        assert!(profile.chord_at(1.0).length < 1e-9);
        assert!(profile.t_max() > 0.0 && profile.t_max() < 1.0);
        assert!(profile.eta() > 0.0);
    }
}

/// 500 random proper pairs: normals never parallel at crossings and the
/// outside Gauss measure always exceeds π.
#[test]
fn fuzz_pairs_nonparallel_normals_and_outside_measure() {
    let cfg = FuzzConfig::default();
    for trial in 0..500usize {
        let mut rng = cfg.trial_rng(40_000 + trial);
        let b1 = random_body(&mut rng, &cfg);
        let (_, h_min) = b1.shape().certified_minima();
        use rand::Rng;
        let r = 0.9 * h_min * rng.gen_range(0.05f64..=1.0);
        let phi = rng.gen_range(0.0..TAU);
        let b2 = b1.translated_to(Vec2::new(r * phi.cos(), r * phi.sin()));
        match pair_boundary_points(&b1, &b2).unwrap() {
            PairCrossing::TwoPoints(p1, p2) => {
                verify_nonparallel_normals(&b1, &b2, p1).expect("normals differ");
                verify_nonparallel_normals(&b1, &b2, p2).expect("normals differ");
            }
            other => panic!("trial {trial}: {other:?}"),
        }
        let m = outside_gauss_measure(&b1, &b2).unwrap();
        assert!(m > PI, "trial {trial}: outside measure {m}");
    }
}

/// Nested prefixes of a non-redundant arrangement grow one singularity per
/// translate, the observational form of the inductive step.
#[test]
fn monotone_growth_of_singularities() {
    let cfg = FuzzConfig {
        n_range: (5, 7),
        ..FuzzConfig::default()
    };
    let mut checked = 0;
    for trial in 0..6 {
        let mut rng = cfg.trial_rng(50_000 + trial);
        let arr = random_arrangement(&mut rng, &cfg).expect("generation succeeds");
        for k in 2..=arr.n() {
            let prefix = arr.prefix(k);
            let shape = prefix.intersect();
            // Only prefixes that themselves satisfy the hypotheses count.
            if shape.status != IntersectionStatus::ProperBody
                || !shape.degeneracies.is_empty()
                || shape.redundancy.iter().any(|r| *r)
            {
                continue;
            }
            assert_eq!(shape.vertices.len(), k, "trial {trial}, prefix {k}");
            checked += 1;
        }
    }
    assert!(checked >= 12, "too few verifiable prefixes ({checked})");
}

/// Oracle tag soundness: every tag-change vertex of a clipped arrangement
/// lies on the boundaries of both named translates under the analytic
/// classification.
#[test]
fn oracle_tag_changes_lie_on_both_boundaries() {
    let cfg = FuzzConfig {
        n_range: (3, 5),
        ..FuzzConfig::default()
    };
    for trial in 0..4 {
        let mut rng = cfg.trial_rng(60_000 + trial);
        let arr = random_arrangement(&mut rng, &cfg).expect("generation succeeds");
        let bodies = arr.bodies();
        let m = 4096;
        let mut poly = oracle::polygonize(&bodies[0], m);
        for (i, b) in bodies.iter().enumerate().skip(1) {
            poly = oracle::clip(&poly, &oracle::polygonize(b, m), i);
        }
        let tol = TAU * bodies[0].diameter() / m as f64;
        let len = poly.vertices.len();
        for i in 0..len {
            let incoming = poly.edge_tags[(i + len - 1) % len].unwrap_or(0);
            let outgoing = poly.edge_tags[i].unwrap_or(0);
            if incoming == outgoing {
                continue;
            }
            let p = poly.vertices[i];
            for owner in [incoming, outgoing] {
                let gap = bodies[owner].contains(p).gap.abs();
                assert!(gap < tol, "trial {trial}: tag vertex gap {gap}");
            }
        }
    }
}

/// Disk scenarios agree across the analytic, arc and polygonal pipelines.
#[test]
fn disk_scenarios_agree_across_pipelines() {
    use convex_translates::body::SupportFunction;
    use convex_translates::gallery::{run_scenario, scenario};
    use convex_translates::intersection::Arrangement;

    let configs = [
        (
            "ideal_three_disks",
            vec![
                Vec2::new(0.0, 0.0),
                Vec2::new(1.0, 0.0),
                Vec2::new(0.5, 3.0f64.sqrt() / 2.0),
            ],
        ),
        (
            "redundant_disks",
            vec![
                Vec2::new(0.0, 0.0),
                Vec2::new(1.0, 0.0),
                Vec2::new(0.5, 0.0),
            ],
        ),
    ];
    for (name, centers) in configs {
        let arc_count = run_scenario(&scenario(name).unwrap()).unwrap().actual;
        let arr = Arrangement::new(SupportFunction::disk(1.0), centers.clone()).unwrap();
        let analytic = arr.intersect().vertices.len();
        let mut poly = oracle::polygonize(&arr.body(0), 4096);
        for i in 1..arr.n() {
            poly = oracle::clip(&poly, &oracle::polygonize(&arr.body(i), 4096), i);
        }
        let oracle_count = oracle::oracle_singularities(&poly).len();
        assert_eq!(arc_count, analytic, "{name}");
        assert_eq!(analytic, oracle_count, "{name}");
    }

    // Tangency collapses to a dot: the arc pipeline counts one singular
    // point, the analytic pipeline reports the single-point status.
    let tangent = run_scenario(&scenario("tangent_disks").unwrap()).unwrap();
    assert_eq!(tangent.actual, 1);
    let arr = Arrangement::new(
        SupportFunction::disk(1.0),
        vec![Vec2::ZERO, Vec2::new(2.0, 0.0)],
    )
    .unwrap();
    assert_eq!(arr.intersect().status, IntersectionStatus::SinglePoint);
}

/// Chord lengths agree with a direct polygonal line clip at the same
/// offset.
#[test]
fn chord_lengths_match_polygonal_clipping() {
    for seed in 0..24 {
        let body = body_from_seed(70_000 + seed);
        let w = Angle::new(seed as f64 * 0.37 + 0.11);
        let profile = max_chord(&body, w);
        let poly = oracle::polygonize(&body, 4096);
        let u = w.unit();
        for t in [0.15, 0.4, 0.55, 0.8] {
            let c = profile.chord_at(t);
            // Independent oracle: clip the dense polygon with the line
            // ⟨x, u(w)⟩ = s and measure the cut segment.
            let mut hits: Vec<f64> = Vec::new();
            let n = poly.vertices.len();
            for i in 0..n {
                let a = poly.vertices[i];
                let b = poly.vertices[(i + 1) % n];
                let da = a.dot(u) - c.s;
                let db = b.dot(u) - c.s;
                if da.signum() != db.signum() {
                    let frac = da / (da - db);
                    let p = a + (b - a) * frac;
                    hits.push(p.dot(w.unit_perp()));
                }
            }
            assert_eq!(hits.len(), 2, "seed {seed}, t {t}");
            let oracle_len = (hits[0] - hits[1]).abs();
            assert!(
                (oracle_len - c.length).abs() < 1e-4,
                "seed {seed}, t {t}: {oracle_len} vs {}",
                c.length
            );
        }
    }
}

/// Vertex-level classification invariants on random arrangements: each
/// singular vertex lies on the boundaries of exactly its generating pair
/// and strictly inside every other translate; edge interiors lie on the
/// owner boundary only. Vertex positions also match the tagged-clipping
/// oracle within the module tolerance.
#[test]
fn vertex_and_edge_classification_invariants() {
    let cfg = FuzzConfig {
        n_range: (4, 6),
        ..FuzzConfig::default()
    };
    for trial in 0..4 {
        let mut rng = cfg.trial_rng(80_000 + trial);
        let arr = random_arrangement(&mut rng, &cfg).expect("generation succeeds");
        let shape = arr.intersect();
        let bodies = arr.bodies();
        for v in &shape.vertices {
            for (l, b) in bodies.iter().enumerate() {
                let c = b.contains(v.point);
                if l == v.pair.0 || l == v.pair.1 {
                    assert!(
                        c.is_boundary(),
                        "trial {trial}: vertex not on pair boundary"
                    );
                } else {
                    assert!(c.is_interior(), "trial {trial}: vertex not interior to {l}");
                }
            }
            let m = v.cone_measure();
            assert!(m > 0.0 && m < PI, "trial {trial}: cone measure {m}");
        }
        assert_eq!(shape.vertices.len(), shape.edges.len());
        for e in &shape.edges {
            let (a, b) = e.gauss_interval;
            let span = a.ccw_to(b);
            assert!(span < PI, "trial {trial}: edge measure {span}");
            for k in 1..8 {
                let theta = Angle::new(a.radians() + span * k as f64 / 8.0);
                let p = bodies[e.owner].boundary_point(theta);
                for (l, body) in bodies.iter().enumerate() {
                    if l == e.owner {
                        assert!(body.contains(p).is_boundary());
                    } else {
                        assert!(body.contains(p).is_interior());
                    }
                }
            }
        }
        // Vertex positions match the polygonal oracle at 4096-gon
        // resolution within 1e-4.
        let analytic: Vec<Vec2> = shape.vertices.iter().map(|v| v.point).collect();
        let (count, dist) = convex_translates::fuzz::oracle_vertices(&arr, &cfg, &analytic);
        assert_eq!(count, analytic.len());
        assert!(dist < 1e-4, "trial {trial}: oracle distance {dist}");
    }
}

/// A shared rotation must flow through the whole pipeline: the rotated
/// arrangement has the same singularity structure as the unrotated one,
/// rotated.
#[test]
fn shared_rotation_preserves_structure() {
    use convex_translates::body::SupportFunction;
    use convex_translates::intersection::Arrangement;

    let shape = SupportFunction::new(1.0, vec![(0.0, 0.0), (0.05, -0.03), (0.0, 0.02)]);
    let rot = Angle::new(0.7);
    let translations = vec![Vec2::new(0.0, 0.0), Vec2::new(0.5, 0.1), Vec2::new(0.2, 0.45)];
    let rotated_translations: Vec<Vec2> = translations.iter().map(|t| t.rotate(rot)).collect();

    let plain = Arrangement::new(shape.clone(), translations).unwrap();
    let turned = Arrangement::with_rotation(shape, rot, rotated_translations).unwrap();

    let s0 = plain.intersect();
    let s1 = turned.intersect();
    assert_eq!(s0.status, s1.status);
    assert_eq!(s0.vertices.len(), s1.vertices.len());
    assert!(s1.gauss_partition_residual() < 1e-7);
    // Each rotated vertex coincides with a plain vertex rotated.
    for v in &s0.vertices {
        let target = v.point.rotate(rot);
        let nearest = s1
            .vertices
            .iter()
            .map(|w| w.point.dist(target))
            .fold(f64::INFINITY, f64::min);
        assert!(nearest < 1e-9, "vertex mismatch {nearest}");
    }
    let r0 = plain.verify_theorem(true).unwrap();
    let r1 = turned.verify_theorem(true).unwrap();
    assert!(r0.pass && r1.pass);
}
