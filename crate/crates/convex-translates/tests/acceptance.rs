//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see the
//! lines; every tolerance is pinned here.

use std::f64::consts::PI;
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use convex_translates::body::{Angle, SupportBody, Vec2};
use convex_translates::chords::max_chord;
use convex_translates::fuzz::{random_body, run_campaign, FuzzConfig, VerificationReport};
use convex_translates::gallery::{run_scenario, scenario, SCENARIO_NAMES};
use convex_translates::intersection::{outside_gauss_measure, pair_boundary_points, PairCrossing};
use convex_translates::oracle::{oracle_chords, polygonize};

/// The headline campaign: 200 strict-mode arrangements, n ∈ [2, 7], seed 1.
fn campaign() -> &'static (VerificationReport, f64) {
    static CAMPAIGN: OnceLock<(VerificationReport, f64)> = OnceLock::new();
    CAMPAIGN.get_or_init(|| {
        let cfg = FuzzConfig::default();
        assert_eq!((cfg.seed, cfg.trials, cfg.n_range), (1, 200, (2, 7)));
        let t0 = Instant::now();
        let report = run_campaign(&cfg).expect("campaign generation succeeds");
        (report, t0.elapsed().as_secs_f64())
    })
}

fn pass_line(name: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {name}: {} ({detail})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{name}: {detail}");
}

#[test]
fn criterion_main_theorem_fuzz() {
    let (report, secs) = campaign();
    let count_ok = report
        .records
        .iter()
        .all(|r| r.count_ok && r.vertex_count == r.n);
    let pass = report.trials == 200 && report.failures == 0 && count_ok && *secs < 120.0;
    pass_line(
        "main-theorem-fuzz",
        pass,
        &format!(
            "{}/{} trials with |sing| = n, {:.1}s",
            report.passes, report.trials, secs
        ),
    );
}

#[test]
fn criterion_base_case_pair_points() {
    // 100 random (body, translation) pairs with proper overlap.
    let cfg = FuzzConfig::default();
    let mut worst_gap: f64 = 0.0;
    for trial in 0..100u64 {
        let mut rng = cfg.trial_rng(10_000 + trial as usize);
        let b1 = random_body(&mut rng, &cfg);
        let (_, h_min) = b1.shape().certified_minima();
        use rand::Rng;
        let r = 0.9 * h_min * rng.gen_range(0.05f64..=1.0);
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let b2 = b1.translated_to(Vec2::new(r * phi.cos(), r * phi.sin()));
        match pair_boundary_points(&b1, &b2).expect("shared shape") {
            PairCrossing::TwoPoints(p1, p2) => {
                for p in [p1, p2] {
                    for b in [&b1, &b2] {
                        worst_gap = worst_gap.max(b.contains(p).gap.abs());
                    }
                }
            }
            other => panic!("trial {trial}: expected two points, got {other:?}"),
        }
    }
    // Unit disks at distance 1 cross at (0.5, ±√3/2).
    let d1 = SupportBody::unit_disk(Vec2::ZERO);
    let d2 = SupportBody::unit_disk(Vec2::new(1.0, 0.0));
    let disk_err = match pair_boundary_points(&d1, &d2).unwrap() {
        PairCrossing::TwoPoints(p1, p2) => {
            let y = 3.0f64.sqrt() / 2.0;
            p1.dist(Vec2::new(0.5, y)).max(p2.dist(Vec2::new(0.5, -y)))
        }
        other => panic!("expected two points, got {other:?}"),
    };
    let pass = worst_gap < 1e-8 && disk_err < 1e-9;
    pass_line(
        "base-case",
        pass,
        &format!("max boundary gap {worst_gap:.2e}, disk error {disk_err:.2e}"),
    );
}

#[test]
fn criterion_two_chords_of_given_length() {
    let cfg = FuzzConfig::default();
    let mut worst_len_err: f64 = 0.0;
    for trial in 0..100u64 {
        let mut rng = cfg.trial_rng(20_000 + trial as usize);
        let body = random_body(&mut rng, &cfg);
        use rand::Rng;
        let w = Angle::new(rng.gen_range(0.0..std::f64::consts::TAU));
        let profile = max_chord(&body, w);
        let r = profile.eta() * rng.gen_range(0.05f64..=0.95);
        let (c1, c2) = profile.chords_of_length(r).expect("r inside (0, eta)");
        worst_len_err = worst_len_err
            .max((c1.length - r).abs())
            .max((c2.length - r).abs());
        // Dense scan: 1e5 offsets across an inscribed 4096-gon cross the
        // requested length exactly twice.
        let poly = polygonize(&body, 4096);
        let scan = oracle_chords(&poly, w, 100_000);
        let crossings = scan
            .windows(2)
            .filter(|s| (s[0].1 - r).signum() != (s[1].1 - r).signum())
            .count();
        assert_eq!(crossings, 2, "trial {trial}: {crossings} crossings");
    }
    let pass = worst_len_err < 1e-9;
    pass_line(
        "two-chords-of-length",
        pass,
        &format!("max |length − r| = {worst_len_err:.2e}, dense scans all found 2 crossings"),
    );
}

#[test]
fn criterion_unimodal_chord_profiles() {
    let cfg = FuzzConfig::default();
    for trial in 0..100u64 {
        let mut rng = cfg.trial_rng(30_000 + trial as usize);
        let body = random_body(&mut rng, &cfg);
        use rand::Rng;
        let w = Angle::new(rng.gen_range(0.0..std::f64::consts::TAU));
        let lengths: Vec<f64> = max_chord(&body, w)
            .samples(1001)
            .into_iter()
            .map(|(_, l)| l)
            .collect();
        let peak = lengths
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap()
            .0;
        for i in 1..=peak {
            assert!(
                lengths[i] > lengths[i - 1],
                "trial {trial}: not strictly increasing at {i}"
            );
        }
        for i in (peak + 1)..lengths.len() {
            assert!(
                lengths[i] < lengths[i - 1],
                "trial {trial}: not strictly decreasing at {i}"
            );
        }
    }
    // Disk profile against circle algebra: length(s) = 2√(1 − s²).
    let disk = SupportBody::unit_disk(Vec2::ZERO);
    let profile = max_chord(&disk, Angle::new(PI / 2.0));
    let mut worst: f64 = 0.0;
    for (t, len) in profile.samples(1001) {
        let s = 1.0 - 2.0 * t;
        worst = worst.max((len - 2.0 * (1.0 - s * s).max(0.0).sqrt()).abs());
    }
    let pass = worst < 1e-6;
    pass_line(
        "unimodal-chord-profiles",
        pass,
        &format!("100 profiles strictly unimodal, disk error {worst:.2e}"),
    );
}

#[test]
fn criterion_gauss_measure_margins() {
    let (report, _) = campaign();
    let normal_margin = report.min_vertex_normal_margin;
    let outside = report.min_outside_measure;
    let edge = report.max_edge_measure;
    // Closed-form check: unit disks at distance 1 leave 4π/3 outside.
    let d1 = SupportBody::unit_disk(Vec2::ZERO);
    let d2 = SupportBody::unit_disk(Vec2::new(1.0, 0.0));
    let disk_err = (outside_gauss_measure(&d1, &d2).unwrap() - 4.0 * PI / 3.0).abs();
    let pass = normal_margin > 1e-6 && outside > PI + 1e-9 && edge < PI - 1e-9 && disk_err < 1e-9;
    pass_line(
        "gauss-measure-margins",
        pass,
        &format!(
            "normal margin {normal_margin:.2e}, outside ≥ π+{:.2e}, edge ≤ π−{:.2e}, disk 4π/3 error {disk_err:.2e}",
            outside - PI,
            PI - edge
        ),
    );
}

#[test]
fn criterion_gauss_partition() {
    let (report, _) = campaign();
    let residual = report.max_partition_residual;
    let pass = residual <= 1e-7;
    pass_line(
        "gauss-partition",
        pass,
        &format!(
            "max |2π − Σ measures| = {residual:.2e} over {} trials",
            report.trials
        ),
    );
}

#[test]
fn criterion_oracle_equivalence() {
    let (report, _) = campaign();
    let count_ok = report
        .records
        .iter()
        .all(|r| r.oracle_ok && r.oracle_count == r.vertex_count);
    let pass = count_ok && report.max_oracle_distance < 1e-3;
    pass_line(
        "oracle-equivalence",
        pass,
        &format!(
            "counts exact on {} trials, max vertex distance {:.2e}",
            report.trials, report.max_oracle_distance
        ),
    );
}

#[test]
fn criterion_gallery_counts() {
    let expected = [
        ("ideal_three_disks", 3),
        ("non_strict_shift", 0),
        ("non_smooth_triangles", 3),
        ("non_smooth_squares", 4),
        ("tangent_disks", 1),
        ("redundant_disks", 2),
    ];
    let mut all = true;
    for (name, count) in expected {
        let outcome = run_scenario(&scenario(name).unwrap()).unwrap();
        all &= outcome.actual == count && outcome.pass;
    }
    // The isometry configuration has no stated count; it must reproduce the
    // frozen oracle value and differ from the translate-case count of 2.
    let iso = run_scenario(&scenario("rotated_isometry").unwrap()).unwrap();
    all &= iso.pass && iso.actual == iso.expected && iso.actual != 2;
    all &= SCENARIO_NAMES.len() == 7;
    pass_line(
        "gallery-counts",
        all,
        &format!("six stated counts matched, isometry count {}", iso.actual),
    );
}

#[test]
fn criterion_fuzz_determinism() {
    // Two full CLI invocations of the headline campaign must emit
    // byte-identical reports. Wait for the shared in-process campaign
    // first so the timing criterion is not starved of cores, then overlap
    // the two subprocesses.
    let _ = campaign();
    let bin = env!("CARGO_BIN_EXE_convex-translates");
    let spawn = || {
        Command::new(bin)
            .args(["fuzz", "--seed", "1", "--trials", "200"])
            .stdout(std::process::Stdio::piped())
            .stderr(std::process::Stdio::null())
            .spawn()
            .expect("fuzz subcommand spawns")
    };
    let (first_child, second_child) = (spawn(), spawn());
    let first = first_child.wait_with_output().expect("first run finishes");
    let second = second_child
        .wait_with_output()
        .expect("second run finishes");
    assert!(first.status.success() && second.status.success());
    let pass = first.stdout == second.stdout && !first.stdout.is_empty();
    pass_line(
        "fuzz-determinism",
        pass,
        &format!("two runs, {} identical bytes", first.stdout.len()),
    );
}
