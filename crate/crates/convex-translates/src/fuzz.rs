//! Seeded random instance generation and the verification campaign.
//!
//! The generator is rejection-free for bodies (harmonics are rescaled until
//! the curvature certificate accepts) and rejection-based for arrangements:
//! draws that violate the theorem's hypotheses or sit too close to a
//! degenerate configuration are redrawn. Every accepted instance is then put
//! through the strict theorem check and the tagged-clipping oracle.
//!
//! Randomness comes from ChaCha8 seeded with the campaign seed; trial `i`
//! uses stream `i`, so trials are reproducible in isolation and reports are
//! byte-identical across runs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::body::{SupportBody, SupportFunction, Vec2};
use crate::intersection::{Arrangement, IntersectionShape, IntersectionStatus};
use crate::io::{digest, ArrangementFile};
use crate::oracle;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FuzzError {
    /// Rejection sampling gave up; the configuration is over-tight.
    #[error("generation exhausted after {attempts} rejected draws")]
    GenerationExhausted { attempts: usize },
    #[error("invalid fuzz config: {0}")]
    InvalidConfig(String),
}

/// Coefficient budget for random support functions.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct HarmonicBudget {
    /// Highest harmonic order drawn (k = 2..=max_k; k = 1 only translates).
    pub max_k: usize,
    /// Magnitude cap before the k⁻² decay and the curvature rescale.
    pub coeff_cap: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub trials: usize,
    /// Inclusive range for the number of translates.
    pub n_range: (usize, usize),
    pub harmonic_budget: HarmonicBudget,
    /// Certified curvature-radius floor for generated bodies.
    pub rho_floor: f64,
    /// Generator-only genericity margin: vertices must clear every
    /// non-incident translate boundary by this distance.
    pub separation_margin: f64,
    /// Generator-only genericity margin for vertex normal separation.
    pub normal_margin: f64,
    /// Polygonal oracle resolution and comparison tolerance
    /// (diameter-normalized).
    pub oracle_resolution: usize,
    pub oracle_tolerance: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 1,
            trials: 200,
            n_range: (2, 7),
            harmonic_budget: HarmonicBudget {
                max_k: 6,
                coeff_cap: 0.35,
            },
            rho_floor: 0.3,
            separation_margin: 1e-5,
            normal_margin: 0.02,
            oracle_resolution: 4096,
            oracle_tolerance: 1e-3,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), FuzzError> {
        if self.trials == 0 {
            return Err(FuzzError::InvalidConfig("trials must be positive".into()));
        }
        if !(2 <= self.n_range.0 && self.n_range.0 <= self.n_range.1 && self.n_range.1 <= 16) {
            return Err(FuzzError::InvalidConfig(format!(
                "n_range {:?} must sit inside [2, 16]",
                self.n_range
            )));
        }
        if self.rho_floor.is_nan() || self.rho_floor <= 0.0 {
            return Err(FuzzError::InvalidConfig(
                "rho_floor must be positive".into(),
            ));
        }
        if self.harmonic_budget.max_k > 16 {
            return Err(FuzzError::InvalidConfig("max_k must be at most 16".into()));
        }
        Ok(())
    }

    /// The RNG for one trial: ChaCha8 on the campaign seed, stream = trial.
    pub fn trial_rng(&self, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial as u64);
        rng
    }
}

/// Random smooth strictly convex body: harmonics drawn uniformly within the
/// budget (k⁻² decay), then rescaled by the largest factor whose certified
/// curvature bound stays at or above the floor. Rescaling toward the disk
/// always succeeds, so construction never rejects.
pub fn random_body(rng: &mut impl Rng, cfg: &FuzzConfig) -> SupportBody {
    let a0 = 1.0;
    let mut coefficients = Vec::with_capacity(cfg.harmonic_budget.max_k);
    for k in 1..=cfg.harmonic_budget.max_k {
        if k == 1 {
            coefficients.push((0.0, 0.0));
            continue;
        }
        let cap = cfg.harmonic_budget.coeff_cap / (k * k) as f64;
        coefficients.push((rng.gen_range(-cap..=cap), rng.gen_range(-cap..=cap)));
    }
    let raw = SupportFunction::new(a0, coefficients.clone());
    let (rho_raw, h_raw) = raw.certified_minima();
    // Both certified minima are affine in the harmonic scale γ:
    // cert(γ) = a0 + γ·(cert(1) − a0).
    let scale_for = |cert_at_one: f64, floor: f64| -> f64 {
        if cert_at_one >= floor {
            1.0
        } else {
            ((a0 - floor) / (a0 - cert_at_one)).clamp(0.0, 1.0) * 0.999
        }
    };
    let gamma = scale_for(rho_raw, cfg.rho_floor).min(scale_for(h_raw, cfg.rho_floor));
    for c in &mut coefficients {
        c.0 *= gamma;
        c.1 *= gamma;
    }
    let shape = SupportFunction::new(a0, coefficients);
    SupportBody::new(shape, Vec2::ZERO).expect("rescaled body passes the certificate")
}

/// Random arrangement satisfying the strict theorem hypotheses with a
/// genericity margin: proper interior, no redundancy, no degeneracy flag,
/// vertices clear of non-incident boundaries, normals well separated.
pub fn random_arrangement(rng: &mut impl Rng, cfg: &FuzzConfig) -> Result<Arrangement, FuzzError> {
    random_arrangement_with_shape(rng, cfg).map(|(arr, _)| arr)
}

/// As [`random_arrangement`], also returning the accepted draw's computed
/// intersection so callers need not redo it.
pub fn random_arrangement_with_shape(
    rng: &mut impl Rng,
    cfg: &FuzzConfig,
) -> Result<(Arrangement, IntersectionShape), FuzzError> {
    const MAX_ATTEMPTS: usize = 1000;
    for attempt in 0..MAX_ATTEMPTS {
        let _ = attempt;
        let body = random_body(rng, cfg);
        let (_, h_min) = body.shape().certified_minima();
        // Pairwise translation distances stay below 0.9·h_min < η, so every
        // pair overlaps properly; the remaining hypotheses are rejections.
        let radius = 0.45 * h_min;
        let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
        let mut translations: Vec<Vec2> = Vec::with_capacity(n);
        for _ in 0..n {
            let r = radius * rng.gen_range(0.0f64..=1.0).sqrt();
            let phi = rng.gen_range(0.0..std::f64::consts::TAU);
            translations.push(Vec2::new(r * phi.cos(), r * phi.sin()));
        }
        let min_pairwise = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(i, j)| translations[i].dist(translations[j]))
            .fold(f64::INFINITY, f64::min);
        if min_pairwise < 1e-3 * h_min {
            continue;
        }
        let arr = match Arrangement::new(body.shape().clone(), translations) {
            Ok(a) => a,
            Err(_) => continue,
        };
        let shape = arr.intersect();
        if shape.status != IntersectionStatus::ProperBody
            || !shape.degeneracies.is_empty()
            || shape.redundancy.iter().any(|r| *r)
        {
            continue;
        }
        // Genericity margins keep the accepted instance comfortably away
        // from the measure-zero configurations the theorem excludes.
        let bodies = arr.bodies();
        let mut generic = true;
        for v in &shape.vertices {
            if v.normal_cone.0.parallel_margin(v.normal_cone.1) < cfg.normal_margin {
                generic = false;
                break;
            }
            for (l, b) in bodies.iter().enumerate() {
                if l == v.pair.0 || l == v.pair.1 {
                    continue;
                }
                if b.support_gap(v.point).0.abs() < cfg.separation_margin {
                    generic = false;
                    break;
                }
            }
            if !generic {
                break;
            }
        }
        if !generic {
            continue;
        }
        return Ok((arr, shape));
    }
    Err(FuzzError::GenerationExhausted {
        attempts: MAX_ATTEMPTS,
    })
}

/// One campaign trial: strict theorem verification plus the polygonal
/// oracle cross-check.
#[derive(Debug, Clone, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub digest: String,
    pub n: usize,
    pub vertex_count: usize,
    pub count_ok: bool,
    pub min_vertex_normal_margin: f64,
    pub min_outside_measure: f64,
    pub max_edge_measure: f64,
    pub gauss_partition_residual: f64,
    pub oracle_count: usize,
    pub oracle_max_distance: f64,
    pub oracle_ok: bool,
    pub degeneracy_flags: usize,
    pub pass: bool,
    /// Full arrangement for replay, attached only on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrangement: Option<ArrangementFile>,
}

/// Campaign report; `schema` versions the JSON layout.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub seed: u64,
    pub trials: usize,
    pub n_range: (usize, usize),
    pub passes: usize,
    pub failures: usize,
    pub min_vertex_normal_margin: f64,
    pub min_outside_measure: f64,
    pub max_edge_measure: f64,
    pub max_partition_residual: f64,
    pub max_oracle_distance: f64,
    pub records: Vec<TrialRecord>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.failures == 0
    }
}

/// Runs the full campaign. Deterministic: identical (seed, config) yields a
/// byte-identical serialized report.
pub fn run_campaign(cfg: &FuzzConfig) -> Result<VerificationReport, FuzzError> {
    cfg.validate()?;
    let mut records = Vec::with_capacity(cfg.trials);
    for trial in 0..cfg.trials {
        let mut rng = cfg.trial_rng(trial);
        let (arr, shape) = random_arrangement_with_shape(&mut rng, cfg)?;
        records.push(run_trial(trial, &arr, &shape, cfg));
    }
    let passes = records.iter().filter(|r| r.pass).count();
    let fold_min = |f: fn(&TrialRecord) -> f64| records.iter().map(f).fold(f64::INFINITY, f64::min);
    let fold_max =
        |f: fn(&TrialRecord) -> f64| records.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
    Ok(VerificationReport {
        schema: 1,
        seed: cfg.seed,
        trials: cfg.trials,
        n_range: cfg.n_range,
        passes,
        failures: records.len() - passes,
        min_vertex_normal_margin: fold_min(|r| r.min_vertex_normal_margin),
        min_outside_measure: fold_min(|r| r.min_outside_measure),
        max_edge_measure: fold_max(|r| r.max_edge_measure),
        max_partition_residual: fold_max(|r| r.gauss_partition_residual),
        max_oracle_distance: fold_max(|r| r.oracle_max_distance),
        records,
    })
}

fn run_trial(
    trial: usize,
    arr: &Arrangement,
    shape: &IntersectionShape,
    cfg: &FuzzConfig,
) -> TrialRecord {
    let file = ArrangementFile::from_arrangement(arr);
    let digest = digest(&serde_json::to_string(&file).expect("arrangement serializes"));
    let n = arr.n();
    let (report, theorem_pass) = match arr.verify_with_shape(shape, true) {
        Ok(r) => {
            let p = r.pass;
            (Some(r), p)
        }
        Err(_) => (None, false),
    };
    let analytic: Vec<Vec2> = shape.vertices.iter().map(|v| v.point).collect();
    let (oracle_count, oracle_max_distance) = oracle_vertices(arr, cfg, &analytic);
    let tol = cfg.oracle_tolerance * arr.body(0).diameter();
    let oracle_ok = oracle_count == analytic.len() && oracle_max_distance < tol;
    let pass = theorem_pass && oracle_ok;
    let fold = |v: Option<&Vec<f64>>, init: f64, f: fn(f64, f64) -> f64| -> f64 {
        v.map(|xs| xs.iter().copied().fold(init, f)).unwrap_or(init)
    };
    TrialRecord {
        trial,
        digest,
        n,
        vertex_count: shape.vertices.len(),
        count_ok: report.as_ref().map(|r| r.count_ok).unwrap_or(false),
        min_vertex_normal_margin: fold(
            report.as_ref().map(|r| &r.vertex_normal_margins),
            f64::INFINITY,
            f64::min,
        ),
        min_outside_measure: fold(
            report.as_ref().map(|r| &r.outside_measures),
            f64::INFINITY,
            f64::min,
        ),
        max_edge_measure: fold(
            report.as_ref().map(|r| &r.edge_measures),
            f64::NEG_INFINITY,
            f64::max,
        ),
        gauss_partition_residual: report
            .as_ref()
            .map(|r| r.gauss_partition_residual)
            .unwrap_or(f64::INFINITY),
        oracle_count,
        oracle_max_distance,
        oracle_ok,
        degeneracy_flags: shape.degeneracies.len(),
        pass,
        arrangement: if pass { None } else { Some(file) },
    }
}

/// Tagged-clipping oracle for an arrangement: returns the tag-change vertex
/// count and the symmetric max nearest-neighbor distance to the analytic
/// vertex set.
pub fn oracle_vertices(arr: &Arrangement, cfg: &FuzzConfig, analytic: &[Vec2]) -> (usize, f64) {
    let bodies = arr.bodies();
    let mut poly = oracle::polygonize(&bodies[0], cfg.oracle_resolution);
    for (i, b) in bodies.iter().enumerate().skip(1) {
        poly = oracle::clip(&poly, &oracle::polygonize(b, cfg.oracle_resolution), i);
    }
    let oracle_pts = oracle::oracle_singularities(&poly);
    let nearest = |p: Vec2, set: &[Vec2]| -> f64 {
        set.iter().map(|q| p.dist(*q)).fold(f64::INFINITY, f64::min)
    };
    let mut worst: f64 = 0.0;
    for p in &oracle_pts {
        worst = worst.max(nearest(*p, analytic));
    }
    for p in analytic {
        worst = worst.max(nearest(*p, &oracle_pts));
    }
    (oracle_pts.len(), worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_budget_gives_a_disk() {
        let cfg = FuzzConfig {
            harmonic_budget: HarmonicBudget {
                max_k: 0,
                coeff_cap: 0.0,
            },
            ..FuzzConfig::default()
        };
        let mut rng = cfg.trial_rng(0);
        let b = random_body(&mut rng, &cfg);
        assert!(b.shape().coefficients.is_empty());
        assert_eq!(b.shape().a0, 1.0);
    }

    #[test]
    fn random_bodies_always_validate() {
        let cfg = FuzzConfig::default();
        for trial in 0..32 {
            let mut rng = cfg.trial_rng(trial);
            let b = random_body(&mut rng, &cfg);
            let rho = b.shape().validate().unwrap();
            assert!(rho >= cfg.rho_floor * 0.999, "rho_min = {rho}");
        }
    }

    #[test]
    fn random_body_is_deterministic_per_seed() {
        let cfg = FuzzConfig {
            seed: 42,
            ..FuzzConfig::default()
        };
        let a = random_body(&mut cfg.trial_rng(3), &cfg);
        let b = random_body(&mut cfg.trial_rng(3), &cfg);
        assert_eq!(
            serde_json::to_string(a.shape()).unwrap(),
            serde_json::to_string(b.shape()).unwrap()
        );
        let c = random_body(&mut cfg.trial_rng(4), &cfg);
        assert_ne!(
            serde_json::to_string(a.shape()).unwrap(),
            serde_json::to_string(c.shape()).unwrap()
        );
    }

    #[test]
    fn random_arrangements_satisfy_strict_hypotheses() {
        let cfg = FuzzConfig::default();
        for trial in 0..8 {
            let mut rng = cfg.trial_rng(trial);
            let arr = random_arrangement(&mut rng, &cfg).unwrap();
            let report = arr.verify_theorem(true).unwrap();
            assert!(report.hypothesis_violated.is_none());
        }
    }

    #[test]
    fn arrangement_generation_is_deterministic() {
        let cfg = FuzzConfig::default();
        let a = random_arrangement(&mut cfg.trial_rng(5), &cfg).unwrap();
        let b = random_arrangement(&mut cfg.trial_rng(5), &cfg).unwrap();
        let fa = serde_json::to_string(&ArrangementFile::from_arrangement(&a)).unwrap();
        let fb = serde_json::to_string(&ArrangementFile::from_arrangement(&b)).unwrap();
        assert_eq!(fa, fb);
    }

    #[test]
    fn small_campaign_passes_and_is_deterministic() {
        let cfg = FuzzConfig {
            trials: 6,
            ..FuzzConfig::default()
        };
        let r1 = run_campaign(&cfg).unwrap();
        assert_eq!(r1.failures, 0, "records: {:?}", r1.records);
        let r2 = run_campaign(&cfg).unwrap();
        assert_eq!(
            serde_json::to_string(&r1).unwrap(),
            serde_json::to_string(&r2).unwrap()
        );
    }

    #[test]
    fn failed_trials_embed_the_arrangement_for_replay() {
        // An impossible oracle tolerance forces a failure record.
        let cfg = FuzzConfig {
            trials: 1,
            oracle_tolerance: 0.0,
            ..FuzzConfig::default()
        };
        let report = run_campaign(&cfg).unwrap();
        assert_eq!(report.failures, 1);
        let record = &report.records[0];
        assert!(!record.pass);
        let file = record.arrangement.as_ref().expect("replay payload");
        assert!(file.to_arrangement().is_ok());

        // Passing trials stay lean.
        let report = run_campaign(&FuzzConfig {
            trials: 1,
            ..FuzzConfig::default()
        })
        .unwrap();
        assert!(report.records[0].arrangement.is_none());
    }

    #[test]
    fn config_validation() {
        let bad_low = FuzzConfig {
            n_range: (1, 7),
            ..FuzzConfig::default()
        };
        assert!(bad_low.validate().is_err());
        let bad_high = FuzzConfig {
            n_range: (2, 20),
            ..FuzzConfig::default()
        };
        assert!(bad_high.validate().is_err());
        let no_trials = FuzzConfig {
            trials: 0,
            ..FuzzConfig::default()
        };
        assert!(no_trials.validate().is_err());
    }
}
