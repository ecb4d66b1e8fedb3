//! Chord functions of a strictly convex body perpendicular to a direction.
//!
//! For a direction `w`, the chords perpendicular to `w` are parameterized by
//! `t ∈ [0, 1]` along the segment from the support point `h_w` to the
//! opposite support point `h_{−w}`. Strict convexity makes the chord-length
//! function strictly unimodal with a unique maximum, so lengths in `(0, η)`
//! are attained by exactly two chords — one on each monotone branch.

use thiserror::Error;

use crate::body::{Angle, SupportBody, Vec2};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChordError {
    /// Requested chord length outside the open interval `(0, η)`. The
    /// tangency degeneracy `r = η` is rejected here and handled explicitly
    /// by the intersection module.
    #[error("chord length {r} outside (0, {eta})")]
    LengthOutOfRange { r: f64, eta: f64 },
}

/// A maximal segment `body ∩ line`, with the carrier line stored as its unit
/// normal direction `w` and signed offset `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chord {
    pub p: Vec2,
    pub q: Vec2,
    pub w: Angle,
    pub s: f64,
    pub length: f64,
}

/// The family of chords of `body` perpendicular to `w`, with the unique
/// maximum located by ternary search.
#[derive(Debug, Clone)]
pub struct ChordProfile {
    body: SupportBody,
    w: Angle,
    /// Support point with outward normal `w`; the `t = 0` end.
    h_w: Vec2,
    /// Support point with outward normal `−w`; the `t = 1` end.
    h_neg_w: Vec2,
    /// Parameter of the maximum chord.
    t_max: f64,
    /// Maximum chord length.
    eta: f64,
}

/// Fixed ternary-search budget; deterministic cost, no convergence
/// heuristics.
const TERNARY_ITERS: usize = 200;

impl ChordProfile {
    pub fn body(&self) -> &SupportBody {
        &self.body
    }

    pub fn w(&self) -> Angle {
        self.w
    }

    pub fn h_w(&self) -> Vec2 {
        self.h_w
    }

    pub fn h_neg_w(&self) -> Vec2 {
        self.h_neg_w
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// Maximum chord length `η`.
    pub fn eta(&self) -> f64 {
        self.eta
    }

    /// The chord on the line through `(1−t)·h_w + t·h_{−w}` perpendicular to
    /// `u(w)`. At `t ∈ {0, 1}` this is the degenerate chord of length 0.
    pub fn chord_at(&self, t: f64) -> Chord {
        assert!((0.0..=1.0).contains(&t), "t must lie in [0, 1]");
        let u = self.w.unit();
        if t == 0.0 || t == 1.0 {
            let p = if t == 0.0 { self.h_w } else { self.h_neg_w };
            return Chord {
                p,
                q: p,
                w: self.w,
                s: p.dot(u),
                length: 0.0,
            };
        }
        let anchor = self.h_w * (1.0 - t) + self.h_neg_w * t;
        let s = anchor.dot(u);
        // One endpoint on each monotone boundary branch between w and w+π.
        let e1 = self.branch_point(s, false);
        let e2 = self.branch_point(s, true);
        // Deterministic endpoint order: ascending along the carrier line
        // direction `u(w)` rotated by −π/2 (to the right of the normal).
        let dir = -self.w.unit_perp();
        let (p, q) = if e1.dot(dir) <= e2.dot(dir) {
            (e1, e2)
        } else {
            (e2, e1)
        };
        Chord {
            p,
            q,
            w: self.w,
            s,
            length: (q - p).norm(),
        }
    }

    /// Boundary point with `⟨x(θ), u(w)⟩ = s` on one of the two branches.
    ///
    /// On `θ ∈ (w, w+π)` the projection onto `u(w)` is strictly decreasing,
    /// on `(w+π, w+2π)` strictly increasing, so plain bisection suffices.
    fn branch_point(&self, s: f64, second: bool) -> Vec2 {
        let base = self.w.radians();
        let (mut lo, mut hi) = if second {
            (base + std::f64::consts::PI, base + std::f64::consts::TAU)
        } else {
            (base, base + std::f64::consts::PI)
        };
        // ⟨x(θ), u(w)⟩ = ⟨c, u(w)⟩ + h(θ−rot)·cos(θ−w) − h′(θ−rot)·sin(θ−w),
        // written in terms of sin/cos of the single angle θ−rot.
        let rot = self.body.rotation().radians();
        let center_term = self.body.center().dot(self.w.unit()) - s;
        let (sd, cd) = (rot - base).sin_cos();
        let shape = self.body.shape();
        let proj = |theta: f64| {
            let (s1, c1) = (theta - rot).sin_cos();
            let (h, dh, _) = shape.eval_parts(s1, c1);
            let cos_tw = c1 * cd - s1 * sd;
            let sin_tw = s1 * cd + c1 * sd;
            center_term + h * cos_tw - dh * sin_tw
        };
        // Branch 1 runs from +h(w) down to −h(w+π); branch 2 back up.
        let increasing = second;
        for _ in 0..200 {
            if hi - lo < 1e-15 {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let v = proj(mid);
            if (v < 0.0) == increasing {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        self.body.boundary_point(Angle::new(0.5 * (lo + hi)))
    }

    /// `m` uniformly spaced samples of `t ↦ chord_at(t).length`.
    pub fn samples(&self, m: usize) -> Vec<(f64, f64)> {
        assert!(m >= 2);
        (0..m)
            .map(|i| {
                let t = i as f64 / (m - 1) as f64;
                (t, self.chord_at(t).length)
            })
            .collect()
    }

    /// Exactly two chords of length `r ∈ (0, η)`, ordered by `t`: one on the
    /// increasing branch before `t_max`, one on the decreasing branch after.
    pub fn chords_of_length(&self, r: f64) -> Result<(Chord, Chord), ChordError> {
        if !(r > 0.0 && r < self.eta) {
            return Err(ChordError::LengthOutOfRange { r, eta: self.eta });
        }
        let first = self.length_bisect(0.0, self.t_max, r, true);
        let second = self.length_bisect(self.t_max, 1.0, r, false);
        Ok((self.chord_at(first), self.chord_at(second)))
    }

    /// Bisection for `length(t) = r` on a strictly monotone branch.
    fn length_bisect(&self, mut lo: f64, mut hi: f64, r: f64, increasing: bool) -> f64 {
        for _ in 0..200 {
            if hi - lo < 1e-16 {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let len = self.chord_at(mid).length;
            if (len < r) == increasing {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

/// Locates the unique maximum chord of `body` perpendicular to `w`.
///
/// Golden-section ternary search on `t ∈ [0, 1]`, justified by strict
/// unimodality of the chord function of a strictly convex body.
pub fn max_chord(body: &SupportBody, w: Angle) -> ChordProfile {
    let h_w = body.boundary_point(w);
    let h_neg_w = body.boundary_point(w.opposite());
    let mut profile = ChordProfile {
        body: body.clone(),
        w,
        h_w,
        h_neg_w,
        t_max: 0.5,
        eta: 0.0,
    };
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = profile.chord_at(x1).length;
    let mut f2 = profile.chord_at(x2).length;
    for _ in 0..TERNARY_ITERS {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = profile.chord_at(x2).length;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = profile.chord_at(x1).length;
        }
    }
    profile.t_max = 0.5 * (lo + hi);
    profile.eta = profile.chord_at(profile.t_max).length;
    profile
}
