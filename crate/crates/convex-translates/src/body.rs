//! Smooth strictly convex planar bodies represented by support functions.
//!
//! A body is stored as a truncated Fourier series
//! `h(θ) = a0 + Σ a_k cos kθ + b_k sin kθ` giving the signed distance from
//! the origin to the support line with outward normal `(cos θ, sin θ)`. The
//! radius of curvature in this parameterization is `ρ = h + h″`; a certified
//! bound `ρ ≥ ρ_min > 0` is the analytic encoding of "smooth and strictly
//! convex", and it makes the Gauss map a bijection between boundary points
//! and normal directions.

use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Grid resolution used when certifying curvature and body extents.
const CERT_SAMPLES: usize = 4096;

/// Default boundary tolerance in body-diameter-normalized units. One band is
/// shared by every classification decision so that vertex filtering, edge
/// probing and redundancy checks cannot disagree.
const DEFAULT_BOUNDARY_TOL: f64 = 1e-7;

/// Boundary tolerance, overridable through `TRANSLATE_SING_TOL` (test-only).
pub fn boundary_tolerance() -> f64 {
    static TOL: OnceLock<f64> = OnceLock::new();
    *TOL.get_or_init(|| {
        std::env::var("TRANSLATE_SING_TOL")
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .filter(|t| t.is_finite() && *t > 0.0)
            .unwrap_or(DEFAULT_BOUNDARY_TOL)
    })
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BodyError {
    /// Certified curvature lower bound is not positive: the support function
    /// does not describe a smooth, strictly convex body.
    #[error("not strictly convex or not smooth: certified rho_min = {rho_min}")]
    NotStrictlyConvexOrNotSmooth { rho_min: f64 },
    /// `min h ≤ 0`: the origin is not an interior point of the shape.
    #[error("origin is not interior: certified min h = {h_min}")]
    OriginNotInterior { h_min: f64 },
    /// A point handed to the Gauss map is not on the boundary.
    #[error("point is not on the boundary: support gap = {gap}")]
    NotOnBoundary { gap: f64 },
}

// ---------------------------------------------------------------------------
// Angle
// ---------------------------------------------------------------------------

/// An angle in radians, kept in the canonical range `[0, 2π)`.
///
/// Both Gauss parameters and normal directions live on the circle, so all
/// arithmetic here is wrap-around aware: `ccw_to` measures the
/// counterclockwise arc, `dist` the shorter of the two arcs.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Self {
        Angle(normalize_radians(radians))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Unit vector `(cos θ, sin θ)`.
    pub fn unit(self) -> Vec2 {
        Vec2::new(self.0.cos(), self.0.sin())
    }

    /// Unit vector rotated by +π/2: `(−sin θ, cos θ)`.
    pub fn unit_perp(self) -> Vec2 {
        Vec2::new(-self.0.sin(), self.0.cos())
    }

    /// Counterclockwise arc length from `self` to `other`, in `[0, 2π)`.
    pub fn ccw_to(self, other: Angle) -> f64 {
        normalize_radians(other.0 - self.0)
    }

    /// Shorter angular distance between the two directions, in `[0, π]`.
    pub fn dist(self, other: Angle) -> f64 {
        let d = self.ccw_to(other);
        d.min(TAU - d)
    }

    /// Midpoint of the counterclockwise arc from `self` to `other`.
    pub fn ccw_midpoint(self, other: Angle) -> Angle {
        Angle::new(self.0 + 0.5 * self.ccw_to(other))
    }

    /// Whether `x` lies on the closed counterclockwise arc from `self` to
    /// `other`.
    pub fn ccw_contains(self, other: Angle, x: Angle) -> bool {
        self.ccw_to(x) <= self.ccw_to(other)
    }

    pub fn opposite(self) -> Angle {
        Angle::new(self.0 + PI)
    }

    /// Distance of the direction difference from the set `{0, π}`; this is
    /// the margin used when asserting two normals are neither equal nor
    /// opposite.
    pub fn parallel_margin(self, other: Angle) -> f64 {
        let d0 = self.dist(other);
        let dpi = self.dist(other.opposite());
        d0.min(dpi)
    }
}

fn normalize_radians(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    // rem_euclid can return TAU when x is a tiny negative number.
    if r >= TAU {
        0.0
    } else {
        r
    }
}

// ---------------------------------------------------------------------------
// Vec2
// ---------------------------------------------------------------------------

/// Point or vector of the Euclidean plane. Serializes as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 2]", from = "[f64; 2]")]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dot(self, other: Vec2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Vec2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Vec2) -> f64 {
        (self - other).norm()
    }

    /// Polar angle as an [`Angle`] in `[0, 2π)`.
    pub fn angle(self) -> Angle {
        Angle::new(self.y.atan2(self.x))
    }

    /// Rotation by +π/2.
    pub fn perp(self) -> Vec2 {
        Vec2::new(-self.y, self.x)
    }

    pub fn rotate(self, by: Angle) -> Vec2 {
        let (s, c) = by.radians().sin_cos();
        Vec2::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn normalized(self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<[f64; 2]> for Vec2 {
    fn from(a: [f64; 2]) -> Self {
        Vec2::new(a[0], a[1])
    }
}

impl From<Vec2> for [f64; 2] {
    fn from(v: Vec2) -> Self {
        [v.x, v.y]
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Mul<f64> for Vec2 {
    type Output = Vec2;
    fn mul(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

// ---------------------------------------------------------------------------
// SupportFunction
// ---------------------------------------------------------------------------

/// Truncated Fourier support function `h(θ) = a0 + Σ_{k≥1} a_k cos kθ + b_k
/// sin kθ` of the canonical (untranslated) shape.
///
/// Closed-form derivatives make curvature exact: `ρ(θ) = h + h″ = a0 +
/// Σ (1−k²)(a_k cos kθ + b_k sin kθ)`. Note the `k = 1` terms drop out of
/// `ρ`; they merely translate the shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportFunction {
    pub a0: f64,
    /// `(a_k, b_k)` for `k = 1..=K`.
    #[serde(rename = "harmonics")]
    pub coefficients: Vec<(f64, f64)>,
}

impl SupportFunction {
    pub fn new(a0: f64, coefficients: Vec<(f64, f64)>) -> Self {
        SupportFunction { a0, coefficients }
    }

    /// Disk of radius `r` centered at the origin.
    pub fn disk(r: f64) -> Self {
        SupportFunction::new(r, Vec::new())
    }

    /// Value and first two derivatives of the series at `theta`.
    ///
    /// Uses the Chebyshev recurrence on `cos kθ`, `sin kθ` so one `sin_cos`
    /// call covers every harmonic.
    pub fn eval(&self, theta: f64) -> (f64, f64, f64) {
        let (s1, c1) = theta.sin_cos();
        self.eval_parts(s1, c1)
    }

    /// [`SupportFunction::eval`] with `sin θ`, `cos θ` supplied by the
    /// caller; hot loops share one `sin_cos` across several uses of the
    /// angle.
    pub fn eval_parts(&self, s1: f64, c1: f64) -> (f64, f64, f64) {
        let mut h = self.a0;
        let mut dh = 0.0;
        let mut ddh = 0.0;
        // cos kθ, sin kθ for the current k, seeded at k = 1.
        let (mut ck, mut sk) = (c1, s1);
        // Previous-order values for the recurrence (k = 0).
        let (mut cp, mut sp) = (1.0, 0.0);
        for (k, &(a, b)) in self.coefficients.iter().enumerate() {
            let kf = (k + 1) as f64;
            h += a * ck + b * sk;
            dh += kf * (-a * sk + b * ck);
            ddh -= kf * kf * (a * ck + b * sk);
            let cn = 2.0 * c1 * ck - cp;
            let sn = 2.0 * c1 * sk - sp;
            cp = ck;
            sp = sk;
            ck = cn;
            sk = sn;
        }
        (h, dh, ddh)
    }

    /// Radius of curvature `ρ(θ) = h(θ) + h″(θ)`.
    pub fn curvature_radius(&self, theta: f64) -> f64 {
        let (h, _, ddh) = self.eval(theta);
        h + ddh
    }

    /// Certified lower bound on `ρ` over the circle: grid minimum minus a
    /// Lipschitz slack `L·π/N` with `L = Σ k(1+k²)(|a_k|+|b_k|)`.
    ///
    /// Accepts iff the bound is positive and the certified minimum of `h`
    /// itself is positive; the latter guarantees the origin is interior.
    pub fn validate(&self) -> Result<f64, BodyError> {
        let (rho_min, h_min) = self.certified_minima();
        // NaN (non-finite coefficients) must fail validation too.
        if rho_min.is_nan() || rho_min <= 0.0 {
            return Err(BodyError::NotStrictlyConvexOrNotSmooth { rho_min });
        }
        if h_min.is_nan() || h_min <= 0.0 {
            return Err(BodyError::OriginNotInterior { h_min });
        }
        Ok(rho_min)
    }

    /// Certified `(min ρ, min h)` over `[0, 2π)`.
    pub fn certified_minima(&self) -> (f64, f64) {
        let mut lip_rho = 0.0;
        let mut lip_h = 0.0;
        for (k, &(a, b)) in self.coefficients.iter().enumerate() {
            let kf = (k + 1) as f64;
            lip_rho += kf * (1.0 + kf * kf) * (a.abs() + b.abs());
            lip_h += kf * (a.abs() + b.abs());
        }
        let mut rho_min = f64::INFINITY;
        let mut h_min = f64::INFINITY;
        for i in 0..CERT_SAMPLES {
            let theta = TAU * i as f64 / CERT_SAMPLES as f64;
            let (h, _, ddh) = self.eval(theta);
            rho_min = rho_min.min(h + ddh);
            h_min = h_min.min(h);
        }
        let slack = PI / CERT_SAMPLES as f64;
        (rho_min - lip_rho * slack, h_min - lip_h * slack)
    }

    /// Diameter of the shape: the maximum width `h(θ) + h(θ+π)` over the
    /// certification grid.
    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..CERT_SAMPLES / 2 {
            let theta = TAU * i as f64 / CERT_SAMPLES as f64;
            let (h0, _, _) = self.eval(theta);
            let (h1, _, _) = self.eval(theta + PI);
            d = d.max(h0 + h1);
        }
        d
    }
}

// ---------------------------------------------------------------------------
// SupportBody
// ---------------------------------------------------------------------------

/// A support-function shape placed in the plane by a translation and, for the
/// gallery's isometry counterexample only, a rotation.
///
/// The support function of the moved body is `h(θ − rotation) + ⟨center,
/// u(θ)⟩`; its boundary point with outward normal `u(θ)` is
/// `center + h(θ̃)·u(θ) + h′(θ̃)·u⊥(θ)` with `θ̃ = θ − rotation`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportBody {
    shape: SupportFunction,
    center: Vec2,
    rotation: Angle,
    /// Cached shape diameter; fixes the length scale of every tolerance band.
    diameter: f64,
}

/// Classification of a point against a body, together with the signed
/// support gap that produced it (negative inside, positive outside).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Containment {
    pub class: ContainmentClass,
    pub gap: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ContainmentClass {
    Interior,
    Boundary,
    Exterior,
}

impl Containment {
    pub fn is_inside(&self) -> bool {
        matches!(
            self.class,
            ContainmentClass::Interior | ContainmentClass::Boundary
        )
    }

    pub fn is_interior(&self) -> bool {
        self.class == ContainmentClass::Interior
    }

    pub fn is_boundary(&self) -> bool {
        self.class == ContainmentClass::Boundary
    }
}

impl SupportBody {
    /// Validates the shape and places it at `center` with no rotation.
    pub fn new(shape: SupportFunction, center: Vec2) -> Result<Self, BodyError> {
        Self::with_rotation(shape, center, Angle::new(0.0))
    }

    pub fn with_rotation(
        shape: SupportFunction,
        center: Vec2,
        rotation: Angle,
    ) -> Result<Self, BodyError> {
        shape.validate()?;
        let diameter = shape.diameter();
        Ok(SupportBody {
            shape,
            center,
            rotation,
            diameter,
        })
    }

    /// Unit disk centered at `center`.
    pub fn unit_disk(center: Vec2) -> Self {
        SupportBody::new(SupportFunction::disk(1.0), center).expect("disk is valid")
    }

    pub fn shape(&self) -> &SupportFunction {
        &self.shape
    }

    pub fn center(&self) -> Vec2 {
        self.center
    }

    pub fn rotation(&self) -> Angle {
        self.rotation
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Absolute length tolerance of the shared boundary band.
    pub fn boundary_band(&self) -> f64 {
        boundary_tolerance() * self.diameter
    }

    /// Same shape and rotation, different translation.
    pub fn translated_to(&self, center: Vec2) -> Self {
        SupportBody {
            shape: self.shape.clone(),
            center,
            rotation: self.rotation,
            diameter: self.diameter,
        }
    }

    /// Construction bypassing re-validation, for callers that already hold
    /// a certificate for the shape (and its diameter).
    pub(crate) fn from_validated(
        shape: SupportFunction,
        center: Vec2,
        rotation: Angle,
        diameter: f64,
    ) -> Self {
        SupportBody {
            shape,
            center,
            rotation,
            diameter,
        }
    }

    /// True when `other` is a translate of `self` (identical shape and
    /// rotation).
    pub fn is_translate_of(&self, other: &SupportBody) -> bool {
        self.shape == other.shape && self.rotation == other.rotation
    }

    /// Support value of the moved body in direction `θ`.
    pub fn support(&self, theta: Angle) -> f64 {
        let local = theta.radians() - self.rotation.radians();
        let (h, _, _) = self.shape.eval(local);
        h + self.center.dot(theta.unit())
    }

    /// Radius of curvature at Gauss parameter `θ` (world frame).
    pub fn curvature_radius(&self, theta: Angle) -> f64 {
        self.shape
            .curvature_radius(theta.radians() - self.rotation.radians())
    }

    /// Inverse Gauss map: the unique boundary point whose outward normal is
    /// `u(θ)`.
    pub fn boundary_point(&self, theta: Angle) -> Vec2 {
        let local = theta.radians() - self.rotation.radians();
        let (h, dh, _) = self.shape.eval(local);
        let (s, c) = theta.radians().sin_cos();
        Vec2::new(
            self.center.x + c * h - s * dh,
            self.center.y + s * h + c * dh,
        )
    }

    /// Support line at Gauss parameter `θ`: the boundary point together with
    /// the tangent direction `u⊥(θ)`.
    pub fn support_line(&self, theta: Angle) -> (Vec2, Vec2) {
        (self.boundary_point(theta), theta.unit_perp())
    }

    /// Signed support gap of `p`: `max_ψ ⟨p, u(ψ)⟩ − h_moved(ψ)`, negative
    /// for interior points, zero on the boundary. Also returns the
    /// maximizing direction, which for boundary points is the Gauss
    /// parameter of `p`.
    pub fn support_gap(&self, p: Vec2) -> (f64, Angle) {
        let rel = p - self.center;
        let local_rot = self.rotation.radians();
        let objective = |psi: f64| {
            let (h, _, _) = self.shape.eval(psi - local_rot);
            rel.dot(Vec2::new(psi.cos(), psi.sin())) - h
        };
        // 64-point coarse scan for the global basin.
        const COARSE: usize = 64;
        let mut best_i = 0;
        let mut best_v = f64::NEG_INFINITY;
        for i in 0..COARSE {
            let psi = TAU * i as f64 / COARSE as f64;
            let v = objective(psi);
            if v > best_v {
                best_v = v;
                best_i = i;
            }
        }
        let step = TAU / COARSE as f64;
        let mut lo = step * best_i as f64 - step;
        let mut hi = step * best_i as f64 + step;
        // Golden-section refinement on the bracket.
        const INV_PHI: f64 = 0.618_033_988_749_894_8;
        let mut x1 = hi - INV_PHI * (hi - lo);
        let mut x2 = lo + INV_PHI * (hi - lo);
        let mut f1 = objective(x1);
        let mut f2 = objective(x2);
        for _ in 0..60 {
            if f1 < f2 {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + INV_PHI * (hi - lo);
                f2 = objective(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - INV_PHI * (hi - lo);
                f1 = objective(x1);
            }
        }
        let mut psi = 0.5 * (lo + hi);
        // Newton polish on the derivative. Golden section alone stalls at
        // ~sqrt(eps) in the argument because the objective is flat at the
        // max; the round-trip tolerance of the Gauss map needs better.
        for _ in 0..8 {
            let local = psi - local_rot;
            let (h, dh, ddh) = self.shape.eval(local);
            let u = Vec2::new(psi.cos(), psi.sin());
            let g1 = rel.dot(u.perp()) - dh;
            let g2 = -rel.dot(u) - ddh;
            let _ = h;
            if g2.abs() < 1e-300 {
                break;
            }
            let stepn = g1 / g2;
            if !stepn.is_finite() || stepn.abs() > step {
                break;
            }
            psi -= stepn;
            if stepn.abs() < 1e-15 {
                break;
            }
        }
        (objective(psi), Angle::new(psi))
    }

    /// Classification of `p` against the shared boundary band.
    pub fn contains(&self, p: Vec2) -> Containment {
        let (gap, _) = self.support_gap(p);
        let tol = self.boundary_band();
        let class = if gap < -tol {
            ContainmentClass::Interior
        } else if gap > tol {
            ContainmentClass::Exterior
        } else {
            ContainmentClass::Boundary
        };
        Containment { class, gap }
    }

    /// Gauss map: the parameter `θ` with `boundary_point(θ) = p`.
    ///
    /// Errors with [`BodyError::NotOnBoundary`] when the support gap of `p`
    /// exceeds the boundary band.
    pub fn gauss_map(&self, p: Vec2) -> Result<Angle, BodyError> {
        let (gap, psi) = self.support_gap(p);
        if gap.abs() > self.boundary_band() {
            return Err(BodyError::NotOnBoundary { gap });
        }
        Ok(psi)
    }

    /// The unique boundary point on the ray from the interior point `o` in
    /// direction `alpha`.
    ///
    /// The polar angle of `x(θ) − o` is a strictly increasing circle map in
    /// `θ`, so the Gauss parameter is found by bracketing plus bisection; no
    /// derivatives are needed.
    pub fn radial_boundary(&self, o: Vec2, alpha: Angle) -> Vec2 {
        debug_assert!(
            self.contains(o).is_interior(),
            "ray origin must be interior"
        );
        let wrap = |theta: f64| -> f64 {
            let p = self.boundary_point(Angle::new(theta));
            let mut d = (p - o).angle().radians() - alpha.radians();
            d = (d + PI).rem_euclid(TAU) - PI;
            d
        };
        // Find a sign change of the wrapped angular error, densifying if the
        // crossing shares a cell with the ±π wrap jump.
        let mut n = 64usize;
        loop {
            let mut prev = wrap(0.0);
            let mut bracket = None;
            for i in 1..=n {
                let t = TAU * i as f64 / n as f64;
                let cur = wrap(t);
                if prev <= 0.0 && cur >= 0.0 && (cur - prev) < PI {
                    bracket = Some((TAU * (i - 1) as f64 / n as f64, t));
                    break;
                }
                prev = cur;
            }
            if let Some((mut lo, mut hi)) = bracket {
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    if wrap(mid) < 0.0 {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                return self.boundary_point(Angle::new(0.5 * (lo + hi)));
            }
            n *= 4;
            assert!(n <= 1 << 22, "radial bracketing failed");
        }
    }
}
