//! Sharpness gallery: configurations that drop exactly one hypothesis of the
//! singularity-count theorem and show the count breaking.
//!
//! Where smoothness or strict convexity must fail, bodies are built from
//! circular arcs and straight segments so every boundary crossing is
//! closed-form. The ideal and degenerate disk configurations reuse the same
//! machinery, which lets the arc pipeline be cross-checked against the
//! analytic one.

use std::f64::consts::{PI, TAU};

use serde::Serialize;
use thiserror::Error;

use crate::body::{boundary_tolerance, Angle, SupportBody, SupportFunction, Vec2};
use crate::oracle;

/// Coordinate tolerance for closed-form crossing dedup and tangency
/// detection.
const GEOM_EPS: f64 = 1e-9;
/// Normal jump below this is floating-point noise, above it a corner.
const CORNER_EPS: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GalleryError {
    /// Two boundary pieces coincide over a positive-length stretch; the
    /// overlap is reported as intervals because it has no point
    /// representation.
    #[error("boundaries share {} congruent overlap interval(s)", intervals.len())]
    OverlappingCongruentPieces { intervals: Vec<(Vec2, Vec2)> },
    #[error("intersection of gallery bodies is empty")]
    EmptyIntersection,
    #[error("unknown scenario `{name}`")]
    UnknownScenario { name: String },
    #[error("invalid arc body: {0}")]
    InvalidBody(String),
}

// ---------------------------------------------------------------------------
// Pieces
// ---------------------------------------------------------------------------

/// One boundary piece of an [`ArcBody`].
#[derive(Debug, Clone, PartialEq)]
pub enum Piece {
    /// Counterclockwise circular arc from central angle `start` over
    /// `sweep ∈ (0, 2π]` radians.
    Arc {
        center: Vec2,
        radius: f64,
        start: Angle,
        sweep: f64,
    },
    Segment {
        a: Vec2,
        b: Vec2,
    },
}

impl Piece {
    pub fn start_point(&self) -> Vec2 {
        match self {
            Piece::Arc {
                center,
                radius,
                start,
                ..
            } => *center + start.unit() * *radius,
            Piece::Segment { a, .. } => *a,
        }
    }

    pub fn end_point(&self) -> Vec2 {
        match self {
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            } => *center + Angle::new(start.radians() + sweep).unit() * *radius,
            Piece::Segment { b, .. } => *b,
        }
    }

    /// Outward normal at the start of the piece.
    pub fn start_normal(&self) -> Angle {
        match self {
            Piece::Arc { start, .. } => *start,
            Piece::Segment { .. } => self.segment_normal(),
        }
    }

    /// Outward normal at the end of the piece.
    pub fn end_normal(&self) -> Angle {
        match self {
            Piece::Arc { start, sweep, .. } => Angle::new(start.radians() + sweep),
            Piece::Segment { .. } => self.segment_normal(),
        }
    }

    /// For counterclockwise traversal the outward normal of a segment is
    /// the travel direction rotated by −π/2.
    fn segment_normal(&self) -> Angle {
        match self {
            Piece::Segment { a, b } => Angle::new((*b - *a).angle().radians() - PI / 2.0),
            Piece::Arc { .. } => unreachable!(),
        }
    }

    /// Point at parameter `t ∈ [0, 1]`.
    pub fn point_at(&self, t: f64) -> Vec2 {
        match self {
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            } => *center + Angle::new(start.radians() + sweep * t).unit() * *radius,
            Piece::Segment { a, b } => *a + (*b - *a) * t,
        }
    }

    fn translated(&self, v: Vec2) -> Piece {
        match self {
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            } => Piece::Arc {
                center: *center + v,
                radius: *radius,
                start: *start,
                sweep: *sweep,
            },
            Piece::Segment { a, b } => Piece::Segment {
                a: *a + v,
                b: *b + v,
            },
        }
    }

    /// Whether a central angle lies in the arc's angular range (with
    /// endpoint slack).
    fn arc_in_range(start: Angle, sweep: f64, angle: Angle) -> bool {
        let d = start.ccw_to(angle);
        d <= sweep + GEOM_EPS || d >= TAU - GEOM_EPS
    }
}

// ---------------------------------------------------------------------------
// ArcBody
// ---------------------------------------------------------------------------

/// Convex planar body bounded by a counterclockwise chain of circular arcs
/// and straight segments.
///
/// The chain must close up and the outward normal must be non-decreasing
/// along it (mod 2π): normals may jump at a junction (a corner, breaking
/// smoothness) or stall along a segment (breaking strict convexity).
#[derive(Debug, Clone, PartialEq)]
pub struct ArcBody {
    pieces: Vec<Piece>,
    interior: Vec2,
    diameter: f64,
}

impl ArcBody {
    pub fn new(pieces: Vec<Piece>) -> Result<Self, GalleryError> {
        if pieces.is_empty() {
            return Err(GalleryError::InvalidBody("no pieces".into()));
        }
        for p in &pieces {
            if let Piece::Arc { radius, sweep, .. } = p {
                let radius_ok = *radius > 0.0 && radius.is_finite();
                let sweep_ok = *sweep > 0.0 && *sweep <= TAU + GEOM_EPS;
                if !radius_ok {
                    return Err(GalleryError::InvalidBody("non-positive radius".into()));
                }
                if !sweep_ok {
                    return Err(GalleryError::InvalidBody("bad arc sweep".into()));
                }
            }
        }
        // Continuity and closure.
        let m = pieces.len();
        for i in 0..m {
            let gap = pieces[i]
                .end_point()
                .dist(pieces[(i + 1) % m].start_point());
            if gap > 1e-9 {
                return Err(GalleryError::InvalidBody(format!(
                    "chain gap {gap} after piece {i}"
                )));
            }
        }
        // Convexity: total normal turn (arc sweeps plus junction jumps)
        // must be exactly one revolution, with every jump in [0, π).
        let mut turn = 0.0;
        for i in 0..m {
            if let Piece::Arc { sweep, .. } = &pieces[i] {
                turn += sweep;
            }
            let jump = pieces[i]
                .end_normal()
                .ccw_to(pieces[(i + 1) % m].start_normal());
            if jump > PI - 1e-9 && jump < TAU - 1e-9 {
                return Err(GalleryError::InvalidBody(format!(
                    "reflex normal jump {jump} after piece {i}"
                )));
            }
            if jump < TAU - 1e-9 {
                turn += jump;
            }
        }
        if (turn - TAU).abs() > 1e-6 {
            return Err(GalleryError::InvalidBody(format!(
                "total normal turn {turn} != 2π"
            )));
        }
        let samples = sample_points(&pieces);
        let interior =
            samples.iter().fold(Vec2::ZERO, |acc, p| acc + *p) * (1.0 / samples.len() as f64);
        let mut diameter: f64 = 0.0;
        for i in 0..samples.len() {
            for j in (i + 1)..samples.len() {
                diameter = diameter.max(samples[i].dist(samples[j]));
            }
        }
        Ok(ArcBody {
            pieces,
            interior,
            diameter,
        })
    }

    pub fn circle(center: Vec2, radius: f64) -> ArcBody {
        ArcBody::new(vec![Piece::Arc {
            center,
            radius,
            start: Angle::new(0.0),
            sweep: TAU,
        }])
        .expect("circle is valid")
    }

    /// Axis-aligned square of the given side with quarter-circle corners.
    pub fn rounded_square(center: Vec2, side: f64, corner_radius: f64) -> ArcBody {
        let h = side / 2.0;
        let r = corner_radius;
        let c = center;
        let quarter = |cx: f64, cy: f64, start: f64| Piece::Arc {
            center: c + Vec2::new(cx, cy),
            radius: r,
            start: Angle::new(start),
            sweep: PI / 2.0,
        };
        let seg = |x0: f64, y0: f64, x1: f64, y1: f64| Piece::Segment {
            a: c + Vec2::new(x0, y0),
            b: c + Vec2::new(x1, y1),
        };
        ArcBody::new(vec![
            seg(-(h - r), -h, h - r, -h),
            quarter(h - r, -(h - r), -PI / 2.0),
            seg(h, -(h - r), h, h - r),
            quarter(h - r, h - r, 0.0),
            seg(h - r, h, -(h - r), h),
            quarter(-(h - r), h - r, PI / 2.0),
            seg(-h, h - r, -h, -(h - r)),
            quarter(-(h - r), -(h - r), PI),
        ])
        .expect("rounded square is valid")
    }

    /// Convex polygon with each edge replaced by a circular arc through the
    /// edge endpoints, bulging outward with the given sagitta fraction of
    /// the edge length. Corners are preserved, so the body is strictly
    /// convex but not smooth.
    pub fn bulged_polygon(vertices: &[Vec2], sagitta_frac: f64) -> ArcBody {
        let n = vertices.len();
        let mut pieces = Vec::with_capacity(n);
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let chord = b - a;
            let len = chord.norm();
            let half = len / 2.0;
            let sag = sagitta_frac * len;
            let radius = (half * half + sag * sag) / (2.0 * sag);
            // CCW polygon: outward edge normal is the direction rotated by
            // −π/2; the arc center sits inward of the chord midpoint.
            let outward = Vec2::new(chord.y, -chord.x) * (1.0 / len);
            let mid = (a + b) * 0.5;
            let center = mid - outward * (radius - sag);
            let start = (a - center).angle();
            let sweep = start.ccw_to((b - center).angle());
            pieces.push(Piece::Arc {
                center,
                radius,
                start,
                sweep,
            });
        }
        ArcBody::new(pieces).expect("bulged polygon is valid")
    }

    pub fn translated(&self, v: Vec2) -> ArcBody {
        ArcBody {
            pieces: self.pieces.iter().map(|p| p.translated(v)).collect(),
            interior: self.interior + v,
            diameter: self.diameter,
        }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Corners: junctions where the outward normal jumps by more than the
    /// corner threshold. Returns the corner point with the incoming and
    /// outgoing normals.
    pub fn corners(&self) -> Vec<(Vec2, Angle, Angle)> {
        let m = self.pieces.len();
        let mut out = Vec::new();
        for i in 0..m {
            let n_in = self.pieces[i].end_normal();
            let n_out = self.pieces[(i + 1) % m].start_normal();
            let jump = n_in.ccw_to(n_out);
            if jump > CORNER_EPS && jump < TAU - CORNER_EPS {
                out.push((self.pieces[i].end_point(), n_in, n_out));
            }
        }
        out
    }

    /// No corners: every boundary point has a unique support line.
    pub fn is_smooth(&self) -> bool {
        self.corners().is_empty()
    }

    /// No straight stretches in the boundary.
    pub fn is_strictly_convex(&self) -> bool {
        self.pieces.iter().all(|p| matches!(p, Piece::Arc { .. }))
    }

    /// Whether `other` is a translate of `self` (same pieces up to a common
    /// shift).
    pub fn is_translate_of(&self, other: &ArcBody) -> bool {
        if self.pieces.len() != other.pieces.len() {
            return false;
        }
        let shift = other.pieces[0].start_point() - self.pieces[0].start_point();
        self.pieces
            .iter()
            .zip(other.pieces.iter())
            .all(|(p, q)| match (&p.translated(shift), q) {
                (
                    Piece::Arc {
                        center: c1,
                        radius: r1,
                        start: s1,
                        sweep: w1,
                    },
                    Piece::Arc {
                        center: c2,
                        radius: r2,
                        start: s2,
                        sweep: w2,
                    },
                ) => {
                    c1.dist(*c2) < GEOM_EPS
                        && (r1 - r2).abs() < GEOM_EPS
                        && s1.dist(*s2) < GEOM_EPS
                        && (w1 - w2).abs() < GEOM_EPS
                }
                (Piece::Segment { a: a1, b: b1 }, Piece::Segment { a: a2, b: b2 }) => {
                    a1.dist(*a2) < GEOM_EPS && b1.dist(*b2) < GEOM_EPS
                }
                _ => false,
            })
    }

    fn boundary_band(&self) -> f64 {
        boundary_tolerance() * self.diameter
    }

    /// Signed radial gap of `p`: positive outside, negative inside,
    /// measured along the ray from the cached interior point.
    pub fn radial_gap(&self, p: Vec2) -> f64 {
        let rel = p - self.interior;
        let dist = rel.norm();
        if dist < GEOM_EPS {
            return -self.ray_hit(Vec2::new(1.0, 0.0));
        }
        let dir = rel * (1.0 / dist);
        dist - self.ray_hit(dir)
    }

    /// Distance from the interior point to the boundary along `dir`.
    fn ray_hit(&self, dir: Vec2) -> f64 {
        let o = self.interior;
        let mut best: f64 = f64::NAN;
        for piece in &self.pieces {
            match piece {
                Piece::Arc {
                    center,
                    radius,
                    start,
                    sweep,
                } => {
                    let rel = o - *center;
                    let b = dir.dot(rel);
                    let c = rel.dot(rel) - radius * radius;
                    let disc = b * b - c;
                    if disc < 0.0 {
                        continue;
                    }
                    for s in [-b - disc.sqrt(), -b + disc.sqrt()] {
                        if s <= 0.0 {
                            continue;
                        }
                        let p = o + dir * s;
                        if Piece::arc_in_range(*start, *sweep, (p - *center).angle())
                            && (best.is_nan() || s > best)
                        {
                            best = s;
                        }
                    }
                }
                Piece::Segment { a, b } => {
                    let e = *b - *a;
                    let denom = dir.cross(e);
                    if denom.abs() < 1e-14 {
                        continue;
                    }
                    let s = (*a - o).cross(e) / denom;
                    let t = (*a - o).cross(dir) / denom;
                    if s > 0.0 && (-1e-9..=1.0 + 1e-9).contains(&t) && (best.is_nan() || s > best) {
                        best = s;
                    }
                }
            }
        }
        assert!(!best.is_nan(), "interior ray must hit the boundary");
        best
    }

    /// Inside test including the boundary band.
    pub fn contains(&self, p: Vec2) -> bool {
        self.radial_gap(p) <= self.boundary_band()
    }

    /// Strict interior test (clears the boundary band).
    pub fn contains_interior(&self, p: Vec2) -> bool {
        self.radial_gap(p) < -self.boundary_band()
    }

    /// Dense boundary polyline for rendering and oracle use.
    pub fn sample_boundary(&self, per_piece: usize) -> Vec<Vec2> {
        let mut out = Vec::new();
        for p in &self.pieces {
            for k in 0..per_piece {
                out.push(p.point_at(k as f64 / per_piece as f64));
            }
        }
        out
    }
}

fn sample_points(pieces: &[Piece]) -> Vec<Vec2> {
    let mut out = Vec::new();
    for p in pieces {
        for k in 0..8 {
            out.push(p.point_at(k as f64 / 8.0));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Pairwise boundary contacts
// ---------------------------------------------------------------------------

/// A point where the boundaries of two bodies meet, with the outward
/// normals of each body there.
#[derive(Debug, Clone, Copy)]
pub struct ContactPoint {
    pub point: Vec2,
    pub n1: Angle,
    pub n2: Angle,
}

#[derive(Debug, Clone, Default)]
pub struct PairContacts {
    pub points: Vec<ContactPoint>,
    /// Positive-length congruent boundary overlaps.
    pub overlaps: Vec<(Vec2, Vec2)>,
}

/// All boundary contacts between two arc bodies, from closed-form
/// circle/line intersections restricted to the piece parameter ranges.
pub fn pair_contacts(b1: &ArcBody, b2: &ArcBody) -> PairContacts {
    let mut out = PairContacts::default();
    for p1 in &b1.pieces {
        for p2 in &b2.pieces {
            piece_contacts(p1, p2, &mut out);
        }
    }
    // Dedup contact points (piece junctions otherwise report twice).
    let mut points: Vec<ContactPoint> = Vec::new();
    for c in out.points {
        if !points.iter().any(|q| q.point.dist(c.point) < GEOM_EPS) {
            points.push(c);
        }
    }
    out.points = points;
    out
}

fn piece_contacts(p1: &Piece, p2: &Piece, out: &mut PairContacts) {
    match (p1, p2) {
        (
            Piece::Arc {
                center: c1,
                radius: r1,
                start: s1,
                sweep: w1,
            },
            Piece::Arc {
                center: c2,
                radius: r2,
                start: s2,
                sweep: w2,
            },
        ) => {
            let d = c1.dist(*c2);
            if d < GEOM_EPS && (r1 - r2).abs() < GEOM_EPS {
                // Same circle: congruent overlap of the angular ranges.
                same_circle_overlap(*c1, *r1, (*s1, *w1), (*s2, *w2), out);
                return;
            }
            if d < GEOM_EPS {
                return; // concentric, different radii
            }
            let u = (*c2 - *c1) * (1.0 / d);
            if (d - (r1 + r2)).abs() < GEOM_EPS {
                // External tangency.
                let p = *c1 + u * *r1;
                push_arc_arc(p, c1, s1, w1, c2, s2, w2, out);
                return;
            }
            if (d - (r1 - r2).abs()).abs() < GEOM_EPS {
                // Internal tangency.
                let p = if r1 >= r2 {
                    *c1 + u * *r1
                } else {
                    *c1 - u * *r1
                };
                push_arc_arc(p, c1, s1, w1, c2, s2, w2, out);
                return;
            }
            if d > r1 + r2 || d < (r1 - r2).abs() {
                return;
            }
            let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
            let h2 = r1 * r1 - a * a;
            if h2 < 0.0 {
                return;
            }
            let h = h2.sqrt();
            let base = *c1 + u * a;
            for p in [base + u.perp() * h, base - u.perp() * h] {
                push_arc_arc(p, c1, s1, w1, c2, s2, w2, out);
            }
        }
        (
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            },
            Piece::Segment { a, b },
        ) => arc_segment(*center, *radius, *start, *sweep, *a, *b, false, out),
        (
            Piece::Segment { a, b },
            Piece::Arc {
                center,
                radius,
                start,
                sweep,
            },
        ) => arc_segment(*center, *radius, *start, *sweep, *a, *b, true, out),
        (Piece::Segment { a: a1, b: b1 }, Piece::Segment { a: a2, b: b2 }) => {
            segment_segment(*a1, *b1, *a2, *b2, p1, p2, out)
        }
    }
}

fn same_circle_overlap(
    center: Vec2,
    radius: f64,
    (s1, w1): (Angle, f64),
    (s2, w2): (Angle, f64),
    out: &mut PairContacts,
) {
    // Intersect the cyclic ranges [s1, s1+w1] and [s2, s2+w2].
    let angular_eps = GEOM_EPS / radius.max(GEOM_EPS);
    let mut mark = |from: f64, to: f64| {
        if to - from > angular_eps {
            out.overlaps.push((
                center + Angle::new(from).unit() * radius,
                center + Angle::new(to).unit() * radius,
            ));
        } else {
            let mid = Angle::new(0.5 * (from + to));
            out.points.push(ContactPoint {
                point: center + mid.unit() * radius,
                n1: mid,
                n2: mid,
            });
        }
    };
    // Shift the second range into the frame of the first.
    let off = s1.ccw_to(s2);
    for k in [-1.0, 0.0] {
        let lo = (off + k * TAU).max(0.0);
        let hi = (off + k * TAU + w2).min(w1);
        if hi >= lo - angular_eps {
            mark(s1.radians() + lo.min(hi), s1.radians() + hi.max(lo));
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn push_arc_arc(
    p: Vec2,
    c1: &Vec2,
    s1: &Angle,
    w1: &f64,
    c2: &Vec2,
    s2: &Angle,
    w2: &f64,
    out: &mut PairContacts,
) {
    let a1 = (p - *c1).angle();
    let a2 = (p - *c2).angle();
    if Piece::arc_in_range(*s1, *w1, a1) && Piece::arc_in_range(*s2, *w2, a2) {
        out.points.push(ContactPoint {
            point: p,
            n1: a1,
            n2: a2,
        });
    }
}

#[allow(clippy::too_many_arguments)]
fn arc_segment(
    center: Vec2,
    radius: f64,
    start: Angle,
    sweep: f64,
    a: Vec2,
    b: Vec2,
    arc_is_second: bool,
    out: &mut PairContacts,
) {
    let e = b - a;
    let len = e.norm();
    let dir = e * (1.0 / len);
    let seg_normal = Angle::new(dir.angle().radians() - PI / 2.0);
    // Signed distance of the circle center from the segment line.
    let offset = (center - a).cross(dir);
    let foot = a + dir * (center - a).dot(dir);
    let push = |p: Vec2, out: &mut PairContacts| {
        let t = (p - a).dot(dir) / len;
        if !(-1e-9..=1.0 + 1e-9).contains(&t) {
            return;
        }
        let arc_angle = (p - center).angle();
        if !Piece::arc_in_range(start, sweep, arc_angle) {
            return;
        }
        let (n1, n2) = if arc_is_second {
            (seg_normal, arc_angle)
        } else {
            (arc_angle, seg_normal)
        };
        out.points.push(ContactPoint { point: p, n1, n2 });
    };
    if (offset.abs() - radius).abs() < GEOM_EPS {
        push(foot, out);
        return;
    }
    if offset.abs() > radius {
        return;
    }
    let h = (radius * radius - offset * offset).sqrt();
    push(foot + dir * h, out);
    push(foot - dir * h, out);
}

fn segment_segment(
    a1: Vec2,
    b1: Vec2,
    a2: Vec2,
    b2: Vec2,
    p1: &Piece,
    p2: &Piece,
    out: &mut PairContacts,
) {
    let d1 = b1 - a1;
    let d2 = b2 - a2;
    let denom = d1.cross(d2);
    if denom.abs() < 1e-12 {
        // Parallel; check collinearity.
        if (a2 - a1).cross(d1).abs() > GEOM_EPS * d1.norm() {
            return;
        }
        let len1 = d1.norm();
        let dir = d1 * (1.0 / len1);
        let t_lo = (a2 - a1).dot(dir).min((b2 - a1).dot(dir)).max(0.0);
        let t_hi = (a2 - a1).dot(dir).max((b2 - a1).dot(dir)).min(len1);
        if t_hi - t_lo > GEOM_EPS {
            out.overlaps.push((a1 + dir * t_lo, a1 + dir * t_hi));
        } else if t_hi - t_lo > -GEOM_EPS {
            let p = a1 + dir * (0.5 * (t_lo + t_hi));
            out.points.push(ContactPoint {
                point: p,
                n1: p1.start_normal(),
                n2: p2.start_normal(),
            });
        }
        return;
    }
    let t = (a2 - a1).cross(d2) / denom;
    let s = (a2 - a1).cross(d1) / denom;
    if (-1e-9..=1.0 + 1e-9).contains(&t) && (-1e-9..=1.0 + 1e-9).contains(&s) {
        out.points.push(ContactPoint {
            point: a1 + d1 * t,
            n1: p1.start_normal(),
            n2: p2.start_normal(),
        });
    }
}

/// All points of `bd(b1) ∩ bd(b2)`, deduplicated; tangential touches are
/// included once. Errors when the boundaries share a positive-length
/// congruent stretch, which has no point representation.
pub fn arc_boundary_crossings(b1: &ArcBody, b2: &ArcBody) -> Result<Vec<Vec2>, GalleryError> {
    let contacts = pair_contacts(b1, b2);
    if !contacts.overlaps.is_empty() {
        return Err(GalleryError::OverlappingCongruentPieces {
            intervals: contacts.overlaps,
        });
    }
    Ok(contacts.points.iter().map(|c| c.point).collect())
}

// ---------------------------------------------------------------------------
// Singularity counting
// ---------------------------------------------------------------------------

/// Findings that accompany a gallery singularity count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum ArcFlag {
    /// Boundaries touch with equal or opposite normals.
    TangentialContact { point: Vec2 },
    /// Boundaries coincide along a positive-length stretch.
    CongruentOverlap { a: Vec2, b: Vec2 },
}

#[derive(Debug, Clone, Serialize)]
pub struct ArcSingularities {
    pub count: usize,
    pub points: Vec<Vec2>,
    pub flags: Vec<ArcFlag>,
}

/// Singular points of the intersection of arc bodies: transversal boundary
/// crossings lying in every body, corners of one body lying in every body,
/// and opposite-normal pinch points (single-dot intersections). Same-normal
/// tangential touches glue smoothly and are only flagged.
pub fn arc_intersect_singularities(bodies: &[ArcBody]) -> Result<ArcSingularities, GalleryError> {
    assert!(bodies.len() >= 2);
    let mut flags = Vec::new();
    let mut candidates: Vec<Vec2> = Vec::new();
    let push_candidate = |p: Vec2, candidates: &mut Vec<Vec2>| {
        if !candidates.iter().any(|q| q.dist(p) < GEOM_EPS) {
            candidates.push(p);
        }
    };
    for i in 0..bodies.len() {
        for j in (i + 1)..bodies.len() {
            let contacts = pair_contacts(&bodies[i], &bodies[j]);
            for (a, b) in contacts.overlaps {
                flags.push(ArcFlag::CongruentOverlap { a, b });
            }
            for c in contacts.points {
                let margin = c.n1.parallel_margin(c.n2);
                if margin <= CORNER_EPS {
                    flags.push(ArcFlag::TangentialContact { point: c.point });
                    // Equal normals glue smoothly (regular). Opposite
                    // normals pinch the intersection to a dot (singular).
                    if c.n1.dist(c.n2) <= CORNER_EPS {
                        continue;
                    }
                }
                if bodies.iter().all(|b| b.contains(c.point)) {
                    push_candidate(c.point, &mut candidates);
                }
            }
        }
    }
    // Corners of one body on the intersection boundary are singular even
    // without a second boundary passing through them.
    for body in bodies {
        for (p, _, _) in body.corners() {
            if bodies.iter().all(|b| b.contains(p)) {
                push_candidate(p, &mut candidates);
            }
        }
    }
    if candidates.is_empty() && !intersection_nonempty(bodies) {
        return Err(GalleryError::EmptyIntersection);
    }
    Ok(ArcSingularities {
        count: candidates.len(),
        points: candidates,
        flags,
    })
}

fn intersection_nonempty(bodies: &[ArcBody]) -> bool {
    let mut probes: Vec<Vec2> = Vec::new();
    for b in bodies {
        probes.push(b.interior);
        probes.extend(sample_points(&b.pieces));
    }
    let centroid = probes.iter().fold(Vec2::ZERO, |a, p| a + *p) * (1.0 / probes.len() as f64);
    probes.push(centroid);
    probes.iter().any(|p| bodies.iter().all(|b| b.contains(*p)))
}

// ---------------------------------------------------------------------------
// Scenarios
// ---------------------------------------------------------------------------

/// Which hypothesis of the singularity-count theorem a scenario breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ViolatedAssumption {
    None,
    NotTranslates,
    NotStrictlyConvex,
    NotSmooth,
    EmptyInterior,
    Redundant,
}

#[derive(Debug, Clone)]
pub enum GalleryBody {
    Arc(ArcBody),
    Support(SupportBody),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum ExpectedCount {
    Exact(usize),
    /// No number is stated for this configuration; the expectation is the
    /// frozen polygonal-oracle value, which must differ from the
    /// translate-case count of 2.
    DerivedFromOracle {
        frozen: usize,
    },
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: &'static str,
    pub bodies: Vec<GalleryBody>,
    pub violated: ViolatedAssumption,
    pub expected: ExpectedCount,
}

pub const SCENARIO_NAMES: [&str; 7] = [
    "ideal_three_disks",
    "rotated_isometry",
    "non_strict_shift",
    "non_smooth_triangles",
    "non_smooth_squares",
    "tangent_disks",
    "redundant_disks",
];

/// Fully instantiated gallery configuration by name.
pub fn scenario(name: &str) -> Result<Scenario, GalleryError> {
    let arc = GalleryBody::Arc;
    match name {
        "ideal_three_disks" => {
            let h = 3.0f64.sqrt() / 2.0;
            Ok(Scenario {
                name: "ideal_three_disks",
                bodies: vec![
                    arc(ArcBody::circle(Vec2::new(0.0, 0.0), 1.0)),
                    arc(ArcBody::circle(Vec2::new(1.0, 0.0), 1.0)),
                    arc(ArcBody::circle(Vec2::new(0.5, h), 1.0)),
                ],
                violated: ViolatedAssumption::None,
                expected: ExpectedCount::Exact(3),
            })
        }
        "rotated_isometry" => {
            // Ellipse-like body against its quarter-turn: the four
            // crossings each become singular vertices.
            let sf = SupportFunction::new(1.5, vec![(0.0, 0.0), (0.3, 0.0)]);
            let b1 = SupportBody::new(sf.clone(), Vec2::ZERO).expect("valid shape");
            let b2 = SupportBody::with_rotation(sf, Vec2::new(0.4, 0.0), Angle::new(PI / 2.0))
                .expect("valid shape");
            Ok(Scenario {
                name: "rotated_isometry",
                bodies: vec![GalleryBody::Support(b1), GalleryBody::Support(b2)],
                violated: ViolatedAssumption::NotTranslates,
                expected: ExpectedCount::DerivedFromOracle { frozen: 4 },
            })
        }
        "non_strict_shift" => {
            let sq = ArcBody::rounded_square(Vec2::ZERO, 2.0, 0.25);
            let shifted = sq.translated(Vec2::new(0.5, 0.0));
            Ok(Scenario {
                name: "non_strict_shift",
                bodies: vec![arc(sq), arc(shifted)],
                violated: ViolatedAssumption::NotStrictlyConvex,
                expected: ExpectedCount::Exact(0),
            })
        }
        "non_smooth_triangles" => {
            let h = 3.0f64.sqrt() / 2.0;
            let vertices = [Vec2::new(0.0, 1.0), Vec2::new(-h, -0.5), Vec2::new(h, -0.5)];
            let t1 = ArcBody::bulged_polygon(&vertices, 0.05);
            let t2 = t1.translated(Vec2::new(0.0, -0.35));
            Ok(Scenario {
                name: "non_smooth_triangles",
                bodies: vec![arc(t1), arc(t2)],
                violated: ViolatedAssumption::NotSmooth,
                expected: ExpectedCount::Exact(3),
            })
        }
        "non_smooth_squares" => {
            let vertices = [
                Vec2::new(-1.0, -1.0),
                Vec2::new(1.0, -1.0),
                Vec2::new(1.0, 1.0),
                Vec2::new(-1.0, 1.0),
            ];
            let s1 = ArcBody::bulged_polygon(&vertices, 0.05);
            let s2 = s1.translated(Vec2::new(0.4, 0.4));
            Ok(Scenario {
                name: "non_smooth_squares",
                bodies: vec![arc(s1), arc(s2)],
                violated: ViolatedAssumption::NotSmooth,
                expected: ExpectedCount::Exact(4),
            })
        }
        "tangent_disks" => Ok(Scenario {
            name: "tangent_disks",
            bodies: vec![
                arc(ArcBody::circle(Vec2::new(0.0, 0.0), 1.0)),
                arc(ArcBody::circle(Vec2::new(2.0, 0.0), 1.0)),
            ],
            violated: ViolatedAssumption::EmptyInterior,
            expected: ExpectedCount::Exact(1),
        }),
        "redundant_disks" => Ok(Scenario {
            name: "redundant_disks",
            bodies: vec![
                arc(ArcBody::circle(Vec2::new(0.0, 0.0), 1.0)),
                arc(ArcBody::circle(Vec2::new(1.0, 0.0), 1.0)),
                arc(ArcBody::circle(Vec2::new(0.5, 0.0), 1.0)),
            ],
            violated: ViolatedAssumption::Redundant,
            expected: ExpectedCount::Exact(2),
        }),
        other => Err(GalleryError::UnknownScenario {
            name: other.to_string(),
        }),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioOutcome {
    pub scenario: String,
    pub expected: usize,
    pub actual: usize,
    pub pass: bool,
    pub points: Vec<Vec2>,
    pub flags: Vec<ArcFlag>,
}

/// Executes a scenario through the pipeline its bodies admit: the arc
/// pipeline for arc bodies, the tagged polygonal oracle for support bodies
/// (the isometry case, where the bodies are not translates).
pub fn run_scenario(s: &Scenario) -> Result<ScenarioOutcome, GalleryError> {
    let (actual, points, flags) = if s.bodies.iter().all(|b| matches!(b, GalleryBody::Arc(_))) {
        let arcs: Vec<ArcBody> = s
            .bodies
            .iter()
            .map(|b| match b {
                GalleryBody::Arc(a) => a.clone(),
                GalleryBody::Support(_) => unreachable!(),
            })
            .collect();
        let sing = arc_intersect_singularities(&arcs)?;
        (sing.count, sing.points, sing.flags)
    } else {
        let supports: Vec<&SupportBody> = s
            .bodies
            .iter()
            .map(|b| match b {
                GalleryBody::Support(sb) => sb,
                GalleryBody::Arc(_) => panic!("mixed gallery bodies are not supported"),
            })
            .collect();
        let mut poly = oracle::polygonize(supports[0], 4096);
        for (i, sb) in supports.iter().enumerate().skip(1) {
            poly = oracle::clip(&poly, &oracle::polygonize(sb, 4096), i);
        }
        let points = oracle::oracle_singularities(&poly);
        (points.len(), points, Vec::new())
    };
    let (expected, pass) = match s.expected {
        ExpectedCount::Exact(k) => (k, actual == k),
        ExpectedCount::DerivedFromOracle { frozen } => (frozen, actual == frozen && frozen != 2),
    };
    Ok(ScenarioOutcome {
        scenario: s.name.to_string(),
        expected,
        actual,
        pass,
        points,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_crossings() {
        let c1 = ArcBody::circle(Vec2::ZERO, 1.0);
        let c2 = ArcBody::circle(Vec2::new(1.0, 0.0), 1.0);
        let pts = arc_boundary_crossings(&c1, &c2).unwrap();
        assert_eq!(pts.len(), 2);
        let y = 3.0f64.sqrt() / 2.0;
        for p in &pts {
            assert!(p.dist(Vec2::new(0.5, y)) < 1e-9 || p.dist(Vec2::new(0.5, -y)) < 1e-9);
        }
    }

    #[test]
    fn circle_tangency_single_point() {
        let c1 = ArcBody::circle(Vec2::ZERO, 1.0);
        let c2 = ArcBody::circle(Vec2::new(2.0, 0.0), 1.0);
        let pts = arc_boundary_crossings(&c1, &c2).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(pts[0].dist(Vec2::new(1.0, 0.0)) < 1e-9);
    }

    #[test]
    fn rounded_square_shift_has_overlaps_but_no_crossings() {
        let sq = ArcBody::rounded_square(Vec2::ZERO, 2.0, 0.25);
        let shifted = sq.translated(Vec2::new(0.5, 0.0));
        match arc_boundary_crossings(&sq, &shifted) {
            Err(GalleryError::OverlappingCongruentPieces { intervals }) => {
                assert_eq!(intervals.len(), 2, "top and bottom edges overlap");
            }
            other => panic!("expected congruent overlap, got {other:?}"),
        }
    }

    #[test]
    fn arc_body_validation_and_predicates() {
        let c = ArcBody::circle(Vec2::ZERO, 1.0);
        assert!(c.is_smooth());
        assert!(c.is_strictly_convex());

        let sq = ArcBody::rounded_square(Vec2::ZERO, 2.0, 0.25);
        assert!(sq.is_smooth());
        assert!(!sq.is_strictly_convex());

        let tri = ArcBody::bulged_polygon(
            &[
                Vec2::new(0.0, 1.0),
                Vec2::new(-0.9, -0.5),
                Vec2::new(0.9, -0.5),
            ],
            0.05,
        );
        assert!(!tri.is_smooth());
        assert!(tri.is_strictly_convex());
        assert_eq!(tri.corners().len(), 3);
    }

    #[test]
    fn arc_body_containment() {
        let c = ArcBody::circle(Vec2::new(1.0, 0.0), 1.0);
        assert!(c.contains(Vec2::new(1.0, 0.0)));
        assert!(c.contains_interior(Vec2::new(0.5, 0.0)));
        assert!(c.contains(Vec2::new(2.0, 0.0)));
        assert!(!c.contains(Vec2::new(2.1, 0.0)));
        assert!((c.radial_gap(Vec2::new(3.0, 0.0)) - 1.0).abs() < 1e-9);

        let sq = ArcBody::rounded_square(Vec2::ZERO, 2.0, 0.25);
        assert!(sq.contains_interior(Vec2::ZERO));
        assert!(sq.contains_interior(Vec2::new(0.9, 0.0)));
        assert!(sq.contains(Vec2::new(1.0, 0.0)));
        assert!(!sq.contains(Vec2::new(1.01, 0.5)));
        // Rounded corner cuts the square's corner.
        assert!(!sq.contains(Vec2::new(0.98, 0.98)));
    }

    #[test]
    fn scenario_counts_match_stated_numbers() {
        for (name, expect) in [
            ("ideal_three_disks", 3),
            ("non_strict_shift", 0),
            ("non_smooth_triangles", 3),
            ("non_smooth_squares", 4),
            ("tangent_disks", 1),
            ("redundant_disks", 2),
        ] {
            let s = scenario(name).unwrap();
            let out = run_scenario(&s).unwrap();
            assert_eq!(out.actual, expect, "{name}: {:?}", out.points);
            assert!(out.pass, "{name}");
        }
    }

    #[test]
    fn rotated_isometry_matches_frozen_oracle_count() {
        let s = scenario("rotated_isometry").unwrap();
        let out = run_scenario(&s).unwrap();
        assert!(out.pass, "actual = {}", out.actual);
        assert_ne!(out.actual, 2);
    }

    #[test]
    fn non_strict_shift_flags_two_segment_overlaps() {
        let s = scenario("non_strict_shift").unwrap();
        let out = run_scenario(&s).unwrap();
        let overlaps = out
            .flags
            .iter()
            .filter(|f| matches!(f, ArcFlag::CongruentOverlap { .. }))
            .count();
        assert_eq!(overlaps, 2);
    }

    #[test]
    fn unknown_scenario_is_an_error() {
        assert!(matches!(
            scenario("nonesuch"),
            Err(GalleryError::UnknownScenario { .. })
        ));
    }

    #[test]
    fn scenario_violations_are_exactly_as_declared() {
        for name in SCENARIO_NAMES {
            let s = scenario(name).unwrap();
            let (translates, strictly_convex, smooth) = match (&s.bodies[0], &s.bodies[1]) {
                (GalleryBody::Arc(a), GalleryBody::Arc(b)) => (
                    a.is_translate_of(b)
                        && s.bodies.iter().all(|gb| match gb {
                            GalleryBody::Arc(x) => a.is_translate_of(x),
                            _ => false,
                        }),
                    a.is_strictly_convex(),
                    a.is_smooth(),
                ),
                (GalleryBody::Support(a), GalleryBody::Support(b)) => (
                    a.is_translate_of(b),
                    true, // validated support bodies are strictly convex
                    true, // and smooth
                ),
                _ => panic!("mixed bodies"),
            };
            match s.violated {
                ViolatedAssumption::None => {
                    assert!(translates && strictly_convex && smooth, "{name}")
                }
                ViolatedAssumption::NotTranslates => {
                    assert!(!translates && strictly_convex && smooth, "{name}")
                }
                ViolatedAssumption::NotStrictlyConvex => {
                    assert!(translates && !strictly_convex && smooth, "{name}")
                }
                ViolatedAssumption::NotSmooth => {
                    assert!(translates && strictly_convex && !smooth, "{name}")
                }
                ViolatedAssumption::EmptyInterior | ViolatedAssumption::Redundant => {
                    assert!(translates && strictly_convex && smooth, "{name}")
                }
            }
        }
    }

    #[test]
    fn is_translate_of_detects_shifts() {
        let t1 = ArcBody::bulged_polygon(
            &[
                Vec2::new(0.0, 1.0),
                Vec2::new(-0.9, -0.5),
                Vec2::new(0.9, -0.5),
            ],
            0.05,
        );
        let t2 = t1.translated(Vec2::new(0.3, -0.7));
        assert!(t1.is_translate_of(&t2));
        let other = ArcBody::circle(Vec2::ZERO, 1.0);
        assert!(!t1.is_translate_of(&other));
    }
}
