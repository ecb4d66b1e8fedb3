//! Intersections of `n` translates: singular vertices, owned boundary edges,
//! redundancy diagnostics and Gauss-measure bookkeeping.
//!
//! A boundary point of the intersection is singular exactly when it lies on
//! the boundaries of two distinct translates, so the singular vertices are
//! found among the pairwise boundary crossings. The base construction for a
//! pair reduces to chord theory: with translation vector `t = r·u`, the
//! boundary crossings are the far endpoints of the two chords of length `r`
//! parallel to `u` — exactly two for a proper overlap.

use std::f64::consts::{PI, TAU};

use serde::Serialize;
use thiserror::Error;

use crate::body::{Angle, BodyError, SupportBody, SupportFunction, Vec2};
use crate::chords::{max_chord, ChordError};

/// Angular margin below which two vertex normals count as parallel; the
/// fuzz campaign asserts every vertex clears it.
pub const PARALLEL_NORMAL_MARGIN: f64 = 1e-6;
/// Margin for the strict Gauss-measure inequalities (outside measure above
/// π, edge measures below π).
pub const GAUSS_MEASURE_MARGIN: f64 = 1e-9;
/// Tolerance for the Gauss partition: edge intervals plus vertex normal
/// cones must tile the full circle.
pub const GAUSS_PARTITION_TOL: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IntersectError {
    /// The two bodies are not translates of one another.
    #[error("bodies are not translates of a common shape")]
    ShapeMismatch,
    /// The two normals at a crossing point are parallel, which a proper
    /// overlap of distinct translates cannot produce.
    #[error("normals at crossing point are parallel (margin {margin})")]
    ParallelNormals { margin: f64 },
    #[error(transparent)]
    Body(#[from] BodyError),
    #[error(transparent)]
    Chord(#[from] ChordError),
    /// An arrangement needs at least two pairwise distinct translations.
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("intersection is empty")]
    EmptyIntersection,
    /// The pair does not overlap with interior (tangent, disjoint or
    /// identical).
    #[error("pair of translates has no proper overlap")]
    NoProperOverlap,
    /// Strict mode only: a hypothesis of the singularity-count theorem
    /// fails for this arrangement.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
}

/// Which hypothesis failed in strict verification mode.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Hypothesis {
    /// Intersection is empty or has empty interior.
    NonEmptyInterior,
    /// Translate `index` can be removed without changing the intersection.
    NoRedundantTranslate { index: usize },
}

impl std::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Hypothesis::NonEmptyInterior => write!(f, "intersection interior is empty"),
            Hypothesis::NoRedundantTranslate { index } => {
                write!(f, "translate {index} is redundant")
            }
        }
    }
}

/// Boundary crossing structure of a pair of translates.
#[derive(Debug, Clone, PartialEq)]
pub enum PairCrossing {
    /// Proper overlap: exactly two boundary crossings, ordered by the chord
    /// parameter of the underlying profile.
    TwoPoints(Vec2, Vec2),
    /// Translation distance equals the maximum chord length: the
    /// intersection degenerates to a single dot.
    Tangent(Vec2),
    Disjoint,
    Identical,
}

/// `n ≥ 2` pairwise distinct translations of a common validated shape.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrangement {
    shape: SupportFunction,
    rotation: Angle,
    translations: Vec<Vec2>,
    /// Shape diameter, cached so per-translate bodies skip re-validation.
    diameter: f64,
}

impl Arrangement {
    pub fn new(shape: SupportFunction, translations: Vec<Vec2>) -> Result<Self, IntersectError> {
        Self::with_rotation(shape, Angle::new(0.0), translations)
    }

    pub fn with_rotation(
        shape: SupportFunction,
        rotation: Angle,
        translations: Vec<Vec2>,
    ) -> Result<Self, IntersectError> {
        shape.validate()?;
        if translations.len() < 2 {
            return Err(IntersectError::InvalidArrangement(format!(
                "need at least 2 translations, got {}",
                translations.len()
            )));
        }
        for (i, a) in translations.iter().enumerate() {
            if !a.is_finite() {
                return Err(IntersectError::InvalidArrangement(format!(
                    "translation {i} is not finite"
                )));
            }
            for (j, b) in translations.iter().enumerate().skip(i + 1) {
                if a == b {
                    return Err(IntersectError::InvalidArrangement(format!(
                        "translations {i} and {j} coincide"
                    )));
                }
            }
        }
        let diameter = shape.diameter();
        Ok(Arrangement {
            shape,
            rotation,
            translations,
            diameter,
        })
    }

    pub fn n(&self) -> usize {
        self.translations.len()
    }

    pub fn shape(&self) -> &SupportFunction {
        &self.shape
    }

    pub fn rotation(&self) -> Angle {
        self.rotation
    }

    pub fn translations(&self) -> &[Vec2] {
        &self.translations
    }

    /// The `i`-th translate as a standalone body.
    pub fn body(&self, i: usize) -> SupportBody {
        SupportBody::from_validated(
            self.shape.clone(),
            self.translations[i],
            self.rotation,
            self.diameter,
        )
    }

    pub fn bodies(&self) -> Vec<SupportBody> {
        (0..self.n()).map(|i| self.body(i)).collect()
    }

    /// Arrangement with translate `j` removed. Panics if fewer than two
    /// translates would remain.
    pub fn reduced(&self, j: usize) -> Arrangement {
        assert!(self.n() >= 3, "reduced arrangement needs n >= 3");
        let translations = self
            .translations
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, t)| *t)
            .collect();
        Arrangement {
            shape: self.shape.clone(),
            rotation: self.rotation,
            translations,
            diameter: self.diameter,
        }
    }

    /// Arrangement on the first `k` translations.
    pub fn prefix(&self, k: usize) -> Arrangement {
        assert!((2..=self.n()).contains(&k));
        Arrangement {
            shape: self.shape.clone(),
            rotation: self.rotation,
            translations: self.translations[..k].to_vec(),
            diameter: self.diameter,
        }
    }

    /// Computes the intersection: singular vertices, owned edges, status and
    /// per-translate redundancy. Emptiness is conveyed by the status, never
    /// as an error.
    pub fn intersect(&self) -> IntersectionShape {
        intersect_bodies(&self.bodies(), Some(self))
    }

    /// Whether `∩_{i≠j} φ_i ⊆ φ_j`, tested on the reduced intersection's
    /// vertices plus 64 samples per edge.
    pub fn is_redundant(&self, j: usize) -> Result<bool, IntersectError> {
        if self.n() == 2 {
            // A translate never contains a distinct translate of the same
            // shape; equal areas forbid proper inclusion.
            return Ok(false);
        }
        let reduced = self.reduced(j);
        let shape = reduced.intersect();
        let body_j = self.body(j);
        match shape.status {
            IntersectionStatus::Empty => Err(IntersectError::EmptyIntersection),
            IntersectionStatus::SinglePoint => {
                let p = shape.single_point.expect("single point status");
                Ok(body_j.contains(p).is_inside())
            }
            IntersectionStatus::ProperBody => {
                for v in &shape.vertices {
                    if !body_j.contains(v.point).is_inside() {
                        return Ok(false);
                    }
                }
                let bodies = reduced.bodies();
                for e in &shape.edges {
                    let owner = &bodies[e.owner];
                    let (a, b) = e.gauss_interval;
                    let span = a.ccw_to(b);
                    for k in 0..64 {
                        let theta = Angle::new(a.radians() + span * (k as f64 + 0.5) / 64.0);
                        let p = owner.boundary_point(theta);
                        if !body_j.contains(p).is_inside() {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }

    /// Full verification record for this arrangement. In strict mode the
    /// theorem's hypotheses (nonempty interior, no redundant translate) are
    /// enforced and their failure is an error rather than a report entry.
    pub fn verify_theorem(&self, strict: bool) -> Result<TheoremReport, IntersectError> {
        let shape = self.intersect();
        self.verify_with_shape(&shape, strict)
    }

    /// [`Arrangement::verify_theorem`] over an already-computed
    /// intersection, so callers holding one avoid recomputing it.
    pub fn verify_with_shape(
        &self,
        shape: &IntersectionShape,
        strict: bool,
    ) -> Result<TheoremReport, IntersectError> {
        let hypothesis = if shape.status != IntersectionStatus::ProperBody {
            Some(Hypothesis::NonEmptyInterior)
        } else {
            shape
                .redundancy
                .iter()
                .position(|r| *r)
                .map(|index| Hypothesis::NoRedundantTranslate { index })
        };
        if strict {
            if let Some(h) = hypothesis {
                return Err(IntersectError::HypothesisViolated(h));
            }
        }
        Ok(TheoremReport::build(self, shape, hypothesis))
    }
}

/// Boundary crossings of two translates of a common shape.
///
/// With `t = center₂ − center₁ = r·u` and `η` the maximum chord length of
/// the first body parallel to `u`: a proper overlap (`r < η`) yields the far
/// endpoints of the two chords of length `r`; `r = η` (within the tangency
/// window) is a single tangency dot; `r > η` is disjoint.
pub fn pair_boundary_points(
    b1: &SupportBody,
    b2: &SupportBody,
) -> Result<PairCrossing, IntersectError> {
    if !b1.is_translate_of(b2) {
        return Err(IntersectError::ShapeMismatch);
    }
    let t = b2.center() - b1.center();
    let r = t.norm();
    if r == 0.0 {
        return Ok(PairCrossing::Identical);
    }
    let u = t * (1.0 / r);
    // Chords perpendicular to w run parallel to u; their deterministic
    // endpoint order ascends along u, so `q` is always the far endpoint and
    // `q − t` lands on the near endpoint, which lies on bd(b1).
    let w = Angle::new(u.angle().radians() + PI / 2.0);
    let profile = max_chord(b1, w);
    let eta = profile.eta();
    let window = 1e-9 * b1.diameter();
    if (r - eta).abs() <= window {
        return Ok(PairCrossing::Tangent(tangency_point(b1, &profile, u)));
    }
    if r > eta {
        return Ok(PairCrossing::Disjoint);
    }
    let (c1, c2) = profile.chords_of_length(r)?;
    Ok(PairCrossing::TwoPoints(c1.q, c2.q))
}

/// Far endpoint of the maximum chord parallel to `u`.
///
/// Ternary search leaves ~1e-8 argument noise because the chord length is
/// flat at its maximum; the endpoint is pinned down instead as the boundary
/// point whose antipodal chord `x(θ) − x(θ+π)` runs parallel to `u`, a
/// simple root of the cross product.
fn tangency_point(b1: &SupportBody, profile: &crate::chords::ChordProfile, u: Vec2) -> Vec2 {
    let coarse = profile.chord_at(profile.t_max()).q;
    let theta0 = match b1.gauss_map(coarse) {
        Ok(t) => t.radians(),
        Err(_) => return coarse,
    };
    let g = |theta: f64| {
        let a = b1.boundary_point(Angle::new(theta));
        let b = b1.boundary_point(Angle::new(theta + PI));
        (a - b).cross(u)
    };
    // g decreases through zero at the far endpoint; bracket and bisect.
    let mut delta = 1e-6;
    let (mut lo, mut hi) = loop {
        let (lo, hi) = (theta0 - delta, theta0 + delta);
        if g(lo) > 0.0 && g(hi) < 0.0 {
            break (lo, hi);
        }
        delta *= 8.0;
        if delta > 1.0 {
            return coarse;
        }
    };
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    b1.boundary_point(Angle::new(0.5 * (lo + hi)))
}

/// Gauss parameters of the two translates at a shared boundary point,
/// asserting they are neither equal nor opposite.
pub fn verify_nonparallel_normals(
    b1: &SupportBody,
    b2: &SupportBody,
    p: Vec2,
) -> Result<(Angle, Angle), IntersectError> {
    let theta1 = b1.gauss_map(p)?;
    let theta2 = b2.gauss_map(p)?;
    let margin = theta1.parallel_margin(theta2);
    if margin <= PARALLEL_NORMAL_MARGIN {
        return Err(IntersectError::ParallelNormals { margin });
    }
    Ok((theta1, theta2))
}

/// Gauss measure of the part of `bd(b1)` outside `b2`.
///
/// The two boundary crossings split `bd(b1)` into two arcs; the arc inside
/// `b2` is identified by probing midpoints, and the complement measure is
/// returned. Strictly greater than π for every proper overlap.
pub fn outside_gauss_measure(b1: &SupportBody, b2: &SupportBody) -> Result<f64, IntersectError> {
    let (p1, p2) = match pair_boundary_points(b1, b2)? {
        PairCrossing::TwoPoints(p1, p2) => (p1, p2),
        _ => return Err(IntersectError::NoProperOverlap),
    };
    outside_gauss_measure_at(b1, b2, p1, p2)
}

/// [`outside_gauss_measure`] over already-computed boundary crossings; the
/// crossing points of a pair serve both measure directions.
pub fn outside_gauss_measure_at(
    b1: &SupportBody,
    b2: &SupportBody,
    p1: Vec2,
    p2: Vec2,
) -> Result<f64, IntersectError> {
    let theta1 = b1.gauss_map(p1)?;
    let theta2 = b1.gauss_map(p2)?;
    // Exactly one of the two arcs lies inside b2; take the one whose
    // midpoint probes deeper.
    let gap_forward = b2
        .contains(b1.boundary_point(theta1.ccw_midpoint(theta2)))
        .gap;
    let gap_backward = b2
        .contains(b1.boundary_point(theta2.ccw_midpoint(theta1)))
        .gap;
    let inside_measure = if gap_forward < gap_backward {
        theta1.ccw_to(theta2)
    } else {
        theta2.ccw_to(theta1)
    };
    Ok(TAU - inside_measure)
}

/// A singular vertex: a boundary crossing of translates `pair.0` and
/// `pair.1` that lies in every translate. The normal cone runs
/// counterclockwise from the incoming edge owner's normal to the outgoing
/// edge owner's normal and has measure in `(0, π)`.
#[derive(Debug, Clone, Serialize)]
pub struct SingularVertex {
    pub point: Vec2,
    pub pair: (usize, usize),
    pub normal_cone: (Angle, Angle),
}

impl SingularVertex {
    pub fn cone_measure(&self) -> f64 {
        self.normal_cone.0.ccw_to(self.normal_cone.1)
    }
}

/// A maximal regular boundary arc between two adjacent singular vertices,
/// owned by exactly one translate.
#[derive(Debug, Clone, Serialize)]
pub struct Edge {
    pub owner: usize,
    /// Gauss parameters of the owner spanned by the edge, counterclockwise.
    pub gauss_interval: (Angle, Angle),
    pub endpoints: (Vec2, Vec2),
}

impl Edge {
    pub fn measure(&self) -> f64 {
        self.gauss_interval.0.ccw_to(self.gauss_interval.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IntersectionStatus {
    ProperBody,
    SinglePoint,
    Empty,
}

/// Configurations the theorem does not cover; surfaced, never resolved.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Degeneracy {
    /// Three translate boundaries pass through (or numerically graze) one
    /// point.
    TripleBoundary { point: Vec2 },
    /// Two translates tie for ownership of an edge probe.
    EdgeOwnerTie { edge: usize },
    /// A pair of translates is tangent within the tangency window.
    TangentPair { pair: (usize, usize) },
    /// Edge-owner assignment disagrees with the pair that generated a
    /// vertex.
    VertexOwnerMismatch { vertex: usize },
    /// A translate owns no edge yet is not confirmed redundant.
    OwnerlessTranslate { index: usize },
}

/// Result of intersecting an arrangement.
///
/// For `ProperBody` status, `vertices` are ordered counterclockwise around
/// an interior reference point, `edges[i]` follows `vertices[i]`, and the
/// edge Gauss intervals together with the vertex normal cones partition the
/// circle.
#[derive(Debug, Clone, Serialize)]
pub struct IntersectionShape {
    pub status: IntersectionStatus,
    pub vertices: Vec<SingularVertex>,
    pub edges: Vec<Edge>,
    /// Per-translate redundancy verdicts.
    pub redundancy: Vec<bool>,
    pub degeneracies: Vec<Degeneracy>,
    /// The intersection point for `SinglePoint` status.
    pub single_point: Option<Vec2>,
    /// Interior reference point used for ordering (ProperBody only).
    pub reference_point: Option<Vec2>,
}

impl IntersectionShape {
    fn empty(n: usize, degeneracies: Vec<Degeneracy>) -> Self {
        IntersectionShape {
            status: IntersectionStatus::Empty,
            vertices: Vec::new(),
            edges: Vec::new(),
            redundancy: vec![false; n],
            degeneracies,
            single_point: None,
            reference_point: None,
        }
    }

    /// `|2π − Σ edge measures − Σ vertex cone measures|`.
    pub fn gauss_partition_residual(&self) -> f64 {
        let total: f64 = self.edges.iter().map(Edge::measure).sum::<f64>()
            + self
                .vertices
                .iter()
                .map(SingularVertex::cone_measure)
                .sum::<f64>();
        (TAU - total).abs()
    }
}

struct Candidate {
    point: Vec2,
    pair: (usize, usize),
}

/// Core intersection routine over explicit translate bodies.
///
/// `arr` is used for redundancy confirmation when available; it must
/// describe the same bodies.
fn intersect_bodies(bodies: &[SupportBody], arr: Option<&Arrangement>) -> IntersectionShape {
    let n = bodies.len();
    let tol = bodies[0].boundary_band();
    let mut degeneracies = Vec::new();

    // Pairwise boundary crossings are the only possible singular vertices.
    let mut candidates: Vec<Candidate> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            match pair_boundary_points(&bodies[i], &bodies[j])
                .expect("arrangement bodies share a shape")
            {
                PairCrossing::TwoPoints(p1, p2) => {
                    candidates.push(Candidate {
                        point: p1,
                        pair: (i, j),
                    });
                    candidates.push(Candidate {
                        point: p2,
                        pair: (i, j),
                    });
                }
                PairCrossing::Tangent(p) => {
                    degeneracies.push(Degeneracy::TangentPair { pair: (i, j) });
                    candidates.push(Candidate {
                        point: p,
                        pair: (i, j),
                    });
                }
                PairCrossing::Disjoint => {
                    return IntersectionShape::empty(n, degeneracies);
                }
                PairCrossing::Identical => {
                    unreachable!("arrangement translations are pairwise distinct")
                }
            }
        }
    }

    // A candidate survives when every translate classifies it inside; a
    // third translate grazing the point is a configuration the theorem does
    // not cover and is flagged.
    let mut survivors: Vec<&Candidate> = Vec::new();
    for c in &candidates {
        let mut inside_all = true;
        let mut boundary_count = 0usize;
        for b in bodies {
            let cl = b.contains(c.point);
            if !cl.is_inside() {
                inside_all = false;
                break;
            }
            if cl.is_boundary() {
                boundary_count += 1;
            }
        }
        if inside_all {
            if boundary_count > 2 {
                degeneracies.push(Degeneracy::TripleBoundary { point: c.point });
            }
            survivors.push(c);
        }
    }

    // Merge coincident surviving candidates (concurrent boundaries).
    let mut merged: Vec<&Candidate> = Vec::new();
    for c in survivors {
        if let Some(prev) = merged.iter().find(|m| m.point.dist(c.point) <= tol) {
            degeneracies.push(Degeneracy::TripleBoundary { point: prev.point });
        } else {
            merged.push(c);
        }
    }

    // Interior reference point: the minimax support gap over candidate
    // crossings, translate centers and the survivor centroid. The centroid
    // covers configurations (three balls pairwise through each other's
    // centers) where every crossing and every center sits on some boundary.
    let worst_gap = |p: Vec2| -> f64 {
        bodies
            .iter()
            .map(|b| b.support_gap(p).0)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let mut ref_candidates: Vec<Vec2> = candidates.iter().map(|c| c.point).collect();
    ref_candidates.extend(bodies.iter().map(|b| b.center()));
    if !merged.is_empty() {
        let centroid =
            merged.iter().fold(Vec2::ZERO, |acc, c| acc + c.point) * (1.0 / merged.len() as f64);
        ref_candidates.push(centroid);
    }
    let (reference, best_gap) = ref_candidates
        .into_iter()
        .map(|p| (p, worst_gap(p)))
        .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .expect("centers are always candidates");

    if best_gap >= -tol {
        // No interior: a surviving crossing means the intersection is a dot.
        if let Some(c) = merged.first() {
            let mut shape = IntersectionShape::empty(n, degeneracies);
            shape.status = IntersectionStatus::SinglePoint;
            shape.single_point = Some(c.point);
            return shape;
        }
        return IntersectionShape::empty(n, degeneracies);
    }

    // Proper body: order vertices counterclockwise around the reference,
    // starting from polar angle 0.
    let mut ordered: Vec<&Candidate> = merged;
    ordered.sort_by(|a, b| {
        let aa = (a.point - reference).angle().radians();
        let ab = (b.point - reference).angle().radians();
        aa.partial_cmp(&ab).unwrap()
    });

    if ordered.len() < 2 {
        // Geometrically impossible for distinct translates; surface it.
        if let Some(c) = ordered.first() {
            degeneracies.push(Degeneracy::TripleBoundary { point: c.point });
        }
        let mut shape = IntersectionShape::empty(n, degeneracies);
        shape.status = IntersectionStatus::ProperBody;
        shape.reference_point = Some(reference);
        return shape;
    }

    // Edge ownership by radial probing at the angular midpoint between
    // consecutive vertices: the nearest radial boundary hit is the binding
    // translate.
    let m = ordered.len();
    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    let mut owns_edge = vec![false; n];
    for i in 0..m {
        let v0 = ordered[i];
        let v1 = ordered[(i + 1) % m];
        let a0 = (v0.point - reference).angle();
        let a1 = (v1.point - reference).angle();
        let span = a0.ccw_to(a1);
        let probe_owner = |frac: f64| -> (usize, bool) {
            let alpha = Angle::new(a0.radians() + span * frac);
            let mut best = (usize::MAX, f64::INFINITY);
            for (l, b) in bodies.iter().enumerate() {
                let hit = b.radial_boundary(reference, alpha);
                let d = hit.dist(reference);
                if d < best.1 {
                    best = (l, d);
                }
            }
            let owner = best.0;
            let probe_pt = reference + alpha.unit() * best.1;
            // Tie: another translate's boundary also passes through the
            // probe within the shared band.
            let tie = bodies
                .iter()
                .enumerate()
                .any(|(l, b)| l != owner && b.support_gap(probe_pt).0 > -tol);
            (owner, tie)
        };
        let (mut owner, mut tie) = probe_owner(0.5);
        if tie {
            let (o2, t2) = probe_owner(0.25);
            let (o3, t3) = probe_owner(0.75);
            if o2 == o3 && !t2 && !t3 {
                owner = o2;
                tie = false;
            }
        }
        if tie {
            degeneracies.push(Degeneracy::EdgeOwnerTie { edge: i });
        }
        let body = &bodies[owner];
        let (ga, gb) = match (body.gauss_map(v0.point), body.gauss_map(v1.point)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => {
                // Owner boundary misses a vertex: misassigned owner.
                degeneracies.push(Degeneracy::EdgeOwnerTie { edge: i });
                (Angle::new(0.0), Angle::new(0.0))
            }
        };
        owns_edge[owner] = true;
        edges.push(Edge {
            owner,
            gauss_interval: (ga, gb),
            endpoints: (v0.point, v1.point),
        });
    }

    // Vertex normal cones from the adjacent edge owners; the generating
    // pair must agree with them.
    let mut vertices: Vec<SingularVertex> = Vec::with_capacity(m);
    for i in 0..m {
        let incoming = &edges[(i + m - 1) % m];
        let outgoing = &edges[i];
        let point = ordered[i].point;
        let pair = (incoming.owner, outgoing.owner);
        let gen_pair = ordered[i].pair;
        if !(pair == gen_pair || (pair.1, pair.0) == gen_pair) {
            degeneracies.push(Degeneracy::VertexOwnerMismatch { vertex: i });
        }
        vertices.push(SingularVertex {
            point,
            pair,
            normal_cone: (incoming.gauss_interval.1, outgoing.gauss_interval.0),
        });
    }

    // A translate owning no edge contributes nothing to the boundary;
    // confirm redundancy against the reduced arrangement when possible.
    let mut redundancy = vec![false; n];
    for l in 0..n {
        if owns_edge[l] {
            continue;
        }
        match arr.map(|a| a.is_redundant(l)) {
            Some(Ok(true)) | None => redundancy[l] = true,
            Some(Ok(false)) | Some(Err(_)) => {
                degeneracies.push(Degeneracy::OwnerlessTranslate { index: l });
            }
        }
    }

    IntersectionShape {
        status: IntersectionStatus::ProperBody,
        vertices,
        edges,
        redundancy,
        degeneracies,
        single_point: None,
        reference_point: Some(reference),
    }
}

/// Verification record for one arrangement: the singularity count check
/// plus every per-vertex, per-edge and per-pair Gauss-measure margin.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    pub vertex_count: usize,
    /// `|sing| = n`, the headline check.
    pub count_ok: bool,
    /// `None` when the hypotheses hold; otherwise which one failed.
    pub hypothesis_violated: Option<Hypothesis>,
    /// Per-vertex angular margin of the two crossing normals from {0, π}.
    pub vertex_normal_margins: Vec<f64>,
    /// Per-edge Gauss measures (each must stay below π).
    pub edge_measures: Vec<f64>,
    /// Outside Gauss measures for every ordered overlapping pair (each must
    /// exceed π).
    pub outside_measures: Vec<f64>,
    pub gauss_partition_residual: f64,
    pub degeneracies: Vec<Degeneracy>,
    pub redundancy: Vec<bool>,
    pub pass: bool,
}

impl TheoremReport {
    fn build(arr: &Arrangement, shape: &IntersectionShape, hypothesis: Option<Hypothesis>) -> Self {
        let bodies = arr.bodies();
        let n = arr.n();
        let vertex_normal_margins: Vec<f64> = shape
            .vertices
            .iter()
            .map(|v| v.normal_cone.0.parallel_margin(v.normal_cone.1))
            .collect();
        let edge_measures: Vec<f64> = shape.edges.iter().map(Edge::measure).collect();
        // One crossing computation per unordered pair serves both measure
        // directions.
        let mut outside_measures = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if let Ok(PairCrossing::TwoPoints(p1, p2)) =
                    pair_boundary_points(&bodies[i], &bodies[j])
                {
                    if let Ok(m) = outside_gauss_measure_at(&bodies[i], &bodies[j], p1, p2) {
                        outside_measures.push(m);
                    }
                    if let Ok(m) = outside_gauss_measure_at(&bodies[j], &bodies[i], p1, p2) {
                        outside_measures.push(m);
                    }
                }
            }
        }
        let count_ok = shape.status == IntersectionStatus::ProperBody && shape.vertices.len() == n;
        let residual = shape.gauss_partition_residual();
        let pass = hypothesis.is_none()
            && count_ok
            && shape.degeneracies.is_empty()
            && vertex_normal_margins
                .iter()
                .all(|m| *m > PARALLEL_NORMAL_MARGIN)
            && edge_measures.iter().all(|m| *m < PI - GAUSS_MEASURE_MARGIN)
            && outside_measures
                .iter()
                .all(|m| *m > PI + GAUSS_MEASURE_MARGIN)
            && residual <= GAUSS_PARTITION_TOL;
        TheoremReport {
            n,
            vertex_count: shape.vertices.len(),
            count_ok,
            hypothesis_violated: hypothesis,
            vertex_normal_margins,
            edge_measures,
            outside_measures,
            gauss_partition_residual: residual,
            degeneracies: shape.degeneracies.clone(),
            redundancy: shape.redundancy.clone(),
            pass,
        }
    }
}
