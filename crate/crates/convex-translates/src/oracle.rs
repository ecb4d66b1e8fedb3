//! Brute-force polygonal cross-validation.
//!
//! Bodies are discretized to dense inscribed polygons, intersections are
//! computed by successive half-plane clipping with per-edge source tags, and
//! singular vertices reappear as tag changes. All derived expectations in the
//! test suites come from this pipeline, never from the analytic one it
//! checks.

use std::f64::consts::TAU;

use crate::body::{Angle, SupportBody, Vec2};

/// Convex polygon with one source tag per edge.
///
/// Edge `i` runs from `vertices[i]` to `vertices[i+1]` (cyclically); its tag
/// names the translate that contributed the edge, `None` for edges of the
/// original subject.
#[derive(Debug, Clone, PartialEq)]
pub struct TaggedPolygon {
    pub vertices: Vec<Vec2>,
    pub edge_tags: Vec<Option<usize>>,
}

/// Consecutive vertices closer than this are merged after clipping.
const DEDUP_EPS: f64 = 1e-9;

impl TaggedPolygon {
    pub fn new(vertices: Vec<Vec2>, edge_tags: Vec<Option<usize>>) -> Self {
        assert_eq!(vertices.len(), edge_tags.len());
        TaggedPolygon {
            vertices,
            edge_tags,
        }
    }

    /// Untagged polygon from a counterclockwise vertex list.
    pub fn untagged(vertices: Vec<Vec2>) -> Self {
        let n = vertices.len();
        TaggedPolygon::new(vertices, vec![None; n])
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Shoelace area; positive for counterclockwise orientation.
    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut s = 0.0;
        for i in 0..n {
            s += self.vertices[i].cross(self.vertices[(i + 1) % n]);
        }
        0.5 * s
    }

    pub fn perimeter(&self) -> f64 {
        let n = self.vertices.len();
        (0..n)
            .map(|i| self.vertices[i].dist(self.vertices[(i + 1) % n]))
            .sum()
    }

    /// Convexity check: every consecutive edge pair turns left (up to a
    /// tiny slack for collinear numeric noise).
    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        if n < 3 {
            return false;
        }
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let c = self.vertices[(i + 2) % n];
            if (b - a).cross(c - b) < -1e-12 {
                return false;
            }
        }
        true
    }
}

/// Inscribed `m`-gon of a body, sampled at uniform Gauss parameters.
pub fn polygonize(body: &SupportBody, m: usize) -> TaggedPolygon {
    assert!(m >= 3);
    let vertices: Vec<Vec2> = (0..m)
        .map(|i| body.boundary_point(Angle::new(TAU * i as f64 / m as f64)))
        .collect();
    TaggedPolygon::untagged(vertices)
}

/// Intersection of two convex polygons by clipping `subject` against every
/// half-plane of `clipper`; edges cut in by the clipper carry `tag`, edges
/// inherited from the subject keep theirs.
pub fn clip(subject: &TaggedPolygon, clipper: &TaggedPolygon, tag: usize) -> TaggedPolygon {
    let mut verts = subject.vertices.clone();
    let mut tags = subject.edge_tags.clone();
    let m = clipper.vertices.len();
    if verts.len() < 3 || m < 3 {
        return TaggedPolygon::new(Vec::new(), Vec::new());
    }
    // Rotating support pointer: clipper inward normals turn monotonically,
    // so the subject vertex minimizing the signed plane distance only
    // advances. Planes the polygon already satisfies are skipped in
    // amortized constant time; only genuinely cutting planes pay a rebuild.
    let mut ptr = 0usize;
    let mut out_v: Vec<Vec2> = Vec::with_capacity(verts.len() + 4);
    let mut out_t: Vec<Option<usize>> = Vec::with_capacity(verts.len() + 4);
    let mut dists: Vec<f64> = Vec::with_capacity(verts.len() + 4);
    for ci in 0..m {
        let n = verts.len();
        if n < 3 {
            return TaggedPolygon::new(Vec::new(), Vec::new());
        }
        let a = clipper.vertices[ci];
        let b = clipper.vertices[(ci + 1) % m];
        let e = b - a;
        let dist = |p: Vec2| e.cross(p - a);
        ptr %= n;
        let mut fuel = n;
        loop {
            let here = dist(verts[ptr]);
            let fwd = dist(verts[(ptr + 1) % n]);
            if fwd < here {
                ptr = (ptr + 1) % n;
            } else {
                let back = dist(verts[(ptr + n - 1) % n]);
                if back < here {
                    ptr = (ptr + n - 1) % n;
                } else {
                    break;
                }
            }
            fuel -= 1;
            if fuel == 0 {
                break;
            }
        }
        if dist(verts[ptr]) >= 0.0 {
            continue; // fully inside this half-plane
        }
        out_v.clear();
        out_t.clear();
        dists.clear();
        dists.extend(verts.iter().map(|v| dist(*v)));
        for i in 0..n {
            let va = verts[i];
            let vb = verts[(i + 1) % n];
            let ta = tags[i];
            let da = dists[i];
            let db = dists[(i + 1) % n];
            let a_in = da >= 0.0;
            let b_in = db >= 0.0;
            match (a_in, b_in) {
                (true, true) => push_dedup(&mut out_v, &mut out_t, va, ta),
                (true, false) => {
                    push_dedup(&mut out_v, &mut out_t, va, ta);
                    let x = va + (vb - va) * (da / (da - db));
                    push_dedup(&mut out_v, &mut out_t, x, Some(tag));
                }
                (false, true) => {
                    let x = va + (vb - va) * (da / (da - db));
                    push_dedup(&mut out_v, &mut out_t, x, ta);
                }
                (false, false) => {}
            }
        }
        // Close the cycle: merge a duplicated wrap-around vertex.
        while out_v.len() >= 2 && out_v[0].dist(*out_v.last().unwrap()) < DEDUP_EPS {
            out_v.pop();
            out_t.pop();
        }
        std::mem::swap(&mut verts, &mut out_v);
        std::mem::swap(&mut tags, &mut out_t);
    }
    if verts.len() < 3 {
        return TaggedPolygon::new(Vec::new(), Vec::new());
    }
    TaggedPolygon::new(verts, tags)
}

fn push_dedup(verts: &mut Vec<Vec2>, tags: &mut Vec<Option<usize>>, v: Vec2, t: Option<usize>) {
    if let Some(last) = verts.last() {
        if last.dist(v) < DEDUP_EPS {
            // Zero-length edge: the incoming vertex's outgoing tag wins.
            *tags.last_mut().unwrap() = t;
            return;
        }
    }
    verts.push(v);
    tags.push(t);
}

/// Vertices whose two incident edges carry different tags — the discrete
/// analog of a point on the boundary of two distinct translates.
pub fn oracle_singularities(p: &TaggedPolygon) -> Vec<Vec2> {
    let n = p.vertices.len();
    let mut out = Vec::new();
    for i in 0..n {
        let incoming = p.edge_tags[(i + n - 1) % n];
        let outgoing = p.edge_tags[i];
        if incoming != outgoing {
            out.push(p.vertices[i]);
        }
    }
    out
}

/// Chord lengths of a convex polygon along `offsets` uniformly spaced lines
/// perpendicular to `u(w)`, swept across the polygon's full extent.
///
/// Returns `(s, length)` pairs where `s` is the line's signed offset along
/// `u(w)`. A single monotone walk over the polygon's two chains makes the
/// scan linear in `offsets + vertices`.
pub fn oracle_chords(p: &TaggedPolygon, w: Angle, offsets: usize) -> Vec<(f64, f64)> {
    assert!(offsets >= 2);
    let u = w.unit();
    let t = w.unit_perp();
    let n = p.vertices.len();
    assert!(n >= 3, "polygon must be non-degenerate");
    let proj: Vec<f64> = p.vertices.iter().map(|v| v.dot(u)).collect();
    let lateral: Vec<f64> = p.vertices.iter().map(|v| v.dot(t)).collect();
    let imin = (0..n)
        .min_by(|&a, &b| proj[a].partial_cmp(&proj[b]).unwrap())
        .unwrap();
    let imax = (0..n)
        .max_by(|&a, &b| proj[a].partial_cmp(&proj[b]).unwrap())
        .unwrap();
    // Two chains from the minimum-projection vertex to the maximum.
    let chain = |forward: bool| -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        let mut i = imin;
        loop {
            out.push((proj[i], lateral[i]));
            if i == imax {
                break;
            }
            i = if forward {
                (i + 1) % n
            } else {
                (i + n - 1) % n
            };
        }
        out
    };
    let chain_a = chain(true);
    let chain_b = chain(false);
    let s_min = proj[imin];
    let s_max = proj[imax];
    let sample_chain = |c: &[(f64, f64)], s: f64, cursor: &mut usize| -> f64 {
        while *cursor + 1 < c.len() - 1 && c[*cursor + 1].0 < s {
            *cursor += 1;
        }
        let (s0, d0) = c[*cursor];
        let (s1, d1) = c[*cursor + 1];
        if (s1 - s0).abs() < 1e-300 {
            d0
        } else {
            d0 + (d1 - d0) * ((s - s0) / (s1 - s0)).clamp(0.0, 1.0)
        }
    };
    let mut ca = 0usize;
    let mut cb = 0usize;
    let mut out = Vec::with_capacity(offsets);
    for j in 0..offsets {
        let s = s_min + (s_max - s_min) * j as f64 / (offsets - 1) as f64;
        let da = sample_chain(&chain_a, s, &mut ca);
        let db = sample_chain(&chain_b, s, &mut cb);
        out.push((s, (da - db).abs()));
    }
    out
}
