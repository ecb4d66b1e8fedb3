//! Minimal SVG emission for figures: body outlines at 1px, the intersection
//! filled at 30% opacity, singular points as 4px disks, and chord-function
//! graphs. The viewBox is computed from the world bounds of the drawn
//! geometry.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::body::{Angle, SupportBody, Vec2};
use crate::gallery::{GalleryBody, Scenario, ScenarioOutcome};
use crate::intersection::{Arrangement, IntersectionShape, IntersectionStatus};
use crate::oracle::TaggedPolygon;

const CANVAS: f64 = 800.0;
const MARGIN_FRAC: f64 = 0.05;

/// World-to-pixel mapper plus the element buffer.
pub struct SvgCanvas {
    scale: f64,
    offset: Vec2,
    height: f64,
    width: f64,
    body: String,
}

impl SvgCanvas {
    /// Canvas fitted to the world bounding box `(lo, hi)`.
    pub fn new(lo: Vec2, hi: Vec2) -> SvgCanvas {
        let span_x = (hi.x - lo.x).max(1e-9);
        let span_y = (hi.y - lo.y).max(1e-9);
        let span = span_x.max(span_y);
        let margin = MARGIN_FRAC * span;
        let scale = CANVAS / (span + 2.0 * margin);
        let width = (span_x + 2.0 * margin) * scale;
        let height = (span_y + 2.0 * margin) * scale;
        SvgCanvas {
            scale,
            offset: Vec2::new(lo.x - margin, lo.y - margin),
            height,
            width,
            body: String::new(),
        }
    }

    fn map(&self, p: Vec2) -> (f64, f64) {
        (
            (p.x - self.offset.x) * self.scale,
            // SVG y grows downward.
            self.height - (p.y - self.offset.y) * self.scale,
        )
    }

    fn path_data(&self, pts: &[Vec2], close: bool) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = self.map(*p);
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{x:.3} {y:.3} ");
        }
        if close {
            d.push('Z');
        }
        d
    }

    /// Closed outline, 1px stroke.
    pub fn outline(&mut self, pts: &[Vec2], color: &str) {
        let d = self.path_data(pts, true);
        let _ = writeln!(
            self.body,
            r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="1"/>"#
        );
    }

    /// Filled region at 30% opacity.
    pub fn fill(&mut self, pts: &[Vec2], color: &str) {
        if pts.len() < 3 {
            return;
        }
        let d = self.path_data(pts, true);
        let _ = writeln!(
            self.body,
            r#"<path d="{d}" fill="{color}" fill-opacity="0.3" stroke="none"/>"#
        );
    }

    pub fn polyline(&mut self, pts: &[Vec2], color: &str) {
        let d = self.path_data(pts, false);
        let _ = writeln!(
            self.body,
            r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="1"/>"#
        );
    }

    /// Marked point: a 4px disk.
    pub fn dot(&mut self, p: Vec2, color: &str) {
        let (x, y) = self.map(p);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="{color}"/>"#
        );
    }

    pub fn finish(self) -> String {
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w:.3} {h:.3}\" width=\"{w:.3}\" height=\"{h:.3}\">\n{body}</svg>\n",
            w = self.width,
            h = self.height,
            body = self.body
        )
    }
}

const BODY_COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
];

fn bounds_of(points: impl Iterator<Item = Vec2>) -> (Vec2, Vec2) {
    let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    (lo, hi)
}

fn body_outline(b: &SupportBody, samples: usize) -> Vec<Vec2> {
    (0..samples)
        .map(|i| b.boundary_point(Angle::new(TAU * i as f64 / samples as f64)))
        .collect()
}

/// Boundary polyline of the intersection: each edge sampled along its
/// owner's Gauss interval.
fn intersection_outline(shape: &IntersectionShape, bodies: &[SupportBody]) -> Vec<Vec2> {
    let mut pts = Vec::new();
    for e in &shape.edges {
        let (a, b) = e.gauss_interval;
        let span = a.ccw_to(b);
        for k in 0..=48 {
            let theta = Angle::new(a.radians() + span * k as f64 / 48.0);
            pts.push(bodies[e.owner].boundary_point(theta));
        }
    }
    pts
}

/// Figure for an arrangement: translate outlines, the intersection filled,
/// singular points marked at their computed coordinates.
pub fn render_arrangement(arr: &Arrangement, shape: &IntersectionShape) -> String {
    let bodies = arr.bodies();
    let outlines: Vec<Vec<Vec2>> = bodies.iter().map(|b| body_outline(b, 360)).collect();
    let (lo, hi) = bounds_of(outlines.iter().flatten().copied());
    let mut canvas = SvgCanvas::new(lo, hi);
    for (i, o) in outlines.iter().enumerate() {
        canvas.outline(o, BODY_COLORS[i % BODY_COLORS.len()]);
    }
    if shape.status == IntersectionStatus::ProperBody {
        canvas.fill(&intersection_outline(shape, &bodies), "#444444");
    }
    for v in &shape.vertices {
        canvas.dot(v.point, "#000000");
    }
    if let Some(p) = shape.single_point {
        canvas.dot(p, "#000000");
    }
    canvas.finish()
}

/// Chord-function graph: length against the chord parameter, with the
/// maximum marked.
pub fn render_chord_profile(samples: &[(f64, f64)], t_max: f64, eta: f64) -> String {
    let pts: Vec<Vec2> = samples.iter().map(|&(t, l)| Vec2::new(t, l)).collect();
    let (lo, hi) = bounds_of(pts.iter().copied().chain([Vec2::ZERO, Vec2::new(1.0, eta)]));
    let mut canvas = SvgCanvas::new(lo, hi);
    // Axes.
    canvas.polyline(&[Vec2::ZERO, Vec2::new(1.0, 0.0)], "#999999");
    canvas.polyline(&[Vec2::ZERO, Vec2::new(0.0, eta)], "#999999");
    canvas.polyline(&pts, "#1f77b4");
    canvas.dot(Vec2::new(t_max, eta), "#d62728");
    canvas.finish()
}

/// Figure for a gallery scenario: body outlines, the clipped intersection
/// region, and the singular points of the outcome.
pub fn render_scenario(s: &Scenario, outcome: &ScenarioOutcome) -> String {
    let outlines: Vec<Vec<Vec2>> = s
        .bodies
        .iter()
        .map(|b| match b {
            GalleryBody::Arc(a) => a.sample_boundary(128),
            GalleryBody::Support(sb) => body_outline(sb, 360),
        })
        .collect();
    let (lo, hi) = bounds_of(outlines.iter().flatten().copied());
    let mut canvas = SvgCanvas::new(lo, hi);
    for (i, o) in outlines.iter().enumerate() {
        canvas.outline(o, BODY_COLORS[i % BODY_COLORS.len()]);
    }
    // Region fill from polygon clipping of the sampled outlines.
    let mut region = TaggedPolygon::untagged(outlines[0].clone());
    for (i, o) in outlines.iter().enumerate().skip(1) {
        region = crate::oracle::clip(&region, &TaggedPolygon::untagged(o.clone()), i);
    }
    if !region.is_empty() {
        canvas.fill(&region.vertices, "#444444");
    }
    for p in &outcome.points {
        canvas.dot(*p, "#000000");
    }
    canvas.finish()
}
