//! Static SVG drawings of curves, subdivisions, intersections and metric graphs.

use std::fmt::Write;

use num_traits::{ToPrimitive, Zero};

use crate::geometry::hull::hull_2d;
use crate::geometry::Subdivision;
use crate::hypersurface::TropicalComplex;
use crate::intersection::IntersectionPoint;
use crate::rational::{fmt_q, Q};
use crate::skeleton::MetricGraph;

const PANEL: f64 = 400.0;
const MARGIN: f64 = 24.0;

#[derive(Clone, Debug, PartialEq)]
pub struct Labels {
    pub weights: bool,
    pub lengths: bool,
    pub dual_cells: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    /// `(min, max)` corners; computed from the data when absent.
    pub viewport: Option<([Q; 2], [Q; 2])>,
    /// Extra room around bounded features into which rays extend.
    pub ray_overhang: Q,
    /// Stroke width per unit of edge weight.
    pub stroke_per_weight: f64,
    pub labels: Labels,
}

impl Default for RenderSpec {
    fn default() -> Self {
        Self {
            viewport: None,
            ray_overhang: Q::from_integer(1.into()),
            stroke_per_weight: 1.5,
            labels: Labels {
                weights: true,
                lengths: true,
                dual_cells: false,
            },
        }
    }
}

fn f(q: &Q) -> f64 {
    q.to_f64().unwrap_or(0.0)
}

/// Maps a rational box onto a square panel, y pointing up.
struct Frame {
    lo: [f64; 2],
    scale: f64,
    dx: f64,
}

impl Frame {
    fn new(lo: [f64; 2], hi: [f64; 2], dx: f64) -> Self {
        let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-9);
        Self {
            lo,
            scale: (PANEL - 2.0 * MARGIN) / span,
            dx,
        }
    }

    fn map(&self, p: [f64; 2]) -> (f64, f64) {
        (
            self.dx + MARGIN + (p[0] - self.lo[0]) * self.scale,
            PANEL - MARGIN - (p[1] - self.lo[1]) * self.scale,
        )
    }
}

fn header(out: &mut String, width: f64) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{PANEL:.0}" viewBox="0 0 {width:.0} {PANEL:.0}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{width:.0}" height="{PANEL:.0}" fill="white"/>"#
    );
}

fn line(out: &mut String, a: (f64, f64), b: (f64, f64), color: &str, width: f64) {
    let _ = writeln!(
        out,
        r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}" stroke-width="{width:.2}"/>"#,
        a.0, a.1, b.0, b.1
    );
}

fn dot(out: &mut String, a: (f64, f64), r: f64, color: &str) {
    let _ = writeln!(
        out,
        r#"<circle cx="{:.3}" cy="{:.3}" r="{r:.1}" fill="{color}"/>"#,
        a.0, a.1
    );
}

fn text(out: &mut String, a: (f64, f64), s: &str) {
    let _ = writeln!(
        out,
        r#"<text x="{:.3}" y="{:.3}" font-size="11" font-family="sans-serif">{s}</text>"#,
        a.0 + 4.0,
        a.1 - 4.0
    );
}

fn bounds(points: impl Iterator<Item = [Q; 2]>, pad: &Q) -> ([Q; 2], [Q; 2]) {
    let pts: Vec<[Q; 2]> = points.collect();
    if pts.is_empty() {
        let z = Q::zero();
        return ([&z - pad, &z - pad], [&z + pad, &z + pad]);
    }
    let ext = |k: usize, max: bool| {
        let it = pts.iter().map(|p| p[k].clone());
        if max { it.max() } else { it.min() }.expect("nonempty")
    };
    (
        [ext(0, false) - pad, ext(1, false) - pad],
        [ext(0, true) + pad, ext(1, true) + pad],
    )
}

/// Where the ray from `base` along `dir` leaves the box.
fn ray_end(base: [f64; 2], dir: &[i64], lo: [f64; 2], hi: [f64; 2]) -> [f64; 2] {
    let mut s = f64::INFINITY;
    for k in 0..2 {
        let d = dir[k] as f64;
        if d > 0.0 {
            s = s.min((hi[k] - base[k]) / d);
        } else if d < 0.0 {
            s = s.min((lo[k] - base[k]) / d);
        }
    }
    let s = s.max(0.0);
    [base[0] + s * dir[0] as f64, base[1] + s * dir[1] as f64]
}

fn curve_box(
    curves: &[&TropicalComplex],
    extra: &[[Q; 2]],
    spec: &RenderSpec,
) -> ([f64; 2], [f64; 2]) {
    let (lo, hi) = spec.viewport.clone().unwrap_or_else(|| {
        let pts = curves.iter().flat_map(|c| {
            c.vertices
                .iter()
                .map(|v| [v.coords[0].clone(), v.coords[1].clone()])
        });
        bounds(pts.chain(extra.iter().cloned()), &spec.ray_overhang)
    });
    ([f(&lo[0]), f(&lo[1])], [f(&hi[0]), f(&hi[1])])
}

fn draw_curve(
    out: &mut String,
    c: &TropicalComplex,
    frame: &Frame,
    lo: [f64; 2],
    hi: [f64; 2],
    color: &str,
    spec: &RenderSpec,
) {
    let pt = |i: usize| [f(&c.vertices[i].coords[0]), f(&c.vertices[i].coords[1])];
    for e in &c.edges {
        let w = e.weight.unwrap_or(1);
        line(
            out,
            frame.map(pt(e.a)),
            frame.map(pt(e.b)),
            color,
            spec.stroke_per_weight * w as f64,
        );
        if spec.labels.weights && w > 1 {
            let (a, b) = (pt(e.a), pt(e.b));
            text(
                out,
                frame.map([(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0]),
                &w.to_string(),
            );
        }
    }
    for r in &c.rays {
        let w = r.weight.unwrap_or(1);
        let end = ray_end(pt(r.base), &r.direction, lo, hi);
        line(
            out,
            frame.map(pt(r.base)),
            frame.map(end),
            color,
            spec.stroke_per_weight * w as f64,
        );
        if spec.labels.weights && w > 1 {
            text(out, frame.map(end), &w.to_string());
        }
    }
    for (i, v) in c.vertices.iter().enumerate() {
        dot(out, frame.map(pt(i)), 3.0, color);
        if spec.labels.dual_cells {
            text(
                out,
                frame.map(pt(i)),
                &format!("({},{})", fmt_q(&v.coords[0]), fmt_q(&v.coords[1])),
            );
        }
    }
}

fn draw_subdivision(out: &mut String, sub: &Subdivision, dx: f64) {
    let pts = &sub.config.points;
    let lo = [0, 1].map(|k| pts.iter().map(|p| p[k]).min().unwrap_or(0) as f64);
    let hi = [0, 1].map(|k| pts.iter().map(|p| p[k]).max().unwrap_or(0) as f64);
    let frame = Frame::new(lo, hi, dx);
    let pf = |p: &[i64]| frame.map([p[0] as f64, p[1] as f64]);
    for i in 0..sub.cells.len() {
        let ring = hull_2d(&sub.cell_points(i));
        let path: Vec<String> = ring
            .iter()
            .map(|p| pf(p))
            .map(|(x, y)| format!("{x:.3},{y:.3}"))
            .collect();
        let _ = writeln!(
            out,
            r##"<polygon points="{}" fill="#eef3fb" stroke="#1f4e9c" stroke-width="1.2"/>"##,
            path.join(" ")
        );
    }
    for (k, p) in pts.iter().enumerate() {
        let color = if sub.config.heights[k].is_some() {
            "#1f4e9c"
        } else {
            "#9aa6b8"
        };
        dot(out, pf(p), 2.5, color);
    }
}

/// The curve on the left and its dual subdivision on the right.
pub fn render_curve(c: &TropicalComplex, spec: &RenderSpec) -> String {
    let mut out = String::new();
    header(&mut out, 2.0 * PANEL);
    let (lo, hi) = curve_box(&[c], &[], spec);
    let frame = Frame::new(lo, hi, 0.0);
    draw_curve(&mut out, c, &frame, lo, hi, "#b3261e", spec);
    draw_subdivision(&mut out, &c.subdivision, PANEL);
    out.push_str("</svg>\n");
    out
}

pub fn render_subdivision(sub: &Subdivision) -> String {
    let mut out = String::new();
    header(&mut out, PANEL);
    draw_subdivision(&mut out, sub, 0.0);
    out.push_str("</svg>\n");
    out
}

/// Both curves overlaid, stable intersection points ringed and labelled
/// with their multiplicities.
pub fn render_intersection(
    c: &TropicalComplex,
    d: &TropicalComplex,
    points: &[IntersectionPoint],
    spec: &RenderSpec,
) -> String {
    let mut out = String::new();
    header(&mut out, PANEL);
    let extra: Vec<[Q; 2]> = points
        .iter()
        .map(|p| [p.location[0].clone(), p.location[1].clone()])
        .collect();
    let (lo, hi) = curve_box(&[c, d], &extra, spec);
    let frame = Frame::new(lo, hi, 0.0);
    draw_curve(&mut out, c, &frame, lo, hi, "#1f4e9c", spec);
    draw_curve(&mut out, d, &frame, lo, hi, "#b3261e", spec);
    for p in points {
        let at = frame.map([f(&p.location[0]), f(&p.location[1])]);
        let _ = writeln!(
            out,
            r##"<circle cx="{:.3}" cy="{:.3}" r="7.0" fill="none" stroke="#1b7f3b" stroke-width="2.00"/>"##,
            at.0, at.1
        );
        text(&mut out, at, &format!("m={}", p.multiplicity));
    }
    out.push_str("</svg>\n");
    out
}

/// Vertices on a circle; parallel edges bow apart, loops hang outward.
pub fn render_metric_graph(g: &MetricGraph, spec: &RenderSpec) -> String {
    let mut out = String::new();
    header(&mut out, PANEL);
    let n = g.n_vertices.max(1) as f64;
    let c = PANEL / 2.0;
    let r = if g.n_vertices <= 1 { 0.0 } else { PANEL / 3.0 };
    let pos = |i: usize| {
        let a = std::f64::consts::TAU * i as f64 / n - std::f64::consts::FRAC_PI_2;
        (c + r * a.cos(), c + r * a.sin())
    };
    let mut seen: Vec<(usize, usize)> = Vec::new();
    for e in &g.edges {
        let key = (e.a.min(e.b), e.a.max(e.b));
        let k = seen.iter().filter(|&&s| s == key).count() as f64;
        seen.push(key);
        let (p, q) = (pos(key.0), pos(key.1));
        let label_at;
        if e.a == e.b {
            let (ox, oy) = if r == 0.0 {
                (0.0, -1.0)
            } else {
                ((p.0 - c) / r, (p.1 - c) / r)
            };
            let rad = 28.0 + 12.0 * k;
            let centre = (p.0 + ox * rad, p.1 + oy * rad);
            let _ = writeln!(
                out,
                r#"<circle cx="{:.3}" cy="{:.3}" r="{rad:.1}" fill="none" stroke="black" stroke-width="1.50"/>"#,
                centre.0, centre.1
            );
            label_at = (centre.0 + ox * rad, centre.1 + oy * rad);
        } else {
            // Alternate sides: 0, +1, -1, +2, ...
            let side = if k == 0.0 {
                0.0
            } else if k % 2.0 == 1.0 {
                (k + 1.0) / 2.0
            } else {
                -k / 2.0
            };
            let (mx, my) = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
            let (dx, dy) = (q.0 - p.0, q.1 - p.1);
            let len = (dx * dx + dy * dy).sqrt().max(1e-9);
            let ctrl = (mx - dy / len * 40.0 * side, my + dx / len * 40.0 * side);
            let _ = writeln!(
                out,
                r#"<path d="M {:.3} {:.3} Q {:.3} {:.3} {:.3} {:.3}" fill="none" stroke="black" stroke-width="1.50"/>"#,
                p.0, p.1, ctrl.0, ctrl.1, q.0, q.1
            );
            label_at = ((mx + ctrl.0) / 2.0, (my + ctrl.1) / 2.0);
        }
        if spec.labels.lengths {
            text(&mut out, label_at, &fmt_q(&e.length));
        }
    }
    for i in 0..g.n_vertices {
        dot(&mut out, pos(i), 4.0, "black");
    }
    out.push_str("</svg>\n");
    out
}
