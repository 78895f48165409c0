//! Lattice polygons: interior hulls, pushouts, unimodular equivalence.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::hull::{double_area, hull_2d};
use crate::error::{Error, Result};
use crate::rational::{gcd_i64, Q};

pub type Pt = [i64; 2];

/// A two-dimensional lattice polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePolygon {
    vertices: Vec<Pt>,
}

fn as_vecs(pts: &[Pt]) -> Vec<Vec<i64>> {
    pts.iter().map(|p| p.to_vec()).collect()
}

impl LatticePolygon {
    /// Convex hull of the given points; fails unless it is two-dimensional.
    pub fn hull(points: &[Pt]) -> Result<Self> {
        let h = hull_2d(&as_vecs(points));
        if h.len() < 3 {
            return Err(Error::Degenerate("points do not span a polygon".into()));
        }
        Ok(Self {
            vertices: h.into_iter().map(|v| [v[0], v[1]]).collect(),
        })
    }

    pub fn vertices(&self) -> &[Pt] {
        &self.vertices
    }

    /// Standard triangle of degree `d`.
    pub fn standard_triangle(d: i64) -> Self {
        Self::hull(&[[0, 0], [d, 0], [0, d]]).expect("d >= 1")
    }

    pub fn rectangle(w: i64, h: i64) -> Self {
        Self::hull(&[[0, 0], [w, 0], [w, h], [0, h]]).expect("positive sides")
    }

    /// Twice the area.
    pub fn double_area(&self) -> i64 {
        double_area(&as_vecs(&self.vertices))
    }

    /// Edges as `a x + b y <= c` with primitive outward normal `(a, b)`.
    pub fn inequalities(&self) -> Vec<(i64, i64, i64)> {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (p, q) = (self.vertices[i], self.vertices[(i + 1) % n]);
                let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
                let g = gcd_i64(dx, dy);
                let (a, b) = (dy / g, -dx / g);
                (a, b, a * p[0] + b * p[1])
            })
            .collect()
    }

    pub fn contains(&self, p: Pt) -> bool {
        self.inequalities()
            .iter()
            .all(|&(a, b, c)| a * p[0] + b * p[1] <= c)
    }

    pub fn strictly_contains(&self, p: Pt) -> bool {
        self.inequalities()
            .iter()
            .all(|&(a, b, c)| a * p[0] + b * p[1] < c)
    }

    fn bbox(&self) -> (Pt, Pt) {
        let xs = self.vertices.iter().map(|v| v[0]);
        let ys = self.vertices.iter().map(|v| v[1]);
        (
            [xs.clone().min().unwrap(), ys.clone().min().unwrap()],
            [xs.max().unwrap(), ys.max().unwrap()],
        )
    }

    /// All lattice points, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<Pt> {
        let (lo, hi) = self.bbox();
        let ineq = self.inequalities();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                if ineq.iter().all(|&(a, b, c)| a * x + b * y <= c) {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    pub fn interior_points(&self) -> Vec<Pt> {
        let (lo, hi) = self.bbox();
        let ineq = self.inequalities();
        let mut out = Vec::new();
        for x in lo[0]..=hi[0] {
            for y in lo[1]..=hi[1] {
                if ineq.iter().all(|&(a, b, c)| a * x + b * y < c) {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    pub fn boundary_point_count(&self) -> usize {
        let n = self.vertices.len();
        (0..n)
            .map(|i| {
                let (p, q) = (self.vertices[i], self.vertices[(i + 1) % n]);
                gcd_i64(q[0] - p[0], q[1] - p[1]) as usize
            })
            .sum()
    }

    /// Number of interior lattice points.
    pub fn genus(&self) -> usize {
        self.interior_points().len()
    }

    pub fn translate(&self, t: Pt) -> Self {
        Self {
            vertices: self
                .vertices
                .iter()
                .map(|v| [v[0] + t[0], v[1] + t[1]])
                .collect(),
        }
    }

    pub fn transform(&self, map: &AffineMap) -> Self {
        let pts: Vec<Pt> = self.vertices.iter().map(|&v| map.apply(v)).collect();
        Self::hull(&pts).expect("unimodular image of a polygon")
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vertices
            .iter()
            .map(|v| format!("({},{})", v[0], v[1]))
            .collect();
        write!(f, "conv{{{}}}", parts.join(","))
    }
}

/// `x -> M x + t` with `M` an integer matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineMap {
    pub m: [[i64; 2]; 2],
    pub t: Pt,
}

impl AffineMap {
    pub const IDENTITY: Self = Self {
        m: [[1, 0], [0, 1]],
        t: [0, 0],
    };

    pub fn apply(&self, p: Pt) -> Pt {
        [
            self.m[0][0] * p[0] + self.m[0][1] * p[1] + self.t[0],
            self.m[1][0] * p[0] + self.m[1][1] * p[1] + self.t[1],
        ]
    }

    pub fn det(&self) -> i64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// The affine map sending `a_i -> b_i` for three non-collinear `a_i`,
    /// if it is integral and unimodular.
    pub fn from_triples(a: [Pt; 3], b: [Pt; 3]) -> Option<Self> {
        let (u1, u2) = (
            [a[1][0] - a[0][0], a[1][1] - a[0][1]],
            [a[2][0] - a[0][0], a[2][1] - a[0][1]],
        );
        let (w1, w2) = (
            [b[1][0] - b[0][0], b[1][1] - b[0][1]],
            [b[2][0] - b[0][0], b[2][1] - b[0][1]],
        );
        let d = u1[0] * u2[1] - u2[0] * u1[1];
        if d == 0 {
            return None;
        }
        // M = W U^{-1}, U = [u1 u2] as columns.
        let inv = [[u2[1], -u2[0]], [-u1[1], u1[0]]];
        let mut m = [[0i64; 2]; 2];
        for r in 0..2 {
            let w = [w1[r], w2[r]];
            for c in 0..2 {
                let num = w[0] * inv[0][c] + w[1] * inv[1][c];
                if num % d != 0 {
                    return None;
                }
                m[r][c] = num / d;
            }
        }
        let mut map = Self { m, t: [0, 0] };
        if map.det().abs() != 1 {
            return None;
        }
        let img = map.apply(a[0]);
        map.t = [b[0][0] - img[0], b[0][1] - img[1]];
        Some(map)
    }
}

/// Affine unimodular maps sending the polygon onto itself.
pub fn lattice_automorphisms(p: &LatticePolygon) -> Vec<AffineMap> {
    let v = p.vertices();
    let n = v.len();
    let mut target: Vec<Pt> = v.to_vec();
    target.sort_unstable();
    let mut out = Vec::new();
    for i in 0..n {
        for s in [1usize, n - 1] {
            let b = [v[i], v[(i + s) % n], v[(i + 2 * s) % n]];
            if let Some(map) = AffineMap::from_triples([v[0], v[1], v[2]], b) {
                let mut img: Vec<Pt> = v.iter().map(|&x| map.apply(x)).collect();
                img.sort_unstable();
                if img == target && !out.contains(&map) {
                    out.push(map);
                }
            }
        }
    }
    out.sort();
    out
}

/// Unimodular `M` with `M u = (1, 0)` for primitive `u`.
fn align(u: Pt) -> [[i64; 2]; 2] {
    let (g, x, y) = ext_gcd(u[0], u[1]);
    debug_assert_eq!(g, 1);
    [[x, y], [-u[1], u[0]]]
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Canonical representative of the unimodular equivalence class.
///
/// For every vertex and orientation, the incident edge is mapped onto the
/// positive x-axis from the origin with the polygon above it, and the shear
/// is fixed by placing the other neighbouring vertex at `(p, q)` with
/// `0 <= p < q`. The lexicographically least sorted vertex list wins.
pub fn polygon_normal_form(p: &LatticePolygon) -> LatticePolygon {
    let v = p.vertices();
    let n = v.len();
    let mut best: Option<Vec<Pt>> = None;
    for i in 0..n {
        for s in [1usize, n - 1] {
            let (a, b, c) = (v[i], v[(i + s) % n], v[(i + n - s) % n]);
            let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
            let g = gcd_i64(dx, dy);
            let m = align([dx / g, dy / g]);
            let step = |x: Pt| {
                let d = [x[0] - a[0], x[1] - a[1]];
                [
                    m[0][0] * d[0] + m[0][1] * d[1],
                    m[1][0] * d[0] + m[1][1] * d[1],
                ]
            };
            let mut pts: Vec<Pt> = v.iter().map(|&x| step(x)).collect();
            let mut other = step(c);
            if other[1] < 0 {
                for x in pts.iter_mut() {
                    x[1] = -x[1];
                }
                other[1] = -other[1];
            }
            let k = -Integer::div_floor(&other[0], &other[1]);
            for x in pts.iter_mut() {
                x[0] += k * x[1];
            }
            pts.sort_unstable();
            if best.as_ref().map_or(true, |b| pts < *b) {
                best = Some(pts);
            }
        }
    }
    LatticePolygon::hull(&best.expect("polygon has vertices")).expect("polygon")
}

pub fn equivalent(a: &LatticePolygon, b: &LatticePolygon) -> bool {
    polygon_normal_form(a) == polygon_normal_form(b)
}

/// Convex hull of the interior lattice points, by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InteriorHull {
    Empty,
    Point(Pt),
    Segment(Pt, Pt),
    Polygon(LatticePolygon),
}

pub fn interior_hull(p: &LatticePolygon) -> InteriorHull {
    let pts = p.interior_points();
    match pts.len() {
        0 => InteriorHull::Empty,
        1 => InteriorHull::Point(pts[0]),
        _ => match LatticePolygon::hull(&pts) {
            Ok(q) => InteriorHull::Polygon(q),
            Err(_) => InteriorHull::Segment(pts[0], *pts.last().expect("nonempty")),
        },
    }
}

/// Relaxes every edge inequality by one. `None` if the result has a
/// non-integral vertex.
pub fn pushout(q: &LatticePolygon) -> Option<LatticePolygon> {
    let ineq: Vec<(i64, i64, i64)> = q
        .inequalities()
        .into_iter()
        .map(|(a, b, c)| (a, b, c + 1))
        .collect();
    let mut verts: Vec<Pt> = Vec::new();
    for i in 0..ineq.len() {
        for j in i + 1..ineq.len() {
            let (a1, b1, c1) = ineq[i];
            let (a2, b2, c2) = ineq[j];
            let d = a1 * b2 - a2 * b1;
            if d == 0 {
                continue;
            }
            let x = Q::new((c1 * b2 - c2 * b1).into(), d.into());
            let y = Q::new((a1 * c2 - a2 * c1).into(), d.into());
            let feasible = ineq.iter().all(|&(a, b, c)| {
                Q::from_integer(a.into()) * &x + Q::from_integer(b.into()) * &y
                    <= Q::from_integer(c.into())
            });
            if !feasible {
                continue;
            }
            if !x.is_integer() || !y.is_integer() {
                return None;
            }
            let p = [
                x.to_integer().try_into().ok()?,
                y.to_integer().try_into().ok()?,
            ];
            if !verts.contains(&p) {
                verts.push(p);
            }
        }
    }
    LatticePolygon::hull(&verts).ok()
}
