//! Tropical plane curves and surfaces, built dually from the subdivision of
//! the Newton polytope induced by the coefficients.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::hull::{facets, hull_2d, widen};
use crate::geometry::{is_unimodular, linalg, newton_polytope, regular_subdivision, Subdivision};
use crate::polynomial::TropicalPolynomial;
use crate::rational::{gcd_i64, primitive, rational_direction, serde_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    #[serde(with = "serde_q::vec")]
    pub coords: Vec<Q>,
    /// Index of the dual full-dimensional cell.
    pub dual_cell: usize,
}

/// Bounded edge from `a` to `b`; `direction` is primitive and points from `a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub direction: Vec<i64>,
    pub weight: Option<u32>,
    /// Point indices of the dual interior face.
    pub dual_face: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ray {
    pub base: usize,
    pub direction: Vec<i64>,
    pub weight: Option<u32>,
    pub dual_face: Vec<usize>,
}

/// Two-dimensional cell of a surface, dual to an edge of the subdivision.
/// Bounded cells list their vertex cycle; unbounded ones the vertex path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell2 {
    pub bounded: bool,
    pub dual_edge: [usize; 2],
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalComplex {
    pub ambient_dim: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub rays: Vec<Ray>,
    pub cells2d: Vec<Cell2>,
    pub subdivision: Subdivision,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCounts {
    pub vertices: usize,
    pub bounded_edges: usize,
    pub rays: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCounts {
    pub vertices: usize,
    pub edges: usize,
    pub rays: usize,
    pub bounded_2cells: usize,
    pub unbounded_2cells: usize,
}

impl TropicalComplex {
    pub fn curve_counts(&self) -> CurveCounts {
        CurveCounts {
            vertices: self.vertices.len(),
            bounded_edges: self.edges.len(),
            rays: self.rays.len(),
        }
    }

    pub fn surface_counts(&self) -> SurfaceCounts {
        SurfaceCounts {
            vertices: self.vertices.len(),
            edges: self.edges.len(),
            rays: self.rays.len(),
            bounded_2cells: self.cells2d.iter().filter(|c| c.bounded).count(),
            unbounded_2cells: self.cells2d.iter().filter(|c| !c.bounded).count(),
        }
    }

    /// Number of edges and rays at each vertex.
    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.a == v || e.b == v).count()
            + self.rays.iter().filter(|r| r.base == v).count()
    }
}

fn dual_vertices(p: &TropicalPolynomial, sub: &Subdivision) -> Result<Vec<Vertex>> {
    let mut out = Vec::with_capacity(sub.cells.len());
    for (i, cell) in sub.cells.iter().enumerate() {
        let w = sub.dual_vertex(i).expect("induced subdivision");
        // The tie system is overdetermined; check it against the polynomial.
        let (_, arg) = p.evaluate(&w)?;
        let mut got: Vec<Vec<i64>> = arg
            .iter()
            .map(|e| e.iter().map(|&k| k as i64).collect())
            .collect();
        got.sort();
        let mut want: Vec<Vec<i64>> = cell.iter().map(|&k| sub.config.points[k].clone()).collect();
        want.sort();
        if got != want {
            return Err(Error::Degenerate(format!(
                "vertex of cell {i} does not tie exactly the cell's terms"
            )));
        }
        out.push(Vertex {
            coords: w,
            dual_cell: i,
        });
    }
    Ok(out)
}

/// Direction from `from` to `to`, checked to be a positive multiple of `normal`.
fn edge_direction(from: &[Q], to: &[Q], normal: &[i64]) -> Result<Vec<i64>> {
    let diff: Vec<Q> = to.iter().zip(from).map(|(a, b)| a - b).collect();
    let (_, dir) =
        rational_direction(&diff).ok_or_else(|| Error::Degenerate("coincident vertices".into()))?;
    if dir != primitive(normal) {
        return Err(Error::Degenerate(format!(
            "edge direction {dir:?} is not the outward normal {normal:?}"
        )));
    }
    Ok(dir)
}

fn subdivide(p: &TropicalPolynomial, n: usize) -> Result<Subdivision> {
    if p.n_vars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: p.n_vars(),
        });
    }
    let config = newton_polytope(p)?;
    if config.affine_dim() != n {
        return Err(Error::Degenerate(format!(
            "the Newton polytope is not {n}-dimensional; the tropical hypersurface is a union of parallel \
             affine spaces. Add a term off the affine hull of the support."
        )));
    }
    regular_subdivision(&config)
}

/// The tropical curve of a bivariate polynomial.
pub fn build_curve(p: &TropicalPolynomial) -> Result<TropicalComplex> {
    curve_from_subdivision(p, subdivide(p, 2)?)
}

/// The curve of `p` given the subdivision its coefficients induce (with
/// functionals); every vertex is still checked against `p`.
pub fn curve_from_subdivision(p: &TropicalPolynomial, sub: Subdivision) -> Result<TropicalComplex> {
    if sub.dim() != 2 || sub.functionals.len() != sub.cells.len() {
        return Err(Error::domain(
            "expected an induced subdivision of a polygon",
        ));
    }
    let vertices = dual_vertices(p, &sub)?;
    let pts = &sub.config.points;
    // Edge (by endpoint indices) -> cells using it, with the ccw orientation.
    let mut sides: BTreeMap<(usize, usize), Vec<(usize, usize, usize)>> = BTreeMap::new();
    for (i, cell) in sub.cells.iter().enumerate() {
        let ring = hull_2d(&sub.cell_points(i));
        let idx: Vec<usize> = ring
            .iter()
            .map(|v| cell[sub.cell_points(i).iter().position(|x| x == v).unwrap()])
            .collect();
        for k in 0..idx.len() {
            let (u, v) = (idx[k], idx[(k + 1) % idx.len()]);
            sides
                .entry((u.min(v), u.max(v)))
                .or_default()
                .push((i, u, v));
        }
    }
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for ((lo, hi), users) in sides {
        let d = [pts[hi][0] - pts[lo][0], pts[hi][1] - pts[lo][1]];
        let weight = gcd_i64(d[0], d[1]) as u32;
        let on_edge: Vec<usize> = (0..pts.len())
            .filter(|&k| {
                let e = [pts[k][0] - pts[lo][0], pts[k][1] - pts[lo][1]];
                e[0] * d[1] - e[1] * d[0] == 0
                    && (0..2).all(|c| e[c] * d[c] >= 0 && e[c].abs() <= d[c].abs())
            })
            .filter(|&k| sub.config.heights[k].is_some())
            .collect();
        let normal_of = |u: usize, v: usize| [pts[v][1] - pts[u][1], -(pts[v][0] - pts[u][0])];
        match users.as_slice() {
            [(c, u, v)] => rays.push(Ray {
                base: *c,
                direction: primitive(&normal_of(*u, *v)),
                weight: Some(weight),
                dual_face: on_edge,
            }),
            [(c1, u, v), (c2, _, _)] => {
                let direction = edge_direction(
                    &vertices[*c1].coords,
                    &vertices[*c2].coords,
                    &normal_of(*u, *v),
                )?;
                edges.push(Edge {
                    a: *c1,
                    b: *c2,
                    direction,
                    weight: Some(weight),
                    dual_face: on_edge,
                });
            }
            _ => {
                return Err(Error::InvalidSubdivision(
                    "edge shared by more than two cells".into(),
                ))
            }
        }
    }
    edges.sort_by(|x, y| (x.a, x.b).cmp(&(y.a, y.b)));
    rays.sort_by(|x, y| (x.base, &x.direction).cmp(&(y.base, &y.direction)));
    Ok(TropicalComplex {
        ambient_dim: 2,
        vertices,
        edges,
        rays,
        cells2d: Vec::new(),
        subdivision: sub,
    })
}

/// The tropical surface of a trivariate polynomial.
pub fn build_surface(p: &TropicalPolynomial) -> Result<TropicalComplex> {
    let sub = subdivide(p, 3)?;
    let vertices = dual_vertices(p, &sub)?;
    let pts = &sub.config.points;
    // 2-faces: sorted point set -> (cell, outward normal).
    let mut faces: BTreeMap<Vec<usize>, Vec<(usize, Vec<i64>)>> = BTreeMap::new();
    let mut cell_facets: Vec<Vec<Vec<usize>>> = Vec::new();
    for (i, cell) in sub.cells.iter().enumerate() {
        let mut mine = Vec::new();
        for f in facets(&widen(&sub.cell_points(i)))? {
            let mut key: Vec<usize> = f.on.iter().map(|&j| cell[j]).collect();
            key.sort_unstable();
            let normal: Vec<i64> = f.normal.iter().map(|&x| x as i64).collect();
            faces.entry(key.clone()).or_default().push((i, normal));
            mine.push(key);
        }
        cell_facets.push(mine);
    }
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    let mut boundary_faces: Vec<&Vec<usize>> = Vec::new();
    for (key, users) in &faces {
        match users.as_slice() {
            [(c, n)] => {
                rays.push(Ray {
                    base: *c,
                    direction: primitive(n),
                    weight: None,
                    dual_face: key.clone(),
                });
                boundary_faces.push(key);
            }
            [(c1, n), (c2, _)] => {
                let direction = edge_direction(&vertices[*c1].coords, &vertices[*c2].coords, n)?;
                edges.push(Edge {
                    a: *c1,
                    b: *c2,
                    direction,
                    weight: None,
                    dual_face: key.clone(),
                });
            }
            _ => {
                return Err(Error::InvalidSubdivision(
                    "face shared by more than two cells".into(),
                ))
            }
        }
    }
    // Edges of the subdivision, keyed by their two extreme points.
    let mut sub_edges: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for (i, fs) in cell_facets.iter().enumerate() {
        for a in 0..fs.len() {
            for b in a + 1..fs.len() {
                let common: Vec<usize> = fs[a]
                    .iter()
                    .filter(|k| fs[b].contains(k))
                    .copied()
                    .collect();
                if common.len() < 2 {
                    continue;
                }
                let refs: Vec<&[i64]> = common.iter().map(|&k| pts[k].as_slice()).collect();
                if linalg::affine_rank(&refs) != 1 {
                    continue;
                }
                let lo = *common
                    .iter()
                    .min_by(|&&x, &&y| pts[x].cmp(&pts[y]))
                    .unwrap();
                let hi = *common
                    .iter()
                    .max_by(|&&x, &&y| pts[x].cmp(&pts[y]))
                    .unwrap();
                let users = sub_edges.entry([lo, hi]).or_default();
                if !users.contains(&i) {
                    users.push(i);
                }
            }
        }
    }
    let mut cells2d = Vec::new();
    for (key, around) in sub_edges {
        let bounded = !boundary_faces
            .iter()
            .any(|f| f.contains(&key[0]) && f.contains(&key[1]));
        // Cells around the edge are linked through faces containing it.
        let link = |x: usize, y: usize| {
            cell_facets[x]
                .iter()
                .any(|f| f.contains(&key[0]) && f.contains(&key[1]) && cell_facets[y].contains(f))
        };
        let start = if bounded {
            around[0]
        } else {
            *around
                .iter()
                .find(|&&c| around.iter().filter(|&&o| o != c && link(c, o)).count() <= 1)
                .unwrap_or(&around[0])
        };
        let mut order = vec![start];
        while let Some(&next) = around
            .iter()
            .find(|&&o| !order.contains(&o) && link(*order.last().expect("nonempty"), o))
        {
            order.push(next);
        }
        cells2d.push(Cell2 {
            bounded,
            dual_edge: key,
            vertices: order,
        });
    }
    edges.sort_by(|x, y| (x.a, x.b).cmp(&(y.a, y.b)));
    rays.sort_by(|x, y| (x.base, &x.direction).cmp(&(y.base, &y.direction)));
    Ok(TropicalComplex {
        ambient_dim: 3,
        vertices,
        edges,
        rays,
        cells2d,
        subdivision: sub,
    })
}

/// Result of the balancing check on a curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Balancing {
    pub balanced: bool,
    pub offending_vertex: Option<usize>,
}

/// At every vertex, weighted primitive outgoing directions sum to zero.
pub fn check_balancing(t: &TropicalComplex) -> Balancing {
    let d = t.ambient_dim;
    let mut sums = vec![vec![0i64; d]; t.vertices.len()];
    for e in &t.edges {
        let w = e.weight.unwrap_or(1) as i64;
        for k in 0..d {
            sums[e.a][k] += w * e.direction[k];
            sums[e.b][k] -= w * e.direction[k];
        }
    }
    for r in &t.rays {
        let w = r.weight.unwrap_or(1) as i64;
        for k in 0..d {
            sums[r.base][k] += w * r.direction[k];
        }
    }
    let bad = sums.iter().position(|s| s.iter().any(|&x| x != 0));
    Balancing {
        balanced: bad.is_none(),
        offending_vertex: bad,
    }
}

/// Dual subdivision unimodular; for curves also trivalent with unit weights.
pub fn is_smooth(t: &TropicalComplex) -> Result<bool> {
    if !is_unimodular(&t.subdivision)? {
        return Ok(false);
    }
    if t.ambient_dim == 2 {
        let unit = t
            .edges
            .iter()
            .map(|e| e.weight)
            .chain(t.rays.iter().map(|r| r.weight))
            .all(|w| w == Some(1));
        return Ok(unit && (0..t.vertices.len()).all(|v| t.valence(v) == 3));
    }
    Ok(true)
}

/// Component counts of a smooth plane curve of degree `d`.
pub fn smooth_curve_counts(d: usize) -> CurveCounts {
    CurveCounts {
        vertices: d * d,
        bounded_edges: 3 * d * (d - 1) / 2,
        rays: 3 * d,
    }
}

/// Component counts of a smooth surface of degree `d` and its Euler characteristic.
pub fn smooth_surface_counts(d: usize) -> (SurfaceCounts, i64) {
    let di = d as i64;
    let counts = SurfaceCounts {
        vertices: d * d * d,
        edges: 2 * d * d * (d - 1),
        rays: 4 * d * d,
        bounded_2cells: (di * (di - 1) * (7 * di - 11) / 6) as usize,
        unbounded_2cells: 6 * d * d,
    };
    (counts, (di - 1) * (di - 2) * (di - 3) / 6 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn poly(s: &str) -> TropicalPolynomial {
        TropicalPolynomial::parse(s).unwrap()
    }

    #[test]
    fn tropical_line() {
        let c = build_curve(&poly("x (+) y (+) 0")).unwrap();
        assert_eq!(c.vertices.len(), 1);
        assert_eq!(c.vertices[0].coords, vec![q(0), q(0)]);
        let mut dirs: Vec<Vec<i64>> = c.rays.iter().map(|r| r.direction.clone()).collect();
        dirs.sort();
        assert_eq!(dirs, vec![vec![-1, 0], vec![0, -1], vec![1, 1]]);
        assert!(check_balancing(&c).balanced);
        assert!(is_smooth(&c).unwrap());
    }

    #[test]
    fn quadric_curve() {
        let c = build_curve(&poly(
            "1(*)x^2 (+) 1(*)y^2 (+) 2(*)xy (+) 2(*)x (+) 2(*)y (+) 1",
        ))
        .unwrap();
        assert_eq!(
            c.curve_counts(),
            CurveCounts {
                vertices: 4,
                bounded_edges: 3,
                rays: 6
            }
        );
        assert_eq!(c.curve_counts(), smooth_curve_counts(2));
        assert!(c.vertices.iter().any(|v| v.coords == vec![q(0), q(1)]));
        assert!(check_balancing(&c).balanced);
        assert!(is_smooth(&c).unwrap());
    }

    #[test]
    fn doubled_line() {
        let c = build_curve(&poly("x^2 (+) y^2 (+) 0")).unwrap();
        assert_eq!(c.vertices.len(), 1);
        assert!(c.rays.iter().all(|r| r.weight == Some(2)));
        assert!(check_balancing(&c).balanced);
        assert!(!is_smooth(&c).unwrap());
    }

    #[test]
    fn three_ray_curve() {
        let c = build_curve(&poly("x (+) xy^2 (+) y^2")).unwrap();
        let mut rays: Vec<(Vec<i64>, Option<u32>)> = c
            .rays
            .iter()
            .map(|r| (r.direction.clone(), r.weight))
            .collect();
        rays.sort();
        assert_eq!(
            rays,
            vec![
                (vec![-2, -1], Some(1)),
                (vec![0, 1], Some(1)),
                (vec![1, 0], Some(2))
            ]
        );
        assert!(check_balancing(&c).balanced);
    }

    #[test]
    fn lower_dimensional_newton_polygon() {
        assert!(matches!(
            build_curve(&poly("x (+) y")),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn tropical_plane() {
        let s = build_surface(&poly("x (+) y (+) z (+) 0")).unwrap();
        assert_eq!(
            s.surface_counts(),
            SurfaceCounts {
                vertices: 1,
                edges: 0,
                rays: 4,
                bounded_2cells: 0,
                unbounded_2cells: 6
            }
        );
        assert_eq!(smooth_surface_counts(1).0, s.surface_counts());
        assert!(check_balancing(&s).balanced);
    }

    #[test]
    fn almost_cube_surface() {
        let s = build_surface(&poly("xyz (+) -42(*)xy (+) x (+) y (+) z (+) -42")).unwrap();
        let mut coords: Vec<Vec<Q>> = s.vertices.iter().map(|v| v.coords.clone()).collect();
        coords.sort();
        assert_eq!(
            coords,
            vec![
                vec![q(-42), q(-42), q(-42)],
                vec![q(0), q(0), q(0)],
                vec![q(42), q(42), q(-42)]
            ]
        );
        let c = s.surface_counts();
        assert_eq!(
            (c.edges, c.rays, c.bounded_2cells, c.unbounded_2cells),
            (2, 8, 0, 12)
        );
        assert!(!is_smooth(&s).unwrap());
    }

    #[test]
    fn surface_count_formulas() {
        assert_eq!(
            smooth_surface_counts(2),
            (
                SurfaceCounts {
                    vertices: 8,
                    edges: 8,
                    rays: 16,
                    bounded_2cells: 1,
                    unbounded_2cells: 24
                },
                1
            )
        );
        assert_eq!(
            smooth_surface_counts(3),
            (
                SurfaceCounts {
                    vertices: 27,
                    edges: 36,
                    rays: 36,
                    bounded_2cells: 10,
                    unbounded_2cells: 54
                },
                1
            )
        );
        assert_eq!(
            smooth_curve_counts(4),
            CurveCounts {
                vertices: 16,
                bounded_edges: 18,
                rays: 12
            }
        );
    }

    #[test]
    fn challenge_surfaces_are_smooth() {
        let f = poly(
            "-3(*)x^2 (+) -4(*)xy (+) xz (+) -7(*)y^2 (+) -2(*)yz (+) -1(*)z^2 (+) x (+) y (+) -2(*)z (+) -7",
        );
        let s = build_surface(&f).unwrap();
        assert!(is_smooth(&s).unwrap());
        assert_eq!(s.surface_counts(), smooth_surface_counts(2).0);
        assert!(check_balancing(&s).balanced);
        let g = poly(
            "-23(*)x^3 (+) -15(*)x^2y (+) -7(*)x^2z (+) -15(*)xy^2 (+) xyz (+) -3(*)xz^2 (+) -25(*)y^3 \
             (+) -6(*)y^2z (+) -10(*)yz^2 (+) -20(*)z^3 (+) -2(*)x^2 (+) -6(*)xy (+) -1(*)xz (+) -14(*)y^2 \
             (+) yz (+) -9(*)z^2 (+) -11(*)x (+) -4(*)y (+) -9(*)z (+) -21",
        );
        let s = build_surface(&g).unwrap();
        assert!(is_smooth(&s).unwrap());
        assert_eq!(s.surface_counts(), smooth_surface_counts(3).0);
        assert!(s
            .cells2d
            .iter()
            .filter(|c| c.bounded)
            .all(|c| c.vertices.len() >= 3));
    }
}
