//! Curves in R³ cut out by two tropical surfaces, read off the mixed cells
//! of the subdivision of the Cayley polytope.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::hull::{facets, widen};
use crate::geometry::{cayley, is_unimodular, newton_polytope, regular_subdivision, Subdivision};
use crate::hypersurface::{Edge, Ray, Vertex};
use crate::polynomial::TropicalPolynomial;
use crate::rational::{primitive, rational_direction, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceCurve {
    /// `dual_cell` indexes the cells of `subdivision`.
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub rays: Vec<Ray>,
    /// `E - V + 1` of the graph of vertices and bounded edges.
    pub genus: i64,
    /// Every cell of the Cayley subdivision has minimal volume.
    pub smooth: bool,
    pub subdivision: Subdivision,
}

/// Expected counts `(vertices, edges, rays, genus)` for a smooth curve cut
/// out by surfaces of degrees `d` and `e`.
pub fn smooth_space_curve_counts(d: i64, e: i64) -> (i64, i64, i64, i64) {
    let v = d * d * e + d * e * e;
    (v, 3 * v / 2 - 2 * d * e, 4 * d * e, v / 2 - 2 * d * e + 1)
}

fn exps(pts: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut v = pts.to_vec();
    v.sort();
    v
}

fn tie_set(p: &TropicalPolynomial, w: &[Q]) -> Result<Vec<Vec<i64>>> {
    let (_, arg) = p.evaluate(w)?;
    Ok(exps(
        &arg.iter()
            .map(|e| e.iter().map(|&k| k as i64).collect())
            .collect::<Vec<_>>(),
    ))
}

/// The stable intersection of `T(p)` and `T(q)` for trivariate `p`, `q`.
pub fn space_curve(p: &TropicalPolynomial, q: &TropicalPolynomial) -> Result<SpaceCurve> {
    let mut configs = Vec::new();
    for f in [p, q] {
        if f.n_vars() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                got: f.n_vars(),
            });
        }
        let c = newton_polytope(f)?;
        if c.affine_dim() != 3 {
            return Err(Error::Degenerate(format!(
                "the Newton polytope of {f} is not 3-dimensional"
            )));
        }
        configs.push(c);
    }
    let n_p = configs[0].len();
    let sub = regular_subdivision(&cayley(&configs[0], &configs[1])?)?;
    let pts = &sub.config.points;
    let split = |ix: &[usize]| -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let part = |lo: bool| {
            ix.iter()
                .filter(|&&k| (k < n_p) == lo)
                .map(|&k| pts[k][..3].to_vec())
                .collect()
        };
        (part(true), part(false))
    };
    let mixed = |ix: &[usize]| {
        let (a, b) = split(ix);
        a.len() >= 2 && b.len() >= 2
    };

    let mut vertex_of = BTreeMap::new();
    let mut vertices = Vec::new();
    for (i, cell) in sub.cells.iter().enumerate() {
        if !mixed(cell) {
            continue;
        }
        let w: Vec<Q> = sub.dual_vertex(i).expect("induced subdivision")[..3].to_vec();
        let (a, b) = split(cell);
        if tie_set(p, &w)? != exps(&a) || tie_set(q, &w)? != exps(&b) {
            return Err(Error::Degenerate(format!(
                "mixed cell {i} does not match the ties at {w:?}"
            )));
        }
        vertex_of.insert(i, vertices.len());
        vertices.push(Vertex {
            coords: w,
            dual_cell: i,
        });
    }

    let mut faces: BTreeMap<Vec<usize>, Vec<(usize, Vec<i64>)>> = BTreeMap::new();
    for (&i, _) in &vertex_of {
        let cell = &sub.cells[i];
        for f in facets(&widen(&sub.cell_points(i)))? {
            let mut key: Vec<usize> = f.on.iter().map(|&j| cell[j]).collect();
            key.sort_unstable();
            if mixed(&key) {
                faces
                    .entry(key)
                    .or_default()
                    .push((i, f.normal.iter().map(|&x| x as i64).collect()));
            }
        }
    }
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for (key, users) in faces {
        let (a, b) = split(&key);
        let perpendicular = |d: &[i64]| {
            [&a, &b].iter().all(|part| {
                part.iter()
                    .all(|x| (0..3).map(|k| (x[k] - part[0][k]) * d[k]).sum::<i64>() == 0)
            })
        };
        match users.as_slice() {
            [(c, n)] => {
                let direction = primitive(&n[..3]);
                if !perpendicular(&direction) {
                    return Err(Error::Degenerate(
                        "ray not perpendicular to its dual faces".into(),
                    ));
                }
                rays.push(Ray {
                    base: vertex_of[c],
                    direction,
                    weight: None,
                    dual_face: key,
                });
            }
            [(c1, _), (c2, _)] => {
                let (va, vb) = (vertex_of[c1], vertex_of[c2]);
                let diff: Vec<Q> = vertices[vb]
                    .coords
                    .iter()
                    .zip(&vertices[va].coords)
                    .map(|(x, y)| x - y)
                    .collect();
                let (_, direction) = rational_direction(&diff)
                    .ok_or_else(|| Error::Degenerate("coincident curve vertices".into()))?;
                if !perpendicular(&direction) {
                    return Err(Error::Degenerate(
                        "edge not perpendicular to its dual faces".into(),
                    ));
                }
                edges.push(Edge {
                    a: va,
                    b: vb,
                    direction,
                    weight: None,
                    dual_face: key,
                });
            }
            _ => {
                return Err(Error::InvalidSubdivision(
                    "facet shared by more than two cells".into(),
                ))
            }
        }
    }
    let genus = edges.len() as i64 - vertices.len() as i64 + 1;
    let smooth = is_unimodular(&sub)?;
    Ok(SpaceCurve {
        vertices,
        edges,
        rays,
        genus,
        smooth,
        subdivision: sub,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn poly(s: &str) -> TropicalPolynomial {
        TropicalPolynomial::parse(s).unwrap()
    }

    #[test]
    fn tropical_line_in_space() {
        let p = poly("-1(*)x (+) -1(*)y (+) z (+) 1");
        let g = poly("-2(*)x (+) 1(*)y (+) 1(*)z (+) -1");
        let c = space_curve(&p, &g).unwrap();
        assert!(c.smooth);
        assert_eq!(c.subdivision.cells.len(), 4);
        assert_eq!(
            (c.vertices.len(), c.edges.len(), c.rays.len(), c.genus),
            (2, 1, 4, 0)
        );
        assert_eq!(smooth_space_curve_counts(1, 1), (2, 1, 4, 0));
        assert!(c
            .vertices
            .iter()
            .any(|v| v.coords == vec![q(2), q(1), q(1)]));
        for v in &c.vertices {
            assert!(p.vanishes_at(&v.coords).unwrap() && g.vanishes_at(&v.coords).unwrap());
        }
    }

    #[test]
    fn count_formulas() {
        assert_eq!(smooth_space_curve_counts(2, 3), (30, 33, 24, 4));
        assert_eq!(smooth_space_curve_counts(2, 2), (16, 16, 16, 1));
    }
}
