//! Stable intersection of two tropical plane curves.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::piece::Piece;
use crate::error::{Error, Result};
use crate::geometry::hull::{double_area, hull_2d};
use crate::geometry::{newton_polytope, regular_subdivision};
use crate::hypersurface::{build_curve, TropicalComplex};
use crate::polynomial::{trop_poly_mul, TropicalPolynomial};
use crate::rational::{gcd_i64, serde_q, Q};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntersectionPoint {
    #[serde(with = "serde_q::vec")]
    pub location: Vec<Q>,
    pub multiplicity: u64,
    /// Isolated in the set-theoretic intersection and not a vertex of either curve.
    pub transversal: bool,
}

/// `w1 · w2 · |det(dir1, dir2)|` for primitive, non-parallel directions.
pub fn transversal_multiplicity(dir1: [i64; 2], w1: u32, dir2: [i64; 2], w2: u32) -> Result<u64> {
    for d in [dir1, dir2] {
        if gcd_i64(d[0], d[1]) != 1 {
            return Err(Error::domain(format!("direction {d:?} is not primitive")));
        }
    }
    let det =
        (dir1[0] as i128 * dir2[1] as i128 - dir1[1] as i128 * dir2[0] as i128).unsigned_abs();
    if det == 0 {
        return Err(Error::domain(
            "parallel directions do not meet transversally",
        ));
    }
    Ok(w1 as u64 * w2 as u64 * det as u64)
}

/// A real number plus an infinitesimal multiple of ε, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Eps {
    re: Q,
    eps: Q,
}

impl Eps {
    fn is_nonneg(&self) -> bool {
        *self
            >= Eps {
                re: Q::zero(),
                eps: Q::zero(),
            }
    }
    fn le(&self, b: &Q) -> bool {
        *self
            <= Eps {
                re: b.clone(),
                eps: Q::zero(),
            }
    }
}

/// A closed 1-cell of a curve with its primitive direction and weight.
struct Cell {
    piece: Piece,
    prim: [i64; 2],
    weight: u32,
}

fn qv(v: &[Q]) -> [Q; 2] {
    [v[0].clone(), v[1].clone()]
}

fn cells(c: &TropicalComplex) -> Vec<Cell> {
    let mut out = Vec::new();
    for e in &c.edges {
        let piece = Piece::segment(qv(&c.vertices[e.a].coords), qv(&c.vertices[e.b].coords));
        out.push(Cell {
            piece,
            prim: [e.direction[0], e.direction[1]],
            weight: e.weight.unwrap_or(1),
        });
    }
    for r in &c.rays {
        let dir = [
            Q::from_integer(r.direction[0].into()),
            Q::from_integer(r.direction[1].into()),
        ];
        let piece = Piece::ray(qv(&c.vertices[r.base].coords), dir);
        out.push(Cell {
            piece,
            prim: [r.direction[0], r.direction[1]],
            weight: r.weight.unwrap_or(1),
        });
    }
    out
}

fn curve_of(p: &TropicalPolynomial) -> Result<TropicalComplex> {
    build_curve(p).map_err(|e| match e {
        Error::Degenerate(m) => Error::Degenerate(format!(
            "stable intersection needs a 2-dimensional Newton polygon: {m}"
        )),
        other => other,
    })
}

/// The default translation direction `(1, K)` for the smallest `K >= 1`
/// making it non-parallel to every edge and ray of both curves.
pub fn perturbation_direction(c: &TropicalComplex, d: &TropicalComplex) -> [i64; 2] {
    let dirs: Vec<[i64; 2]> = cells(c)
        .iter()
        .chain(cells(d).iter())
        .map(|x| x.prim)
        .collect();
    let mut k = 1;
    while dirs.iter().any(|u| u[0] * k - u[1] == 0) {
        k += 1;
    }
    [1, k]
}

/// Points of `C ∩ D_ε` as ε → 0, for `D` translated by `ε·v`, before merging.
fn perturbed_points(
    c: &TropicalComplex,
    d: &TropicalComplex,
    v: [i64; 2],
) -> Result<Vec<([Q; 2], u64)>> {
    let vq = [Q::from_integer(v[0].into()), Q::from_integer(v[1].into())];
    let det = |a: &[Q; 2], b: &[Q; 2]| &a[0] * &b[1] - &a[1] * &b[0];
    let dc = cells(d);
    let mut out = Vec::new();
    for a in cells(c) {
        for b in &dc {
            if b.prim[0] * v[1] == b.prim[1] * v[0] || a.prim[0] * v[1] == a.prim[1] * v[0] {
                return Err(Error::domain(format!(
                    "translation {v:?} is parallel to a cell of a curve"
                )));
            }
            let den = det(&a.piece.dir, &b.piece.dir);
            if den.is_zero() {
                continue;
            }
            let diff = [
                &b.piece.base[0] - &a.piece.base[0],
                &b.piece.base[1] - &a.piece.base[1],
            ];
            let s = Eps {
                re: det(&diff, &b.piece.dir) / &den,
                eps: det(&vq, &b.piece.dir) / &den,
            };
            let t = Eps {
                re: det(&diff, &a.piece.dir) / &den,
                eps: det(&vq, &a.piece.dir) / &den,
            };
            let inside =
                |x: &Eps, hi: &Option<Q>| x.is_nonneg() && hi.as_ref().is_none_or(|h| x.le(h));
            if inside(&s, &a.piece.hi) && inside(&t, &b.piece.hi) {
                let loc = [
                    &a.piece.base[0] + &s.re * &a.piece.dir[0],
                    &a.piece.base[1] + &s.re * &a.piece.dir[1],
                ];
                out.push((
                    loc,
                    transversal_multiplicity(a.prim, a.weight, b.prim, b.weight)?,
                ));
            }
        }
    }
    Ok(out)
}

fn merge(points: impl IntoIterator<Item = ([Q; 2], u64)>) -> BTreeMap<[Q; 2], u64> {
    let mut m = BTreeMap::new();
    for (p, k) in points {
        *m.entry(p).or_insert(0) += k;
    }
    m
}

/// Stable intersection with an explicit translation direction.
pub fn stable_intersection_along(
    f: &TropicalPolynomial,
    g: &TropicalPolynomial,
    v: [i64; 2],
) -> Result<Vec<IntersectionPoint>> {
    let (c, d) = (curve_of(f)?, curve_of(g)?);
    let merged = merge(perturbed_points(&c, &d, v)?);
    let comps = components(&c, &d);
    let vertices: Vec<[Q; 2]> = c
        .vertices
        .iter()
        .chain(&d.vertices)
        .map(|x| qv(&x.coords))
        .collect();
    Ok(merged
        .into_iter()
        .map(|(p, multiplicity)| {
            let isolated = comps
                .iter()
                .any(|comp| comp.len() == 1 && comp[0].is_point() && comp[0].base == p);
            let transversal = isolated && !vertices.contains(&p);
            IntersectionPoint {
                location: p.to_vec(),
                multiplicity,
                transversal,
            }
        })
        .collect())
}

/// Limit of `T(f) ∩ (T(g) + ε·v)` as ε → 0, sorted by location.
pub fn stable_intersection(
    f: &TropicalPolynomial,
    g: &TropicalPolynomial,
) -> Result<Vec<IntersectionPoint>> {
    let (c, d) = (curve_of(f)?, curve_of(g)?);
    stable_intersection_along(f, g, perturbation_direction(&c, &d))
}

/// The same multiset read off the subdivision of `Newt(f ⊙ g)`: each cell
/// is `F + G` for faces dual to the point, and contributes the mixed area
/// `area(F + G) - area(F) - area(G)`.
pub fn mixed_cell_intersection(
    f: &TropicalPolynomial,
    g: &TropicalPolynomial,
) -> Result<Vec<([Q; 2], u64)>> {
    curve_of(f)?;
    curve_of(g)?;
    let fg = trop_poly_mul(f, g)?;
    let sub = regular_subdivision(&newton_polytope(&fg)?)?;
    let mut out = Vec::new();
    for i in 0..sub.cells.len() {
        let w = sub.dual_vertex(i).expect("induced subdivision");
        let face = |p: &TropicalPolynomial| -> Result<Vec<Vec<i64>>> {
            let (_, arg) = p.evaluate(&w)?;
            Ok(arg
                .iter()
                .map(|e| e.iter().map(|&k| k as i64).collect())
                .collect())
        };
        let (a, b) = (face(f)?, face(g)?);
        let sum: Vec<Vec<i64>> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| vec![x[0] + y[0], x[1] + y[1]]))
            .collect();
        let area = |pts: &[Vec<i64>]| double_area(&hull_2d(pts));
        let cell = area(&sub.cell_points(i));
        if area(&sum) != cell {
            return Err(Error::InvalidSubdivision(format!(
                "cell {i} is not the sum of the dual faces"
            )));
        }
        let mixed = area(&sum) - area(&a) - area(&b);
        if mixed % 2 != 0 {
            return Err(Error::InvalidSubdivision("odd mixed area".into()));
        }
        if mixed > 0 {
            out.push((qv(&w), (mixed / 2) as u64));
        }
    }
    Ok(merge(out).into_iter().collect())
}

/// Sum of stable intersection multiplicities; requires both inputs to have a degree.
pub fn bezout_sum(f: &TropicalPolynomial, g: &TropicalPolynomial) -> Result<u64> {
    for p in [f, g] {
        if p.degree().is_none() {
            return Err(Error::domain(format!(
                "{p} has no degree: its Newton polygon is not a standard triangle"
            )));
        }
    }
    Ok(stable_intersection(f, g)?
        .iter()
        .map(|p| p.multiplicity)
        .sum())
}

/// Connected components of `T(f) ∩ T(g)` as lists of pieces.
fn components(c: &TropicalComplex, d: &TropicalComplex) -> Vec<Vec<Piece>> {
    let dc = cells(d);
    let mut pieces: Vec<Piece> = Vec::new();
    for a in cells(c) {
        for b in &dc {
            if let Some(p) = a.piece.intersect(&b.piece) {
                if !pieces.contains(&p) {
                    pieces.push(p);
                }
            }
        }
    }
    let mut parent: Vec<usize> = (0..pieces.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            if pieces[i].intersect(&pieces[j]).is_some() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Piece>> = BTreeMap::new();
    for (i, p) in pieces.into_iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(p);
    }
    // Drop points covered by a larger piece of the same component.
    groups
        .into_values()
        .map(|g| {
            let keep: Vec<Piece> = g
                .iter()
                .filter(|p| {
                    !(p.is_point() && g.iter().any(|o| !o.is_point() && o.contains(&p.base)))
                })
                .cloned()
                .collect();
            keep
        })
        .collect()
}

/// A piece of an intersection component, for output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Shape {
    Point {
        #[serde(with = "serde_q::vec")]
        at: Vec<Q>,
    },
    Segment {
        #[serde(with = "serde_q::vec")]
        from: Vec<Q>,
        #[serde(with = "serde_q::vec")]
        to: Vec<Q>,
    },
    Ray {
        #[serde(with = "serde_q::vec")]
        from: Vec<Q>,
        #[serde(with = "serde_q::vec")]
        direction: Vec<Q>,
    },
}

impl From<&Piece> for Shape {
    fn from(p: &Piece) -> Self {
        let ends = p.ends();
        if p.is_point() {
            Shape::Point {
                at: p.base.to_vec(),
            }
        } else if p.hi.is_none() {
            Shape::Ray {
                from: p.base.to_vec(),
                direction: p.dir.to_vec(),
            }
        } else {
            Shape::Segment {
                from: ends[0].to_vec(),
                to: ends[1].to_vec(),
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub pieces: Vec<Shape>,
    pub points: Vec<IntersectionPoint>,
    pub multiplicity: u64,
    pub tangent: bool,
}

/// Components of the set-theoretic intersection with their stable multiplicity;
/// a component carrying multiplicity at least two is a tangency.
pub fn detect_tangencies(f: &TropicalPolynomial, g: &TropicalPolynomial) -> Result<Vec<Component>> {
    let (c, d) = (curve_of(f)?, curve_of(g)?);
    let stable = stable_intersection(f, g)?;
    let mut out = Vec::new();
    for comp in components(&c, &d) {
        let points: Vec<IntersectionPoint> = stable
            .iter()
            .filter(|p| comp.iter().any(|piece| piece.contains(&qv(&p.location))))
            .cloned()
            .collect();
        let multiplicity = points.iter().map(|p| p.multiplicity).sum();
        out.push(Component {
            pieces: comp.iter().map(Shape::from).collect(),
            points,
            multiplicity,
            tangent: multiplicity >= 2,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn poly(s: &str) -> TropicalPolynomial {
        TropicalPolynomial::parse(s).unwrap()
    }

    fn quadric_pair() -> (TropicalPolynomial, TropicalPolynomial) {
        (
            poly("-1(*)x^2 (+) xy (+) -1(*)y^2 (+) x (+) y (+) -1"),
            poly("-1/2(*)x^2 (+) 1(*)xy (+) -2(*)y^2 (+) x (+) y (+) 0"),
        )
    }

    fn multiset(v: &[IntersectionPoint]) -> Vec<([Q; 2], u64)> {
        v.iter()
            .map(|p| (qv(&p.location), p.multiplicity))
            .collect()
    }

    #[test]
    fn multiplicity_formula() {
        assert_eq!(transversal_multiplicity([1, 0], 1, [0, 1], 1).unwrap(), 1);
        assert_eq!(transversal_multiplicity([1, 1], 1, [1, -1], 1).unwrap(), 2);
        assert_eq!(transversal_multiplicity([1, 2], 2, [1, 0], 3).unwrap(), 12);
        assert!(transversal_multiplicity([1, 1], 1, [-1, -1], 1).is_err());
        assert!(transversal_multiplicity([2, 2], 1, [1, 0], 1).is_err());
    }

    #[test]
    fn lines_meeting_along_a_ray() {
        let (f, g) = (poly("x (+) y (+) 0"), poly("1(*)x (+) y (+) 0"));
        let pts = stable_intersection(&f, &g).unwrap();
        assert_eq!(
            pts,
            vec![IntersectionPoint {
                location: vec![q(-1), q(0)],
                multiplicity: 1,
                transversal: false
            }]
        );
        assert_eq!(mixed_cell_intersection(&f, &g).unwrap(), multiset(&pts));
        let comps = detect_tangencies(&f, &g).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(
            comps[0].pieces,
            vec![Shape::Ray {
                from: vec![q(-1), q(0)],
                direction: vec![q(-1), q(0)]
            }]
        );
        assert!(!comps[0].tangent);
    }

    #[test]
    fn quadric_pair_multiplicities() {
        let (f, g) = quadric_pair();
        let pts = stable_intersection(&f, &g).unwrap();
        let mut mult: Vec<u64> = pts.iter().map(|p| p.multiplicity).collect();
        mult.sort();
        assert_eq!(mult, vec![1, 1, 2]);
        assert_eq!(bezout_sum(&f, &g).unwrap(), 4);
        assert_eq!(mixed_cell_intersection(&f, &g).unwrap(), multiset(&pts));
        for p in &pts {
            assert!(f.vanishes_at(&p.location).unwrap() && g.vanishes_at(&p.location).unwrap());
        }
        let comps = detect_tangencies(&f, &g).unwrap();
        let tangent: Vec<u64> = comps
            .iter()
            .filter(|c| c.tangent)
            .map(|c| c.multiplicity)
            .collect();
        assert_eq!(tangent, vec![2]);
        assert_eq!(comps.iter().filter(|c| !c.tangent).count(), 2);
    }

    #[test]
    fn line_with_itself() {
        let f = poly("x (+) y (+) 0");
        let pts = stable_intersection(&f, &f).unwrap();
        assert_eq!(multiset(&pts), vec![([q(0), q(0)], 1)]);
        assert_eq!(mixed_cell_intersection(&f, &f).unwrap(), multiset(&pts));
        let comps = detect_tangencies(&f, &f).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].pieces.len(), 3);
        assert_eq!(comps[0].multiplicity, 1);
        assert!(!comps[0].tangent);
    }

    #[test]
    fn direction_independence() {
        let (f, g) = quadric_pair();
        let a = stable_intersection_along(&f, &g, [1, 5]).unwrap();
        let b = stable_intersection_along(&f, &g, [-2, 7]).unwrap();
        assert_eq!(multiset(&a), multiset(&b));
        let c = poly("0(*)x^2 (+) 0(*)y^2 (+) 0");
        let t = stable_intersection(&c, &poly("x (+) y (+) 0")).unwrap();
        assert_eq!(multiset(&t), vec![([q(0), q(0)], 2)]);
        let s = stable_intersection(&poly("x (+) y (+) 1/2"), &poly("x (+) y (+) 0")).unwrap();
        assert_eq!(multiset(&s), vec![([qf(1, 2), qf(1, 2)], 1)]);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            stable_intersection(
                &TropicalPolynomial::parse_in("x (+) 0", 2).unwrap(),
                &poly("x (+) y (+) 0")
            ),
            Err(Error::Degenerate(_))
        ));
        assert!(bezout_sum(&poly("xy (+) x (+) y (+) 0"), &poly("x (+) y (+) 0")).is_err());
    }
}
