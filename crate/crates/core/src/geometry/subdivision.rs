//! Point configurations with heights and the regular subdivisions they induce.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::hull::{self, Hyperplane};
use super::linalg::{self, Int};
use crate::error::{Error, Result};
use crate::lp::{maximize, Constraint, LpOutcome, Relation};
use crate::polynomial::TropicalPolynomial;
use crate::rational::{serde_q, Q};

/// Integer points in `R^dim`, optionally lifted by rational heights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfiguration {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
    /// One entry per point; `None` means the height is absent (`-inf`).
    #[serde(with = "serde_q::opt_vec")]
    pub heights: Vec<Option<Q>>,
}

impl PointConfiguration {
    pub fn new(points: Vec<Vec<i64>>) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::Degenerate("empty configuration".into()))?;
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.len(),
                });
            }
        }
        let mut sorted = points.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Degenerate("repeated point".into()));
        }
        let n = points.len();
        Ok(Self {
            dim,
            points,
            heights: vec![None; n],
        })
    }

    pub fn with_heights(points: Vec<Vec<i64>>, heights: Vec<Option<Q>>) -> Result<Self> {
        let mut c = Self::new(points)?;
        if heights.len() != c.points.len() {
            return Err(Error::DimensionMismatch {
                expected: c.points.len(),
                got: heights.len(),
            });
        }
        c.heights = heights;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: &[i64]) -> Option<usize> {
        self.points.iter().position(|x| x == p)
    }

    /// Indices of the vertices of the convex hull.
    pub fn hull_vertices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let others: Vec<Vec<i64>> = self
                    .points
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p.clone())
                    .collect();
                others.is_empty() || !hull::in_hull(&others, &self.points[i])
            })
            .collect()
    }

    pub fn affine_dim(&self) -> usize {
        let refs: Vec<&[i64]> = self.points.iter().map(Vec::as_slice).collect();
        linalg::affine_rank(&refs)
    }

    /// Normalized volume of the convex hull.
    pub fn normalized_volume(&self) -> Result<BigInt> {
        volume_of(&self.points)
    }
}

fn volume_of(points: &[Vec<i64>]) -> Result<BigInt> {
    match hull::normalized_volume(&hull::widen(points)) {
        Ok(v) => Ok(BigInt::from(v)),
        Err(Error::Overflow) => {
            let big: Vec<Vec<BigInt>> = points
                .iter()
                .map(|p| p.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            hull::normalized_volume(&big)
        }
        Err(e) => Err(e),
    }
}

/// Affine function `slope · x + offset` agreeing with the heights on a cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineFunctional {
    #[serde(with = "serde_q::vec")]
    pub slope: Vec<Q>,
    #[serde(with = "serde_q")]
    pub offset: Q,
}

impl AffineFunctional {
    pub fn eval(&self, p: &[i64]) -> Q {
        self.slope
            .iter()
            .zip(p)
            .fold(self.offset.clone(), |acc, (a, &x)| {
                acc + a * Q::from_integer(x.into())
            })
    }
}

/// Cells (sorted index lists) covering the hull of a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision {
    pub config: PointConfiguration,
    pub cells: Vec<Vec<usize>>,
    /// One per cell when the subdivision was induced by heights; else empty.
    #[serde(default)]
    pub functionals: Vec<AffineFunctional>,
}

impl Subdivision {
    /// A subdivision given only combinatorially.
    pub fn from_cells(config: PointConfiguration, cells: Vec<Vec<usize>>) -> Self {
        let mut cells: Vec<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cells.sort();
        Self {
            config,
            cells,
            functionals: Vec::new(),
        }
    }

    /// Attaches heights known to induce these cells, with the affine
    /// functional of each cell interpolated from an affine basis.
    pub fn with_inducing_heights(mut self, heights: Vec<Option<Q>>) -> Result<Self> {
        let pts = &self.config.points;
        let mut functionals = Vec::with_capacity(self.cells.len());
        for cell in &self.cells {
            let refs: Vec<&[i64]> = cell.iter().map(|&k| pts[k].as_slice()).collect();
            let basis: Vec<usize> = linalg::affine_basis(&refs)
                .into_iter()
                .map(|j| cell[j])
                .collect();
            let mut rows = Vec::with_capacity(basis.len());
            let mut rhs = Vec::with_capacity(basis.len());
            for &k in &basis {
                let mut row = linalg::to_q(&pts[k]);
                row.push(Q::one());
                rows.push(row);
                rhs.push(
                    heights[k]
                        .clone()
                        .ok_or_else(|| Error::domain("a cell point has no height"))?,
                );
            }
            let mut x = linalg::solve_q(&rows, &rhs)
                .ok_or_else(|| Error::Degenerate("cell is not full-dimensional".into()))?;
            let offset = x.pop().expect("offset");
            let f = AffineFunctional { slope: x, offset };
            if cell
                .iter()
                .any(|&k| heights[k].as_ref() != Some(&f.eval(&pts[k])))
            {
                return Err(Error::InvalidSubdivision(
                    "heights are not affine on a cell".into(),
                ));
            }
            functionals.push(f);
        }
        self.config.heights = heights;
        self.functionals = functionals;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.config.dim
    }

    pub fn cell_points(&self, i: usize) -> Vec<Vec<i64>> {
        self.cells[i]
            .iter()
            .map(|&k| self.config.points[k].clone())
            .collect()
    }

    /// The point of the tropical hypersurface dual to cell `i`.
    pub fn dual_vertex(&self, i: usize) -> Option<Vec<Q>> {
        self.functionals
            .get(i)
            .map(|f| f.slope.iter().map(|a| -a.clone()).collect())
    }

    pub fn cell_volume(&self, i: usize) -> Result<BigInt> {
        volume_of(&self.cell_points(i))
    }

    /// Points used by at least one cell.
    pub fn used_points(&self) -> Vec<usize> {
        let mut u: Vec<usize> = self.cells.iter().flatten().copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    }

    /// Pairs of cells meeting in a common codimension-one face, with the
    /// shared point indices.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize, Vec<usize>)> {
        let n = self.dim();
        let mut out = Vec::new();
        for a in 0..self.cells.len() {
            for b in a + 1..self.cells.len() {
                let common: Vec<usize> = self.cells[a]
                    .iter()
                    .filter(|k| self.cells[b].contains(k))
                    .copied()
                    .collect();
                if common.len() < n {
                    continue;
                }
                let refs: Vec<&[i64]> = common
                    .iter()
                    .map(|&k| self.config.points[k].as_slice())
                    .collect();
                if linalg::affine_rank(&refs) + 1 == n {
                    out.push((a, b, common));
                }
            }
        }
        out
    }

    /// Checks that the cells form a polyhedral subdivision of the hull:
    /// full-dimensional cells, volumes adding up, and every interior facet
    /// shared by exactly two cells lying on opposite sides.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        let bad = |m: String| Err(Error::InvalidSubdivision(m));
        if self.cells.is_empty() {
            return bad("no cells".into());
        }
        let mut total = BigInt::zero();
        for (i, c) in self.cells.iter().enumerate() {
            if c.iter().any(|&k| k >= self.config.len()) {
                return bad(format!("cell {i} references a missing point"));
            }
            let pts = self.cell_points(i);
            let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
            if linalg::affine_rank(&refs) != n {
                return bad(format!("cell {i} is not full-dimensional"));
            }
            total += self.cell_volume(i)?;
        }
        let hull_vol = self.config.normalized_volume()?;
        if total != hull_vol {
            return bad(format!(
                "cell volumes sum to {total}, hull volume is {hull_vol}"
            ));
        }
        let global = hull::facets(&hull::widen(&self.config.points))?;
        let mut faces: HashMap<Vec<usize>, Vec<Vec<i128>>> = HashMap::new();
        for (i, c) in self.cells.iter().enumerate() {
            for f in hull::facets(&hull::widen(&self.cell_points(i)))? {
                let key: Vec<usize> = f.on.iter().map(|&j| c[j]).collect();
                faces.entry(key).or_default().push(f.normal);
            }
        }
        for (key, normals) in &faces {
            let p0: Vec<i128> = self.config.points[key[0]]
                .iter()
                .map(|&x| x as i128)
                .collect();
            let on_boundary = global.iter().any(|g| {
                g.normal == normals[0] && linalg::dot(&g.normal, &p0).ok() == Some(g.offset)
            });
            let ok = if on_boundary {
                normals.len() == 1
            } else {
                normals.len() == 2 && normals[0].iter().zip(&normals[1]).all(|(a, b)| *a == -*b)
            };
            if !ok {
                return bad(format!("face {key:?} is not shared correctly"));
            }
        }
        Ok(())
    }
}

/// Newton polytope lattice points, with heights from the coefficients.
pub fn newton_polytope(p: &TropicalPolynomial) -> Result<PointConfiguration> {
    if p.is_empty() {
        return Err(Error::Degenerate("polynomial has no terms".into()));
    }
    let support: Vec<Vec<i64>> = p
        .terms()
        .map(|(e, _)| e.iter().map(|&k| k as i64).collect())
        .collect();
    let points = hull::lattice_points(&support)?;
    let heights = points
        .iter()
        .map(|pt| {
            let e: Vec<u32> = pt.iter().map(|&k| k as u32).collect();
            p.coefficient(&e).finite().cloned()
        })
        .collect();
    PointConfiguration::with_heights(points, heights)
}

fn upper_facets<T: Int>(lifted: &[Vec<T>]) -> Result<Vec<Hyperplane<BigInt>>> {
    let hs = hull::supporting_hyperplanes(lifted, |n| n.last().is_some_and(|x| x.is_positive()))?;
    Ok(hs
        .into_iter()
        .map(|h| Hyperplane {
            normal: h.normal.iter().map(Int::to_bigint).collect(),
            offset: h.offset.to_bigint(),
            on: h.on,
        })
        .collect())
}

/// Subdivision induced by the upper hull of the lifted points.
pub fn regular_subdivision(config: &PointConfiguration) -> Result<Subdivision> {
    let present: Vec<usize> = (0..config.len())
        .filter(|&i| config.heights[i].is_some())
        .collect();
    if present.is_empty() {
        return Err(Error::Degenerate("no heights".into()));
    }
    let base: Vec<Vec<i64>> = present.iter().map(|&i| config.points[i].clone()).collect();
    let refs: Vec<&[i64]> = base.iter().map(Vec::as_slice).collect();
    if linalg::affine_rank(&refs) != config.dim {
        return Err(Error::Degenerate(
            "weighted points do not span the ambient space".into(),
        ));
    }
    let fs = hull::facets(&hull::widen(&base))?;
    for (i, p) in config.points.iter().enumerate() {
        let c: Vec<i128> = p.iter().map(|&x| x as i128).collect();
        if config.heights[i].is_none()
            && fs
                .iter()
                .any(|f| linalg::dot(&f.normal, &c).map_or(true, |v| v > f.offset))
        {
            return Err(Error::Degenerate(format!(
                "point {p:?} lies outside the hull of the weighted points"
            )));
        }
    }
    let heights: Vec<&Q> = present
        .iter()
        .map(|&i| config.heights[i].as_ref().expect("present"))
        .collect();
    let scale = crate::rational::common_denominator(heights.iter().copied());
    let scaled: Vec<BigInt> = heights
        .iter()
        .map(|h| (*h * Q::from_integer(scale.clone())).to_integer())
        .collect();
    let lifted_big: Vec<Vec<BigInt>> = base
        .iter()
        .zip(&scaled)
        .map(|(p, h)| {
            p.iter()
                .map(|&x| BigInt::from(x))
                .chain(std::iter::once(h.clone()))
                .collect()
        })
        .collect();
    let small: Option<Vec<Vec<i128>>> = lifted_big
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| x.to_i128().filter(|v| v.abs() < (1i128 << 60)))
                .collect()
        })
        .collect();
    let facets = match small {
        Some(s) => match upper_facets(&s) {
            Err(Error::Overflow) => upper_facets(&lifted_big)?,
            r => r?,
        },
        None => upper_facets(&lifted_big)?,
    };
    let scale_q = Q::from_integer(scale);
    let mut cells: Vec<(Vec<usize>, AffineFunctional)> = facets
        .into_iter()
        .map(|h| {
            let last = Q::from_integer(h.normal[config.dim].clone()) * &scale_q;
            let slope = h.normal[..config.dim]
                .iter()
                .map(|a| -Q::from_integer(a.clone()) / &last)
                .collect();
            let offset = Q::from_integer(h.offset) / &last;
            let mut cell: Vec<usize> = h.on.iter().map(|&j| present[j]).collect();
            cell.sort_unstable();
            (cell, AffineFunctional { slope, offset })
        })
        .collect();
    cells.sort_by(|a, b| a.0.cmp(&b.0));
    let (cells, functionals) = cells.into_iter().unzip();
    Ok(Subdivision {
        config: config.clone(),
        cells,
        functionals,
    })
}

/// Every cell is a lattice simplex of normalized volume one.
pub fn is_unimodular(sub: &Subdivision) -> Result<bool> {
    let n = sub.dim();
    for i in 0..sub.cells.len() {
        if sub.cells[i].len() != n + 1 || !sub.cell_volume(i)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of a regularity test; `heights` is a witness when regular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub regular: bool,
    #[serde(with = "serde_q::opt_vec")]
    pub heights: Vec<Option<Q>>,
}

/// Decides whether a subdivision is induced by some height function.
///
/// Heights are the unknowns. Within each cell they must be affine; across
/// every pair of adjacent cells, the points of one cell off the shared face
/// must lie below the affine extension of the other by at least `delta`.
/// The subdivision is regular iff the maximal `delta` is positive.
pub fn is_regular(sub: &Subdivision) -> Result<Regularity> {
    sub.validate()?;
    regularity_unchecked(sub)
}

/// [`is_regular`] without validating the cell structure first.
pub(crate) fn regularity_unchecked(sub: &Subdivision) -> Result<Regularity> {
    // Adding a constant to all heights changes nothing, so they may be taken
    // nonnegative; every inequality is then homogeneous except `delta <= 1`.
    let used = sub.used_points();
    let var: HashMap<usize, usize> = used.iter().enumerate().map(|(v, &k)| (k, v)).collect();
    let nv = used.len();
    let delta = nv;
    let cols = nv + 1;
    let pts = &sub.config.points;
    let mut cons: Vec<Constraint> = Vec::new();
    let mut add_affine = |terms: &[(usize, Q)], rel: Relation, with_delta: bool| {
        let mut coeffs = vec![Q::zero(); cols];
        for (k, c) in terms {
            coeffs[var[k]] += c;
        }
        if with_delta {
            coeffs[delta] = Q::one();
        }
        cons.push(Constraint {
            coeffs,
            rel,
            rhs: Q::zero(),
        });
    };
    let mut bases: Vec<Vec<usize>> = Vec::with_capacity(sub.cells.len());
    for cell in &sub.cells {
        let refs: Vec<&[i64]> = cell.iter().map(|&k| pts[k].as_slice()).collect();
        let basis: Vec<usize> = linalg::affine_basis(&refs)
            .into_iter()
            .map(|j| cell[j])
            .collect();
        let brefs: Vec<&[i64]> = basis.iter().map(|&k| pts[k].as_slice()).collect();
        for &k in cell.iter().filter(|k| !basis.contains(k)) {
            let lam = linalg::barycentric(&brefs, &pts[k]).expect("point of the cell");
            let mut terms: Vec<(usize, Q)> = basis.iter().copied().zip(lam).collect();
            terms.push((k, -Q::one()));
            add_affine(&terms, Relation::Eq, false);
        }
        bases.push(basis);
    }
    for (a, b, common) in sub.adjacent_pairs() {
        let brefs: Vec<&[i64]> = bases[a].iter().map(|&k| pts[k].as_slice()).collect();
        for &j in sub.cells[b].iter().filter(|k| !common.contains(k)) {
            // h_j + delta <= (affine extension of cell a)(p_j)
            let lam = linalg::barycentric(&brefs, &pts[j]).expect("affine basis spans");
            let mut terms: Vec<(usize, Q)> = bases[a]
                .iter()
                .copied()
                .zip(lam.into_iter().map(|l| -l))
                .collect();
            terms.push((j, Q::one()));
            add_affine(&terms, Relation::Le, true);
        }
    }
    let mut cap = vec![Q::zero(); cols];
    cap[delta] = Q::one();
    cons.push(Constraint {
        coeffs: cap.clone(),
        rel: Relation::Le,
        rhs: Q::one(),
    });

    // A floating-point solve usually proposes a witness that survives exact
    // verification; the exact simplex settles everything else.
    if let Some(heights) = float_witness(sub, &used, &cap, &cons) {
        return Ok(Regularity {
            regular: true,
            heights,
        });
    }
    let (value, x) = match maximize(&cap, &cons) {
        LpOutcome::Optimal { value, x } => (value, x),
        LpOutcome::Infeasible => {
            return Err(Error::InvalidSubdivision(
                "cells are not affine-compatible".into(),
            ))
        }
        LpOutcome::Unbounded => unreachable!("delta is capped"),
    };
    let mut heights = vec![None; sub.config.len()];
    if !value.is_positive() {
        return Ok(Regularity {
            regular: false,
            heights,
        });
    }
    for (v, &k) in used.iter().enumerate() {
        heights[k] = Some(x[v].clone());
    }
    if !reproduces(sub, &heights) {
        return Err(Error::InvalidSubdivision(
            "regularity witness does not reproduce the cells".into(),
        ));
    }
    Ok(Regularity {
        regular: true,
        heights,
    })
}

fn reproduces(sub: &Subdivision, heights: &[Option<Q>]) -> bool {
    let mut cfg = sub.config.clone();
    cfg.heights = heights.to_vec();
    regular_subdivision(&cfg).is_ok_and(|c| c.cells == sub.cells)
}

fn float_witness(
    sub: &Subdivision,
    used: &[usize],
    cap: &[Q],
    cons: &[Constraint],
) -> Option<Vec<Option<Q>>> {
    let f = |x: &Q| x.to_f64().unwrap_or(f64::NAN);
    let fcons: Vec<Constraint<f64>> = cons
        .iter()
        .map(|c| Constraint {
            coeffs: c.coeffs.iter().map(f).collect(),
            rel: c.rel,
            rhs: f(&c.rhs),
        })
        .collect();
    let fcap: Vec<f64> = cap.iter().map(f).collect();
    let LpOutcome::Optimal { value, x } = crate::lp::maximize_in(&fcap, &fcons) else {
        return None;
    };
    if value < 1e-6 {
        return None;
    }
    // The rows are homogeneous in the heights, so any positive multiple of
    // a solution is one; try coarse integer roundings first.
    let delta = used.len();
    for bits in [0, 2, 4, 8, 12, 16, 20, 24] {
        let scale = (1u64 << bits) as f64 / value.min(1.0);
        let h: Vec<Q> = x[..delta]
            .iter()
            .map(|v| Q::from_integer(((v * scale).round() as i64).into()))
            .collect();
        let holds = cons.iter().all(|c| {
            let lhs = c.coeffs[..delta]
                .iter()
                .zip(&h)
                .fold(Q::zero(), |acc, (a, b)| acc + a * b);
            match (c.rel, c.rhs.is_zero()) {
                (Relation::Eq, _) => lhs.is_zero(),
                (Relation::Le, true) => lhs.is_negative(),
                _ => true,
            }
        });
        if holds {
            let mut heights = vec![None; sub.config.len()];
            for (v, &k) in used.iter().enumerate() {
                heights[k] = Some(h[v].clone());
            }
            return Some(heights);
        }
    }
    None
}

/// `P × {0} ∪ Q × {1}`, heights concatenated.
pub fn cayley(p: &PointConfiguration, q: &PointConfiguration) -> Result<PointConfiguration> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            got: q.dim,
        });
    }
    let lift = |c: &PointConfiguration, t: i64| -> Vec<Vec<i64>> {
        c.points
            .iter()
            .map(|x| x.iter().copied().chain(std::iter::once(t)).collect())
            .collect()
    };
    let mut points = lift(p, 0);
    points.extend(lift(q, 1));
    let heights = p.heights.iter().chain(&q.heights).cloned().collect();
    PointConfiguration::with_heights(points, heights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn quadric() -> TropicalPolynomial {
        TropicalPolynomial::parse("1(*)x^2 (+) 1(*)y^2 (+) 2(*)xy (+) 2(*)x (+) 2(*)y (+) 1")
            .unwrap()
    }

    #[test]
    fn newton_polytopes() {
        let c = newton_polytope(&quadric()).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.heights.iter().all(Option::is_some));
        let c = newton_polytope(&TropicalPolynomial::parse("x^2 (+) y^2 (+) 0").unwrap()).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.heights.iter().filter(|h| h.is_some()).count(), 3);
        assert_eq!(c.hull_vertices().len(), 3);
    }

    #[test]
    fn quadric_subdivision() {
        let s = regular_subdivision(&newton_polytope(&quadric()).unwrap()).unwrap();
        assert_eq!(s.cells.len(), 4);
        assert!(is_unimodular(&s).unwrap());
        s.validate().unwrap();
        let c = &s.config;
        let target: Vec<usize> = {
            let mut v = vec![
                c.index_of(&[0, 2]).unwrap(),
                c.index_of(&[0, 1]).unwrap(),
                c.index_of(&[1, 1]).unwrap(),
            ];
            v.sort_unstable();
            v
        };
        let i = s.cells.iter().position(|x| *x == target).unwrap();
        assert_eq!(s.dual_vertex(i).unwrap(), vec![q(0), q(1)]);
    }

    #[test]
    fn flat_heights_give_one_cell() {
        let c = newton_polytope(
            &TropicalPolynomial::parse("x^2 (+) xy (+) y^2 (+) x (+) y (+) 0").unwrap(),
        )
        .unwrap();
        let s = regular_subdivision(&c).unwrap();
        assert_eq!(s.cells, vec![(0..6).collect::<Vec<_>>()]);
        assert!(!is_unimodular(&s).unwrap());
        assert!(is_regular(&s).unwrap().regular);
    }

    #[test]
    fn almost_cube() {
        let f = TropicalPolynomial::parse("xyz (+) -42(*)xy (+) x (+) y (+) z (+) -42").unwrap();
        let s = regular_subdivision(&newton_polytope(&f).unwrap()).unwrap();
        assert_eq!(s.cells.len(), 3);
        let mut sets: Vec<Vec<Vec<i64>>> = (0..3).map(|i| s.cell_points(i)).collect();
        sets.sort();
        assert!(sets.contains(&vec![
            vec![0, 0, 0],
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![1, 0, 0]
        ]));
        assert!(sets.contains(&vec![
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![1, 1, 1]
        ]));
        assert!(sets.contains(&vec![
            vec![0, 1, 0],
            vec![1, 0, 0],
            vec![1, 1, 0],
            vec![1, 1, 1]
        ]));
        assert!(!is_unimodular(&s).unwrap());
        s.validate().unwrap();
    }

    #[test]
    fn regularity_round_trip() {
        let s = regular_subdivision(&newton_polytope(&quadric()).unwrap()).unwrap();
        let comb = Subdivision::from_cells(s.config.clone(), s.cells.clone());
        let r = is_regular(&comb).unwrap();
        assert!(r.regular);
    }

    #[test]
    fn invalid_subdivisions_are_rejected() {
        let c =
            PointConfiguration::new(vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let overlapping = Subdivision::from_cells(c.clone(), vec![vec![0, 1, 2], vec![0, 1, 3]]);
        assert!(matches!(
            is_regular(&overlapping),
            Err(Error::InvalidSubdivision(_))
        ));
        let good = Subdivision::from_cells(c, vec![vec![0, 1, 2], vec![1, 2, 3]]);
        assert!(is_regular(&good).unwrap().regular);
    }

    #[test]
    fn cayley_configurations() {
        let tet = PointConfiguration::new(vec![
            vec![0, 0, 0],
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ])
        .unwrap();
        let c = cayley(&tet, &tet).unwrap();
        assert_eq!(c.dim, 4);
        assert_eq!(c.len(), 8);
        assert_eq!(c.points[7], vec![0, 0, 1, 1]);
        let tri = PointConfiguration::new(vec![vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(cayley(&tri, &tri).unwrap().len(), 6);
    }
}
