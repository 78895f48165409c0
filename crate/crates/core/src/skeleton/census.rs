//! Troplanar graphs of a given genus: skeletons of smooth curves dual to
//! regular unimodular triangulations of maximal polygons.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canon::canonical_certificate;
use super::graph::{skeletonize, MetricGraph};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::geometry::maximal::enumerate_maximal_polygons;
use crate::geometry::polygon::LatticePolygon;
use crate::geometry::subdivision::regularity_unchecked;
use crate::geometry::triangulation::{Triangle, Triangulation, TriangulationSpace};
use crate::hypersurface::curve_from_subdivision;
use crate::polynomial::TropicalPolynomial;
use crate::rational::Q;
use crate::semiring::TropicalNumber;

/// Genus above which a census must be requested explicitly.
pub const DEFAULT_CENSUS_MAX_GENUS: u32 = 4;

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub budget: Budget,
    pub max_genus: u32,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self {
            budget: Budget::unlimited(),
            max_genus: DEFAULT_CENSUS_MAX_GENUS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonRecord {
    pub polygon: LatticePolygon,
    pub hyperelliptic: bool,
    /// Unimodular triangulations up to lattice symmetry.
    pub triangulations: usize,
    pub regular: usize,
    /// Indices into the census classes realized by this polygon.
    pub classes: Vec<usize>,
    pub completed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub certificate: String,
    pub skeleton: MetricGraph,
    pub sprawling: bool,
    /// First polygon and triangulation (lexicographically least) realizing the class.
    pub polygon: usize,
    pub triangulation: Vec<Triangle>,
    pub points: Vec<[i64; 2]>,
    /// Number of regular triangulations (up to symmetry) with this skeleton.
    pub occurrences: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub genus: u32,
    pub polygons: Vec<PolygonRecord>,
    pub classes: Vec<ClassRecord>,
    pub complete: bool,
}

/// A curve dual to the triangulation, with exponents shifted to be nonnegative.
pub fn curve_polynomial(points: &[[i64; 2]], heights: &[Option<Q>]) -> Result<TropicalPolynomial> {
    let min = |k: usize| points.iter().map(|p| p[k]).min().unwrap_or(0);
    let (mx, my) = (min(0), min(1));
    TropicalPolynomial::from_terms(
        2,
        points.iter().zip(heights).filter_map(|(p, h)| {
            h.as_ref().map(|h| {
                (
                    vec![(p[0] - mx) as u32, (p[1] - my) as u32],
                    TropicalNumber::Finite(h.clone()),
                )
            })
        }),
    )
}

/// Skeleton of the curve drawn from a regularity witness, or `None` when
/// the triangulation is not regular.
pub fn triangulation_skeleton(
    space: &TriangulationSpace,
    t: &Triangulation,
) -> Result<Option<MetricGraph>> {
    let reg = regularity_unchecked(&space.to_subdivision(t))?;
    if !reg.regular {
        return Ok(None);
    }
    let poly = curve_polynomial(&space.points, &reg.heights)?;
    let sub = space.to_subdivision(t).with_inducing_heights(reg.heights)?;
    let curve = curve_from_subdivision(&poly, sub)?;
    Ok(Some(skeletonize(&curve)))
}

type Found = (usize, Option<(String, MetricGraph)>);

fn survey(
    space: &TriangulationSpace,
    ts: &[Triangulation],
    budget: &Budget,
    g: u32,
) -> Result<Vec<Found>> {
    ts.par_iter()
        .enumerate()
        .map(|(i, t)| {
            budget.check("census")?;
            let Some(sk) = triangulation_skeleton(space, t)? else {
                return Ok((i, None));
            };
            if sk.genus()? != g as i64 {
                return Err(Error::InvalidSubdivision(format!(
                    "skeleton of genus {} in a genus {g} census",
                    sk.genus()?
                )));
            }
            Ok((i, Some((canonical_certificate(&sk, false)?, sk))))
        })
        .collect()
}

/// Runs the census; when the budget runs out the record is returned with
/// `complete = false` and unfinished polygons marked.
pub fn troplanar_census(g: u32, config: &CensusConfig) -> Result<CensusRecord> {
    if g < 2 {
        return Err(Error::domain("the census needs genus at least 2"));
    }
    let polys = enumerate_maximal_polygons(g, config.max_genus)?;
    let mut record = CensusRecord {
        genus: g,
        polygons: Vec::new(),
        classes: Vec::new(),
        complete: true,
    };
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    for (pi, mp) in polys.iter().enumerate() {
        let mut pr = PolygonRecord {
            polygon: mp.polygon.clone(),
            hyperelliptic: mp.hyperelliptic,
            triangulations: 0,
            regular: 0,
            classes: Vec::new(),
            completed: false,
        };
        let space = TriangulationSpace::new(&mp.polygon, true);
        let found = space
            .enumerate(&config.budget, |_| {})
            .and_then(|ts| Ok((survey(&space, &ts, &config.budget, g)?, ts)));
        let (found, ts) = match found {
            Ok(x) => x,
            Err(Error::BudgetExceeded(_)) => {
                record.complete = false;
                record.polygons.push(pr);
                break;
            }
            Err(e) => return Err(e),
        };
        pr.triangulations = ts.len();
        for (i, hit) in found {
            let Some((cert, sk)) = hit else { continue };
            pr.regular += 1;
            let ci = *index.entry(cert.clone()).or_insert_with(|| {
                record.classes.push(ClassRecord {
                    certificate: cert,
                    sprawling: sk.is_sprawling(),
                    skeleton: sk,
                    polygon: pi,
                    triangulation: ts[i].0.clone(),
                    points: space.points.clone(),
                    occurrences: 0,
                });
                record.classes.len() - 1
            });
            record.classes[ci].occurrences += 1;
            if !pr.classes.contains(&ci) {
                pr.classes.push(ci);
            }
        }
        pr.classes.sort_unstable();
        pr.completed = true;
        record.polygons.push(pr);
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::super::graph::named;
    use super::*;
    use crate::geometry::polygon::LatticePolygon;
    use crate::hypersurface::build_curve;
    use crate::rational::q;

    /// Heights `-(i² + ij + j²)` induce a unimodular triangulation of `T_d`.
    fn honeycomb(d: u32) -> TropicalPolynomial {
        let mut terms = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                let (a, b) = (i as i64, j as i64);
                terms.push((
                    vec![i, j],
                    TropicalNumber::Finite(q(-(a * a + a * b + b * b))),
                ));
            }
        }
        TropicalPolynomial::from_terms(2, terms).unwrap()
    }

    #[test]
    fn smooth_curve_genus_counts_interior_points() {
        for d in 1..=4u32 {
            let c = build_curve(&honeycomb(d)).unwrap();
            assert!(crate::hypersurface::is_smooth(&c).unwrap());
            let g = skeletonize(&c);
            let interior = LatticePolygon::standard_triangle(d as i64)
                .interior_points()
                .len() as i64;
            assert_eq!(g.genus().unwrap(), interior);
            assert_eq!(interior, ((d as i64 - 1) * (d as i64 - 2)) / 2);
            if d >= 3 {
                assert!(g.degrees().iter().all(|&k| k == 3) || g.n_vertices == 1);
            }
        }
    }

    #[test]
    fn witness_choice_does_not_change_skeleton() {
        let space = TriangulationSpace::new(&LatticePolygon::standard_triangle(3), true);
        for t in space.enumerate(&Budget::unlimited(), |_| {}).unwrap() {
            let reg = regularity_unchecked(&space.to_subdivision(&t)).unwrap();
            if !reg.regular {
                continue;
            }
            // Scale and add an affine function: same subdivision, different curve.
            let other: Vec<Option<Q>> = reg
                .heights
                .iter()
                .zip(&space.points)
                .map(|(h, p)| h.as_ref().map(|h| h * q(3) + q(2 * p[0] - 5 * p[1] + 7)))
                .collect();
            let a = skeletonize(
                &build_curve(&curve_polynomial(&space.points, &reg.heights).unwrap()).unwrap(),
            );
            let b = skeletonize(
                &build_curve(&curve_polynomial(&space.points, &other).unwrap()).unwrap(),
            );
            assert_eq!(
                canonical_certificate(&a, false).unwrap(),
                canonical_certificate(&b, false).unwrap()
            );
            assert_eq!(a.genus().unwrap(), 1);
        }
    }

    #[test]
    fn genus_two_census() {
        let r = troplanar_census(2, &CensusConfig::default()).unwrap();
        assert!(r.complete);
        assert_eq!(r.classes.len(), 2);
        let mut got: Vec<&str> = r.classes.iter().map(|c| c.certificate.as_str()).collect();
        got.sort();
        let mut want = vec![
            canonical_certificate(&named::theta(), false).unwrap(),
            canonical_certificate(&named::dumbbell(), false).unwrap(),
        ];
        want.sort();
        assert_eq!(got, want);
        assert!(r
            .classes
            .iter()
            .all(|c| !c.sprawling && c.skeleton.is_trivalent()));
    }

    #[test]
    fn budget_yields_partial_record() {
        let cfg = CensusConfig {
            budget: Budget::seconds(0.0),
            ..CensusConfig::default()
        };
        let r = troplanar_census(3, &cfg).unwrap();
        assert!(!r.complete);
        assert!(r.polygons.iter().any(|p| !p.completed));
        assert!(troplanar_census(1, &CensusConfig::default()).is_err());
        assert!(matches!(
            troplanar_census(5, &CensusConfig::default()),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
