//! Seeded random inputs that need more than a proptest strategy.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropical::geometry::is_regular;
use tropical::geometry::polygon::LatticePolygon;
use tropical::geometry::triangulation::{Triangulation, TriangulationSpace};
use tropical::hypersurface::{build_curve, smooth_curve_counts, CurveCounts};
use tropical::intersection::{mixed_cell_intersection, stable_intersection};
use tropical::rational::{q, Q};
use tropical::semiring::TropicalNumber;
use tropical::skeleton::{curve_polynomial, skeletonize};
use tropical::TropicalPolynomial;

/// Triangles, interior edges and boundary edges, read off the triangle list.
pub fn count_triangulation(t: &Triangulation) -> CurveCounts {
    let mut edges: BTreeMap<(u16, u16), usize> = BTreeMap::new();
    for tr in &t.0 {
        for (a, b) in [(tr[0], tr[1]), (tr[0], tr[2]), (tr[1], tr[2])] {
            *edges.entry((a, b)).or_default() += 1;
        }
    }
    CurveCounts {
        vertices: t.0.len(),
        bounded_edges: edges.values().filter(|&&k| k == 2).count(),
        rays: edges.values().filter(|&&k| k == 1).count(),
    }
}

/// For `per_degree` random regular unimodular triangulations of each
/// triangle of size `1..=max_degree`, checks the induced curve against
/// counts taken directly from the triangulation and the closed formulas.
/// Returns the number of curves checked.
pub fn smooth_curves(seed: u64, max_degree: i64, per_degree: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for d in 1..=max_degree {
        let polygon = LatticePolygon::standard_triangle(d);
        let space = TriangulationSpace::new(&polygon, false);
        let mut found = 0;
        let mut attempts = 0;
        while found < per_degree {
            attempts += 1;
            if attempts > 50 * per_degree {
                return Err(format!("degree {d}: too few regular triangulations found"));
            }
            let mut t = space.seed().map_err(|e| e.to_string())?;
            for _ in 0..rng.gen_range(0..60) {
                if let Some(n) = space.flips(&t).choose(&mut rng) {
                    t = n.clone();
                }
            }
            let reg = is_regular(&space.to_subdivision(&t)).map_err(|e| e.to_string())?;
            if !reg.regular {
                continue;
            }
            found += 1;
            let p = curve_polynomial(&space.points, &reg.heights).map_err(|e| e.to_string())?;
            let c = build_curve(&p).map_err(|e| e.to_string())?;
            let direct = count_triangulation(&t);
            let formula = smooth_curve_counts(d as usize);
            if c.curve_counts() != direct || direct != formula {
                return Err(format!(
                    "degree {d}: curve {:?}, triangulation {direct:?}, formula {formula:?}",
                    c.curve_counts()
                ));
            }
            let genus = skeletonize(&c).genus().map_err(|e| e.to_string())?;
            let interior = polygon.interior_points().len() as i64;
            if genus != interior || genus != (d - 1) * (d - 2) / 2 {
                return Err(format!(
                    "degree {d}: skeleton genus {genus}, interior points {interior}"
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// A random polynomial of degree at most `d` whose Newton polygon is two-dimensional.
pub fn random_plane_poly(rng: &mut ChaCha8Rng, d: u32) -> TropicalPolynomial {
    loop {
        let mut terms = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                if rng.gen_bool(0.75) {
                    terms.push((vec![i, j], TropicalNumber::Finite(q(rng.gen_range(-6..=6)))));
                }
            }
        }
        let p = TropicalPolynomial::from_terms(2, terms).expect("terms");
        if build_curve(&p).is_ok() {
            return p;
        }
    }
}

/// Compares the perturbation and mixed-cell computations on `pairs` random
/// pairs of degree at most three.
pub fn intersection_oracles(seed: u64, pairs: usize) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..pairs {
        let (d, e) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let f = random_plane_poly(&mut rng, d);
        let g = random_plane_poly(&mut rng, e);
        let mut a: Vec<([Q; 2], u64)> = stable_intersection(&f, &g)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|p| {
                (
                    [p.location[0].clone(), p.location[1].clone()],
                    p.multiplicity,
                )
            })
            .collect();
        let mut b = mixed_cell_intersection(&f, &g).map_err(|e| e.to_string())?;
        a.sort();
        b.sort();
        if a != b {
            return Err(format!(
                "pair {k}: {f} and {g}: perturbation {a:?}, mixed cells {b:?}"
            ));
        }
    }
    Ok(())
}
