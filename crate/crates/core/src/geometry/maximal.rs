//! Catalog of maximal lattice polygons with a given number of interior points.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::polygon::{polygon_normal_form, pushout, LatticePolygon, Pt};
use crate::error::{Error, Result};

/// Largest genus accepted unless the caller raises the budget.
pub const DEFAULT_MAX_GENUS: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MaximalPolygon {
    pub hyperelliptic: bool,
    pub polygon: LatticePolygon,
}

/// Whether no lattice point can be added without changing the interior points.
pub fn is_maximal(p: &LatticePolygon) -> bool {
    let interior = p.interior_points();
    let verts = p.vertices();
    let lo = [
        verts.iter().map(|v| v[0]).min().unwrap(),
        verts.iter().map(|v| v[1]).min().unwrap(),
    ];
    let hi = [
        verts.iter().map(|v| v[0]).max().unwrap(),
        verts.iter().map(|v| v[1]).max().unwrap(),
    ];
    let r = 2;
    for x in lo[0] - r..=hi[0] + r {
        for y in lo[1] - r..=hi[1] + r {
            if p.contains([x, y]) {
                continue;
            }
            let mut pts = verts.to_vec();
            pts.push([x, y]);
            let bigger = LatticePolygon::hull(&pts).expect("contains a polygon");
            if bigger.interior_points() == interior {
                return false;
            }
        }
    }
    true
}

fn lattice_convex(points: &BTreeSet<Pt>) -> Option<LatticePolygon> {
    let v: Vec<Pt> = points.iter().copied().collect();
    let p = LatticePolygon::hull(&v).ok()?;
    (p.lattice_points().len() == points.len()).then_some(p)
}

/// Representatives of all two-dimensional lattice polygons with exactly `n`
/// lattice points. Every such polygon loses a vertex to one with `n - 1`
/// points, so they are grown one point at a time from the unit triangle.
pub fn polygons_with_points(n: usize) -> Vec<LatticePolygon> {
    let mut level: BTreeSet<LatticePolygon> = BTreeSet::new();
    if n < 3 {
        return Vec::new();
    }
    level.insert(polygon_normal_form(&LatticePolygon::standard_triangle(1)));
    for k in 3..n {
        let mut next = BTreeSet::new();
        for p in &level {
            let pts: BTreeSet<Pt> = p.lattice_points().into_iter().collect();
            let verts = p.vertices();
            let r = k as i64 + 1;
            let x0 = verts.iter().map(|v| v[0]).min().unwrap() - r;
            let x1 = verts.iter().map(|v| v[0]).max().unwrap() + r;
            let y0 = verts.iter().map(|v| v[1]).min().unwrap() - r;
            let y1 = verts.iter().map(|v| v[1]).max().unwrap() + r;
            for x in x0..=x1 {
                for y in y0..=y1 {
                    if pts.contains(&[x, y]) {
                        continue;
                    }
                    let mut more = pts.clone();
                    more.insert([x, y]);
                    if let Some(q) = lattice_convex(&more) {
                        next.insert(polygon_normal_form(&q));
                    }
                }
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

fn nonhyperelliptic(g: usize) -> Vec<LatticePolygon> {
    let mut out = BTreeSet::new();
    for q in polygons_with_points(g) {
        if let Some(p) = pushout(&q) {
            if p.interior_points() == q.lattice_points() {
                out.insert(polygon_normal_form(&p));
            }
        }
    }
    out.into_iter().collect()
}

/// Polygons in the strip `0 <= y <= 2` whose interior points are exactly
/// `(1,1), ..., (g,1)`, filtered by maximality.
fn hyperelliptic(g: usize) -> Vec<LatticePolygon> {
    let g = g as i64;
    let want: Vec<Pt> = (1..=g).map(|x| [x, 1]).collect();
    let mut out = BTreeSet::new();
    let span = 2 * g + 4;
    // A shear fixing the middle row moves the bottom row freely; start it at 0.
    for b0 in 0..=span {
        for a2 in -span..=span {
            for b2 in a2..=span {
                let pts = [[0, 0], [b0, 0], [a2, 2], [b2, 2]];
                let Ok(p) = LatticePolygon::hull(&pts) else {
                    continue;
                };
                if p.interior_points() == want && is_maximal(&p) {
                    out.insert(polygon_normal_form(&p));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Maximal polygons with one interior point, by exhaustive search of
/// polygons in a box around the origin.
fn genus_one() -> Vec<LatticePolygon> {
    let boxed: Vec<Pt> = (-2..=2)
        .flat_map(|x| (-2..=2).map(move |y| [x, y]))
        .collect();
    let mut seen: HashSet<BTreeSet<Pt>> = HashSet::new();
    let mut stack: Vec<BTreeSet<Pt>> = Vec::new();
    for i in 0..boxed.len() {
        for j in i + 1..boxed.len() {
            for k in j + 1..boxed.len() {
                if let Ok(t) = LatticePolygon::hull(&[boxed[i], boxed[j], boxed[k]]) {
                    if t.interior_points() == [[0, 0]] {
                        let s: BTreeSet<Pt> = t.lattice_points().into_iter().collect();
                        if seen.insert(s.clone()) {
                            stack.push(s);
                        }
                    }
                }
            }
        }
    }
    let mut classes = BTreeSet::new();
    while let Some(s) = stack.pop() {
        let v: Vec<Pt> = s.iter().copied().collect();
        let p = LatticePolygon::hull(&v).expect("polygon");
        if is_maximal(&p) {
            classes.insert(polygon_normal_form(&p));
        }
        for &b in &boxed {
            if s.contains(&b) {
                continue;
            }
            let mut w = v.clone();
            w.push(b);
            let q = LatticePolygon::hull(&w).expect("polygon");
            if q.interior_points() == [[0, 0]] {
                let t: BTreeSet<Pt> = q.lattice_points().into_iter().collect();
                if seen.insert(t.clone()) {
                    stack.push(t);
                }
            }
        }
    }
    classes.into_iter().collect()
}

/// One representative per equivalence class of maximal polygons with `g`
/// interior lattice points, nonhyperelliptic first.
pub fn enumerate_maximal_polygons(g: u32, max_genus: u32) -> Result<Vec<MaximalPolygon>> {
    if g == 0 {
        return Err(Error::domain("genus must be positive"));
    }
    if g > max_genus {
        return Err(Error::BudgetExceeded(format!(
            "genus {g} exceeds the configured limit {max_genus}"
        )));
    }
    let tag = |h: bool| {
        move |p: LatticePolygon| MaximalPolygon {
            hyperelliptic: h,
            polygon: p,
        }
    };
    if g == 1 {
        return Ok(genus_one().into_iter().map(tag(false)).collect());
    }
    let mut out: Vec<MaximalPolygon> = nonhyperelliptic(g as usize)
        .into_iter()
        .map(tag(false))
        .collect();
    out.extend(hyperelliptic(g as usize).into_iter().map(tag(true)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::polygon::{equivalent, interior_hull, InteriorHull};

    #[test]
    fn small_polygon_counts() {
        assert_eq!(polygons_with_points(3).len(), 1);
        // Four points: unit square, the triangle with an edge midpoint, and conv{(0,0),(1,0),(0,1),(-1,-1)}.
        assert_eq!(polygons_with_points(4).len(), 3);
    }

    #[test]
    fn genus_three_and_four() {
        let g3 = enumerate_maximal_polygons(3, 4).unwrap();
        let non: Vec<_> = g3.iter().filter(|m| !m.hyperelliptic).collect();
        assert_eq!(non.len(), 1);
        assert!(equivalent(
            &non[0].polygon,
            &LatticePolygon::standard_triangle(4)
        ));
        let g4 = enumerate_maximal_polygons(4, 4).unwrap();
        assert_eq!(g4.len(), 9);
        assert_eq!(g4.iter().filter(|m| !m.hyperelliptic).count(), 3);
        for m in g4.iter().chain(&g3) {
            assert!(is_maximal(&m.polygon));
            if let InteriorHull::Polygon(q) = interior_hull(&m.polygon) {
                assert!(equivalent(&pushout(&q).unwrap(), &m.polygon));
            }
        }
    }

    #[test]
    fn genus_one_catalog() {
        let g1 = enumerate_maximal_polygons(1, 4).unwrap();
        assert_eq!(g1.len(), 3);
        assert!(g1
            .iter()
            .any(|m| equivalent(&m.polygon, &LatticePolygon::standard_triangle(3))));
        assert!(g1
            .iter()
            .any(|m| equivalent(&m.polygon, &LatticePolygon::rectangle(2, 2))));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            enumerate_maximal_polygons(5, 4),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
