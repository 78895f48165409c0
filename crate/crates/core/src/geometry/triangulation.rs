//! Unimodular triangulations of lattice polygons by flip-graph search.

use std::collections::{BTreeMap, HashSet};

use num_traits::One;

use super::polygon::{lattice_automorphisms, LatticePolygon, Pt};
use super::subdivision::{regular_subdivision, PointConfiguration, Subdivision};
use crate::budget::Budget;
use crate::error::Result;
use crate::rational::q;

pub type Triangle = [u16; 3];

/// Triangles as sorted index triples into the lattice points of a polygon.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation(pub Vec<Triangle>);

fn orient(a: Pt, b: Pt, c: Pt) -> i64 {
    (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
}

fn tri(a: usize, b: usize, c: usize) -> Triangle {
    let mut t = [a as u16, b as u16, c as u16];
    t.sort_unstable();
    t
}

/// Flip-graph enumerator over all triangulations using every lattice point.
pub struct TriangulationSpace {
    pub points: Vec<Pt>,
    perms: Vec<Vec<u16>>,
}

impl TriangulationSpace {
    pub fn new(p: &LatticePolygon, up_to_symmetry: bool) -> Self {
        let points = p.lattice_points();
        let perms = if up_to_symmetry {
            lattice_automorphisms(p)
                .iter()
                .map(|m| {
                    points
                        .iter()
                        .map(|&x| {
                            points
                                .binary_search(&m.apply(x))
                                .expect("automorphism permutes lattice points")
                                as u16
                        })
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        Self { points, perms }
    }

    pub fn config(&self) -> PointConfiguration {
        PointConfiguration::new(self.points.iter().map(|p| p.to_vec()).collect())
            .expect("distinct points")
    }

    /// Delaunay cells for paraboloid heights, each fanned from its first vertex.
    pub fn seed(&self) -> Result<Triangulation> {
        let mut cfg = self.config();
        cfg.heights = self
            .points
            .iter()
            .map(|p| Some(-q(p[0] * p[0] + p[1] * p[1])))
            .collect();
        let sub = regular_subdivision(&cfg)?;
        let mut tris = Vec::new();
        for cell in &sub.cells {
            let pts: Vec<Vec<i64>> = cell.iter().map(|&k| self.points[k].to_vec()).collect();
            let ring = super::hull::hull_2d(&pts);
            let idx: Vec<usize> = ring
                .iter()
                .map(|v| {
                    self.points
                        .binary_search(&[v[0], v[1]])
                        .expect("cell point")
                })
                .collect();
            for i in 1..idx.len() - 1 {
                tris.push(tri(idx[0], idx[i], idx[i + 1]));
            }
        }
        tris.sort_unstable();
        Ok(Triangulation(tris))
    }

    pub fn canonical(&self, t: Triangulation) -> Triangulation {
        let mut best = t.clone();
        for perm in &self.perms {
            let mut img: Vec<Triangle> =
                t.0.iter()
                    .map(|tr| {
                        let mut x = [
                            perm[tr[0] as usize],
                            perm[tr[1] as usize],
                            perm[tr[2] as usize],
                        ];
                        x.sort_unstable();
                        x
                    })
                    .collect();
            img.sort_unstable();
            if img < best.0 {
                best = Triangulation(img);
            }
        }
        best
    }

    /// All triangulations reachable by one diagonal flip.
    pub fn flips(&self, t: &Triangulation) -> Vec<Triangulation> {
        let mut edges: BTreeMap<(u16, u16), Vec<u16>> = BTreeMap::new();
        for tr in &t.0 {
            for (a, b, c) in [
                (tr[0], tr[1], tr[2]),
                (tr[0], tr[2], tr[1]),
                (tr[1], tr[2], tr[0]),
            ] {
                edges.entry((a, b)).or_default().push(c);
            }
        }
        let mut out = Vec::new();
        for (&(a, b), opp) in &edges {
            if opp.len() != 2 {
                continue;
            }
            let (c, d) = (opp[0], opp[1]);
            let p = |i: u16| self.points[i as usize];
            let s1 = orient(p(c), p(d), p(a)).signum();
            let s2 = orient(p(c), p(d), p(b)).signum();
            if s1 * s2 >= 0 {
                continue;
            }
            let old = [
                tri(a as usize, b as usize, c as usize),
                tri(a as usize, b as usize, d as usize),
            ];
            let mut tris: Vec<Triangle> =
                t.0.iter().filter(|x| !old.contains(x)).copied().collect();
            tris.push(tri(c as usize, d as usize, a as usize));
            tris.push(tri(c as usize, d as usize, b as usize));
            tris.sort_unstable();
            out.push(Triangulation(tris));
        }
        out
    }

    /// Depth-first search of the flip graph (modulo symmetry if requested).
    pub fn enumerate(
        &self,
        budget: &Budget,
        mut progress: impl FnMut(usize),
    ) -> Result<Vec<Triangulation>> {
        let start = self.canonical(self.seed()?);
        let mut seen: HashSet<Triangulation> = HashSet::new();
        let mut stack = vec![start.clone()];
        seen.insert(start);
        let mut out = Vec::new();
        while let Some(t) = stack.pop() {
            if out.len() % 1024 == 0 {
                budget.check("triangulation enumeration")?;
                progress(out.len());
            }
            for n in self.flips(&t) {
                let c = self.canonical(n);
                if !seen.contains(&c) {
                    seen.insert(c.clone());
                    stack.push(c);
                }
            }
            out.push(t);
        }
        out.sort_unstable();
        progress(out.len());
        Ok(out)
    }

    pub fn to_subdivision(&self, t: &Triangulation) -> Subdivision {
        Subdivision::from_cells(
            self.config(),
            t.0.iter()
                .map(|x| x.iter().map(|&i| i as usize).collect())
                .collect(),
        )
    }
}

/// Every unimodular triangulation of the polygon, optionally one per
/// symmetry orbit, as combinatorial subdivisions.
pub fn enumerate_unimodular_triangulations(
    p: &LatticePolygon,
    up_to_symmetry: bool,
) -> Result<Vec<Subdivision>> {
    let space = TriangulationSpace::new(p, up_to_symmetry);
    let ts = space.enumerate(&Budget::unlimited(), |_| {})?;
    Ok(ts.iter().map(|t| space.to_subdivision(t)).collect())
}

/// Independent count: maximal non-crossing families of primitive segments.
/// A family is a full triangulation exactly when it has `3n - 3 - b` members.
pub fn count_triangulations_by_segments(p: &LatticePolygon) -> u64 {
    let pts = p.lattice_points();
    let n = pts.len();
    let b = p.boundary_point_count();
    let target = 3 * n - 3 - b;
    let mut segs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (dx, dy) = (pts[j][0] - pts[i][0], pts[j][1] - pts[i][1]);
            if crate::rational::gcd_i64(dx, dy) == 1 {
                segs.push((i, j));
            }
        }
    }
    let crosses = |s: (usize, usize), t: (usize, usize)| {
        if s.0 == t.0 || s.0 == t.1 || s.1 == t.0 || s.1 == t.1 {
            return false;
        }
        let (a, bb, c, d) = (pts[s.0], pts[s.1], pts[t.0], pts[t.1]);
        orient(a, bb, c).signum() * orient(a, bb, d).signum() < 0
            && orient(c, d, a).signum() * orient(c, d, bb).signum() < 0
    };
    let m = segs.len();
    let cross: Vec<Vec<bool>> = (0..m)
        .map(|i| (0..m).map(|j| crosses(segs[i], segs[j])).collect())
        .collect();
    // Segments crossing nothing are in every triangulation.
    let forced: Vec<usize> = (0..m).filter(|&i| cross[i].iter().all(|x| !x)).collect();
    let free: Vec<usize> = (0..m).filter(|i| !forced.contains(i)).collect();
    fn rec(
        free: &[usize],
        k: usize,
        chosen: &mut Vec<usize>,
        cross: &[Vec<bool>],
        need: usize,
        count: &mut u64,
    ) {
        if chosen.len() == need {
            *count += 1;
            return;
        }
        if k == free.len() || chosen.len() + (free.len() - k) < need {
            return;
        }
        let s = free[k];
        if chosen.iter().any(|&c| cross[s][c]) {
            rec(free, k + 1, chosen, cross, need, count);
            return;
        }
        chosen.push(s);
        rec(free, k + 1, chosen, cross, need, count);
        chosen.pop();
        // Excluding s is only consistent if some later segment crosses it.
        if free[k + 1..].iter().any(|&t| cross[s][t]) {
            rec(free, k + 1, chosen, cross, need, count);
        }
    }
    let mut count = 0;
    rec(
        &free,
        0,
        &mut Vec::new(),
        &cross,
        target - forced.len(),
        &mut count,
    );
    count
}

/// Every cell is a lattice triangle of normalized area one.
pub fn all_unimodular(sub: &Subdivision) -> bool {
    (0..sub.cells.len())
        .all(|i| sub.cells[i].len() == 3 && sub.cell_volume(i).map_or(false, |v| v.is_one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts_match_segment_oracle() {
        for p in [
            LatticePolygon::standard_triangle(1),
            LatticePolygon::standard_triangle(2),
            LatticePolygon::standard_triangle(3),
            LatticePolygon::rectangle(1, 1),
            LatticePolygon::rectangle(1, 2),
            LatticePolygon::rectangle(2, 2),
        ] {
            let space = TriangulationSpace::new(&p, false);
            let all = space.enumerate(&Budget::unlimited(), |_| {}).unwrap();
            assert_eq!(
                all.len() as u64,
                count_triangulations_by_segments(&p),
                "{p}"
            );
            for t in &all {
                let s = space.to_subdivision(t);
                assert!(all_unimodular(&s));
                assert_eq!(s.used_points().len(), space.points.len());
            }
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(
            enumerate_unimodular_triangulations(&LatticePolygon::standard_triangle(1), true)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_unimodular_triangulations(&LatticePolygon::rectangle(1, 1), false)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_unimodular_triangulations(&LatticePolygon::rectangle(1, 2), false)
                .unwrap()
                .len(),
            6
        );
        assert_eq!(
            enumerate_unimodular_triangulations(&LatticePolygon::rectangle(2, 2), false)
                .unwrap()
                .len(),
            64
        );
        assert_eq!(
            enumerate_unimodular_triangulations(&LatticePolygon::standard_triangle(2), false)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn rectangles_are_always_regular() {
        for t in
            enumerate_unimodular_triangulations(&LatticePolygon::rectangle(1, 3), false).unwrap()
        {
            assert!(crate::geometry::is_regular(&t).unwrap().regular);
        }
    }
}
