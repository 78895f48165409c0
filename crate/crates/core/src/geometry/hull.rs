//! Convex hulls in small dimension by exhaustive hyperplane enumeration.

use std::collections::HashSet;

use num_traits::Zero;

use super::linalg::{self, Int};
use crate::error::{Error, Result};
use crate::lp::{maximize, Constraint, LpOutcome, Relation};
use crate::rational::Q;

/// `normal · x <= offset` for every input point, with equality exactly on `on`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane<T> {
    pub normal: Vec<T>,
    pub offset: T,
    pub on: Vec<usize>,
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub fn for_each_combination(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if k > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return Ok(());
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn mask_of(ix: &[usize]) -> u128 {
    ix.iter().fold(0u128, |m, &i| m | (1u128 << i))
}

/// All supporting hyperplanes spanned by points of the set and accepted by
/// `keep`. When every point lies on a hyperplane both orientations are tried.
pub fn supporting_hyperplanes<T: Int>(
    pts: &[Vec<T>],
    keep: impl Fn(&[T]) -> bool,
) -> Result<Vec<Hyperplane<T>>> {
    let Some(d) = pts.first().map(Vec::len) else {
        return Ok(Vec::new());
    };
    if pts.len() > 128 {
        return Err(Error::BudgetExceeded(format!(
            "{} points exceed the hull kernel limit of 128",
            pts.len()
        )));
    }
    let mut found: Vec<Hyperplane<T>> = Vec::new();
    let mut found_masks: Vec<u128> = Vec::new();
    let mut seen: HashSet<(Vec<usize>, Vec<T>)> = HashSet::new();
    for_each_combination(pts.len(), d, |sub| {
        let m = mask_of(sub);
        if found_masks.iter().any(|f| f & m == m) {
            return Ok(());
        }
        let p0 = &pts[sub[0]];
        let mut diffs = Vec::with_capacity(d - 1);
        for &i in &sub[1..] {
            let row: Result<Vec<T>> = pts[i]
                .iter()
                .zip(p0)
                .map(|(a, b)| linalg::sub(a, b))
                .collect();
            diffs.push(row?);
        }
        let mut normal = linalg::cross(&diffs)?;
        if normal.iter().all(Zero::is_zero) {
            return Ok(());
        }
        linalg::make_primitive(&mut normal);
        let offset = linalg::dot(&normal, p0)?;
        let (mut pos, mut neg) = (false, false);
        let mut on = Vec::new();
        for (i, p) in pts.iter().enumerate() {
            let s = linalg::dot(&normal, p)?;
            if s > offset {
                pos = true;
            } else if s < offset {
                neg = true;
            } else {
                on.push(i);
            }
            if pos && neg {
                return Ok(());
            }
        }
        let mut cands = Vec::new();
        if !pos {
            cands.push((normal.clone(), offset.clone()));
        }
        if !neg {
            cands.push((
                normal.iter().map(|x| -x.clone()).collect::<Vec<T>>(),
                -offset,
            ));
        }
        let on_mask = mask_of(&on);
        for (n, o) in cands {
            if keep(&n) && seen.insert((on.clone(), n.clone())) {
                found.push(Hyperplane {
                    normal: n,
                    offset: o,
                    on: on.clone(),
                });
                found_masks.push(on_mask);
            }
        }
        Ok(())
    })?;
    Ok(found)
}

/// Facets of a full-dimensional point set (outward normals).
pub fn facets<T: Int>(pts: &[Vec<T>]) -> Result<Vec<Hyperplane<T>>> {
    supporting_hyperplanes(pts, |_| true)
}

pub fn widen(pts: &[Vec<i64>]) -> Vec<Vec<i128>> {
    pts.iter()
        .map(|p| p.iter().map(|&x| x as i128).collect())
        .collect()
}

fn drop_coord<T: Clone>(pts: &[&Vec<T>], k: usize) -> Vec<Vec<T>> {
    pts.iter()
        .map(|p| {
            p.iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

/// A triangulation (index sets of full-dimensional simplices) of a
/// full-dimensional point set, by coning from the lexicographically least
/// point over the facets missing it.
pub fn triangulate<T: Int>(pts: &[Vec<T>]) -> Result<Vec<Vec<usize>>> {
    let n = pts[0].len();
    if pts.len() == n + 1 {
        return Ok(vec![(0..=n).collect()]);
    }
    if n == 1 {
        let lo = (0..pts.len())
            .min_by(|&a, &b| pts[a][0].cmp(&pts[b][0]))
            .expect("nonempty");
        let hi = (0..pts.len())
            .max_by(|&a, &b| pts[a][0].cmp(&pts[b][0]))
            .expect("nonempty");
        let mut s = vec![lo, hi];
        s.sort_unstable();
        return Ok(vec![s]);
    }
    let p0 = (0..pts.len())
        .min_by(|&a, &b| pts[a].cmp(&pts[b]))
        .expect("nonempty");
    let mut out = Vec::new();
    for f in facets(pts)? {
        if f.on.contains(&p0) {
            continue;
        }
        let k = f
            .normal
            .iter()
            .position(|x| !x.is_zero())
            .expect("nonzero normal");
        let members: Vec<&Vec<T>> = f.on.iter().map(|&i| &pts[i]).collect();
        for s in triangulate(&drop_coord(&members, k))? {
            let mut simplex: Vec<usize> = s.iter().map(|&i| f.on[i]).collect();
            simplex.push(p0);
            simplex.sort_unstable();
            out.push(simplex);
        }
    }
    Ok(out)
}

/// `|det|` of a full-dimensional simplex given by `n+1` points in `R^n`.
pub fn simplex_volume<T: Int>(pts: &[&Vec<T>]) -> Result<T> {
    let p0 = pts[0];
    let mut rows = Vec::with_capacity(pts.len() - 1);
    for p in &pts[1..] {
        let row: Result<Vec<T>> = p.iter().zip(p0).map(|(a, b)| linalg::sub(a, b)).collect();
        rows.push(row?);
    }
    Ok(linalg::det(rows)?.abs())
}

/// Normalized volume (`n!` times Euclidean volume) of a full-dimensional set.
pub fn normalized_volume<T: Int>(pts: &[Vec<T>]) -> Result<T> {
    let mut total = T::zero();
    for s in triangulate(pts)? {
        let v: Vec<&Vec<T>> = s.iter().map(|&i| &pts[i]).collect();
        total = linalg::add(&total, &simplex_volume(&v)?)?;
    }
    Ok(total)
}

/// Whether `p` lies in the convex hull of `pts` (exact LP).
pub fn in_hull(pts: &[Vec<i64>], p: &[i64]) -> bool {
    let n = p.len();
    let mut cons: Vec<Constraint> = (0..n)
        .map(|k| Constraint {
            coeffs: pts.iter().map(|v| Q::from_integer(v[k].into())).collect(),
            rel: Relation::Eq,
            rhs: Q::from_integer(p[k].into()),
        })
        .collect();
    cons.push(Constraint {
        coeffs: vec![Q::from_integer(1.into()); pts.len()],
        rel: Relation::Eq,
        rhs: Q::from_integer(1.into()),
    });
    matches!(
        maximize(&vec![Q::zero(); pts.len()], &cons),
        LpOutcome::Optimal { .. }
    )
}

/// All lattice points of `conv(pts)`, sorted lexicographically.
pub fn lattice_points(pts: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let n = pts[0].len();
    let lo: Vec<i64> = (0..n)
        .map(|k| pts.iter().map(|p| p[k]).min().expect("nonempty"))
        .collect();
    let hi: Vec<i64> = (0..n)
        .map(|k| pts.iter().map(|p| p[k]).max().expect("nonempty"))
        .collect();
    let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    let full = linalg::affine_rank(&refs) == n;
    let fs = if full {
        facets(&widen(pts))?
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let inside = if full {
            let c: Vec<i128> = cur.iter().map(|&x| x as i128).collect();
            fs.iter().all(|f| {
                linalg::dot(&f.normal, &c)
                    .map(|v| v <= f.offset)
                    .unwrap_or(false)
            })
        } else {
            in_hull(pts, &cur)
        };
        if inside {
            out.push(cur.clone());
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < hi[k] {
                cur[k] += 1;
                for j in k + 1..n {
                    cur[j] = lo[j];
                }
                break;
            }
        }
    }
}

fn cross2(o: &[i64], a: &[i64], b: &[i64]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Counterclockwise hull vertices of planar points (collinear points dropped),
/// starting from the lexicographically least vertex.
pub fn hull_2d(pts: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut p: Vec<Vec<i64>> = pts.to_vec();
    p.sort();
    p.dedup();
    if p.len() <= 2 {
        return p;
    }
    let mut lower: Vec<Vec<i64>> = Vec::new();
    for x in &p {
        while lower.len() >= 2 && cross2(&lower[lower.len() - 2], &lower[lower.len() - 1], x) <= 0 {
            lower.pop();
        }
        lower.push(x.clone());
    }
    let mut upper: Vec<Vec<i64>> = Vec::new();
    for x in p.iter().rev() {
        while upper.len() >= 2 && cross2(&upper[upper.len() - 2], &upper[upper.len() - 1], x) <= 0 {
            upper.pop();
        }
        upper.push(x.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Twice the signed area of a polygon given in order.
pub fn double_area(poly: &[Vec<i64>]) -> i64 {
    let n = poly.len();
    (0..n)
        .map(|i| poly[i][0] * poly[(i + 1) % n][1] - poly[(i + 1) % n][0] * poly[i][1])
        .sum()
}
