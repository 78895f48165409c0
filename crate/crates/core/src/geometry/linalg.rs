//! Small exact linear algebra: fraction-free integer determinants and
//! rational elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Integer types usable by the exact kernels: `i128` (checked) or `BigInt`.
pub trait Int:
    Clone
    + Ord
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + From<i64>
    + std::fmt::Debug
    + std::hash::Hash
{
    fn to_bigint(&self) -> BigInt;
}

impl Int for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Int for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

pub fn add<T: Int>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub fn sub<T: Int>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub fn mul<T: Int>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub fn dot<T: Int>(a: &[T], b: &[T]) -> Result<T> {
    let mut acc = T::zero();
    for (x, y) in a.iter().zip(b) {
        acc = add(&acc, &mul(x, y)?)?;
    }
    Ok(acc)
}

/// Determinant by Bareiss elimination (all intermediate divisions exact).
pub fn det<T: Int>(mut m: Vec<Vec<T>>) -> Result<T> {
    let n = m.len();
    if n == 0 {
        return Ok(T::one());
    }
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = sub(&mul(&m[i][j], &m[k][k])?, &mul(&m[i][k], &m[k][j])?)?;
                m[i][j] = v / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    Ok(sign * m[n - 1][n - 1].clone())
}

/// Generalized cross product: a vector orthogonal to the `d-1` rows of
/// `rows` (each of length `d`). Zero iff the rows are dependent.
pub fn cross<T: Int>(rows: &[Vec<T>]) -> Result<Vec<T>> {
    let d = rows.len() + 1;
    let mut out = Vec::with_capacity(d);
    for k in 0..d {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let v = det(minor)?;
        out.push(if k % 2 == 0 { v } else { -v });
    }
    Ok(out)
}

/// Divides by the gcd of the entries (zero vector unchanged).
pub fn make_primitive<T: Int>(v: &mut [T]) {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = x.clone() / g.clone();
        }
    }
}

/// Row-reduces `m` in place over Q and returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_q(m: &[Vec<Q>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Solves `a x = b`. Returns `None` if inconsistent; free variables are set to zero.
pub fn solve_q(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][n].clone();
    }
    Some(x)
}

pub fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_integer(x.into())).collect()
}

/// Dimension of the affine hull of the points (`-1` style: empty gives 0).
pub fn affine_rank(points: &[&[i64]]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let rows: Vec<Vec<Q>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(first.iter())
                .map(|(a, b)| Q::from_integer((a - b).into()))
                .collect()
        })
        .collect();
    rank_q(&rows)
}

/// Indices (into `points`) of a maximal affinely independent subset, greedily.
pub fn affine_basis(points: &[&[i64]]) -> Vec<usize> {
    let mut basis: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if basis.is_empty() {
            basis.push(i);
            continue;
        }
        let base = points[basis[0]];
        let row: Vec<Q> = p
            .iter()
            .zip(base.iter())
            .map(|(a, b)| Q::from_integer((a - b).into()))
            .collect();
        rows.push(row);
        if rank_q(&rows) == rows.len() {
            basis.push(i);
        } else {
            rows.pop();
        }
    }
    basis
}

/// Barycentric coordinates of `p` w.r.t. affinely independent `basis`.
pub fn barycentric(basis: &[&[i64]], p: &[i64]) -> Option<Vec<Q>> {
    let d = p.len();
    let k = basis.len();
    let mut a: Vec<Vec<Q>> = (0..d)
        .map(|i| {
            (0..k)
                .map(|j| Q::from_integer(basis[j][i].into()))
                .collect()
        })
        .collect();
    a.push(vec![Q::one(); k]);
    let mut b = to_q(p);
    b.push(Q::one());
    let x = solve_q(&a, &b)?;
    // Verify (solve_q zeroes free variables; the basis is independent so none exist).
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    #[test]
    fn determinants() {
        let m: Vec<Vec<i128>> = vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]];
        assert_eq!(det(m).unwrap(), 0);
        let m: Vec<Vec<i128>> = vec![vec![0, 2, 1], vec![1, 3, 2], vec![1, 1, 4]];
        assert_eq!(det(m).unwrap(), -6);
        let m: Vec<Vec<i128>> = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(det(m).unwrap(), -1);
        let m: Vec<Vec<BigInt>> = vec![vec![BigInt::from(4)]];
        assert_eq!(det(m).unwrap(), BigInt::from(4));
        let big = i128::MAX / 2;
        let m: Vec<Vec<i128>> = vec![vec![big, 1], vec![1, big]];
        assert_eq!(det(m), Err(Error::Overflow));
    }

    #[test]
    fn cross_products() {
        let n = cross::<i128>(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert_eq!(n, vec![0, 0, 1]);
        let mut v: Vec<i128> = vec![4, -6, 0];
        make_primitive(&mut v);
        assert_eq!(v, vec![2, -3, 0]);
    }

    #[test]
    fn solving() {
        let a = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert_eq!(solve_q(&a, &[q(3), q(1)]).unwrap(), vec![q(2), q(1)]);
        assert!(solve_q(&[vec![q(1)], vec![q(1)]], &[q(1), q(2)]).is_none());
        let b = barycentric(&[&[0, 0], &[2, 0], &[0, 2]], &[1, 1]).unwrap();
        assert_eq!(b, vec![q(0), qf(1, 2), qf(1, 2)]);
        assert_eq!(affine_rank(&[&[0, 0], &[1, 1], &[2, 2]]), 1);
        assert_eq!(
            affine_basis(&[&[0, 0], &[1, 1], &[2, 2], &[0, 1]]),
            vec![0, 1, 3]
        );
    }
}
