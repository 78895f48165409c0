//! Two-phase simplex with Bland's anticycling rule, generic over the scalar
//! field. Exact over rationals; a floating-point instance is used only to
//! propose candidates that are then verified exactly.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Field operations needed by the simplex method.
pub trait Scalar: Clone + PartialOrd {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

const EPS: f64 = 1e-9;

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        self.abs() <= EPS
    }
    fn is_positive(&self) -> bool {
        *self > EPS
    }
    fn is_negative(&self) -> bool {
        *self < -EPS
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint<T = Q> {
    pub coeffs: Vec<T>,
    pub rel: Relation,
    pub rhs: T,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome<T = Q> {
    Optimal { value: T, x: Vec<T> },
    Infeasible,
    Unbounded,
}

/// Maximizes `objective · x` subject to `constraints` and `x >= 0`, exactly.
pub fn maximize(objective: &[Q], constraints: &[Constraint]) -> LpOutcome {
    maximize_in(objective, constraints)
}

/// Maximizes over any [`Scalar`] field.
pub fn maximize_in<T: Scalar>(objective: &[T], constraints: &[Constraint<T>]) -> LpOutcome<T> {
    let n = objective.len();
    let m = constraints.len();

    let mut rows: Vec<Vec<T>> = Vec::with_capacity(m);
    let mut rhs: Vec<T> = Vec::with_capacity(m);
    let mut rels = Vec::with_capacity(m);
    for c in constraints {
        assert_eq!(c.coeffs.len(), n, "constraint width");
        let (mut coeffs, mut b, mut rel) = (c.coeffs.clone(), c.rhs.clone(), c.rel);
        if b.is_negative() {
            coeffs.iter_mut().for_each(|x| *x = x.neg());
            b = b.neg();
            rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
        rows.push(coeffs);
        rhs.push(b);
        rels.push(rel);
    }

    // Column layout: [original n | slack per row | artificial per non-Le row].
    let slack_start = n;
    let art_rows: Vec<usize> = (0..m).filter(|&i| rels[i] != Relation::Le).collect();
    let width = n + m + art_rows.len();
    let mut tab: Vec<Vec<T>> = vec![vec![T::zero(); width]; m];
    let mut basis = vec![0usize; m];
    let mut is_art = vec![false; width];
    let mut allowed = vec![true; width];
    for i in 0..m {
        tab[i][..n].clone_from_slice(&rows[i]);
        match rels[i] {
            Relation::Le => {
                tab[i][slack_start + i] = T::one();
                basis[i] = slack_start + i;
            }
            Relation::Ge => tab[i][slack_start + i] = T::one().neg(),
            Relation::Eq => allowed[slack_start + i] = false,
        }
    }
    for (k, &i) in art_rows.iter().enumerate() {
        let col = n + m + k;
        tab[i][col] = T::one();
        basis[i] = col;
        is_art[col] = true;
    }

    let mut t = Tableau {
        tab,
        rhs,
        basis,
        allowed,
    };

    // Phase one: maximize -(sum of artificials).
    if !art_rows.is_empty() {
        let mut cost = vec![T::zero(); width];
        for (j, a) in is_art.iter().enumerate() {
            if *a {
                cost[j] = T::one().neg();
            }
        }
        match t.run(&cost) {
            Some(v) if v.is_zero() => {}
            _ => return LpOutcome::Infeasible,
        }
        // Pivot remaining (zero-valued) artificials out of the basis; a row
        // with no other nonzero entry is redundant and keeps its artificial.
        for i in 0..m {
            if !is_art[t.basis[i]] {
                continue;
            }
            if let Some(j) =
                (0..width).find(|&j| !is_art[j] && t.allowed[j] && !t.tab[i][j].is_zero())
            {
                t.pivot(i, j);
            }
        }
        for (j, a) in is_art.iter().enumerate() {
            if *a && !t.basis.contains(&j) {
                t.allowed[j] = false;
            }
        }
    }

    let mut cost = vec![T::zero(); width];
    cost[..n].clone_from_slice(objective);
    match t.run(&cost) {
        None => LpOutcome::Unbounded,
        Some(value) => {
            let mut x = vec![T::zero(); n];
            for (i, &b) in t.basis.iter().enumerate() {
                if b < n {
                    x[b] = t.rhs[i].clone();
                }
            }
            LpOutcome::Optimal { value, x }
        }
    }
}

struct Tableau<T> {
    tab: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    allowed: Vec<bool>,
}

impl<T: Scalar> Tableau<T> {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.tab[r][c].clone();
        for x in self.tab[r].iter_mut() {
            if !x.is_zero() {
                *x = x.div(&p);
            }
        }
        self.rhs[r] = self.rhs[r].div(&p);
        let prow = self.tab[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.tab.len() {
            if i == r {
                continue;
            }
            let f = self.tab[i][c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in self.tab[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
            self.rhs[i] = self.rhs[i].sub(&f.mul(&prhs));
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost · x` from the current basic feasible solution.
    /// Returns `None` when unbounded.
    fn run(&mut self, cost: &[T]) -> Option<T> {
        let width = cost.len();
        loop {
            let mut basic = vec![false; width];
            for &b in &self.basis {
                basic[b] = true;
            }
            // Bland: first improving column by reduced cost c_j - c_B · column_j.
            let mut entering = None;
            for j in 0..width {
                if !self.allowed[j] || basic[j] {
                    continue;
                }
                let mut rc = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.tab[i][j].is_zero() {
                        rc = rc.sub(&cost[b].mul(&self.tab[i][j]));
                    }
                }
                if rc.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                let value = self
                    .basis
                    .iter()
                    .enumerate()
                    .fold(T::zero(), |acc, (i, &b)| {
                        acc.add(&cost[b].mul(&self.rhs[i]))
                    });
                return Some(value);
            };
            let mut leave: Option<(usize, T)> = None;
            for i in 0..self.tab.len() {
                let a = &self.tab[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs[i].div(a);
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        let tie = !ratio.sub(&br).is_positive() && !br.sub(&ratio).is_positive();
                        if (!tie && ratio < br) || (tie && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            let (r, _) = leave?;
            self.pivot(r, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn row(c: &[i64], rel: Relation, b: i64) -> Constraint {
        Constraint {
            coeffs: c.iter().map(|&x| q(x)).collect(),
            rel,
            rhs: q(b),
        }
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let out = maximize(
            &[q(3), q(5)],
            &[
                row(&[1, 0], Relation::Le, 4),
                row(&[0, 2], Relation::Le, 12),
                row(&[3, 2], Relation::Le, 18),
            ],
        );
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: q(36),
                x: vec![q(2), q(6)]
            }
        );
    }

    #[test]
    fn equality_and_infeasible() {
        // max x s.t. x + y = 1, x - y >= 1/2 ... use integers: 2x - 2y >= 1
        let out = maximize(
            &[q(1), q(0)],
            &[
                row(&[1, 1], Relation::Eq, 1),
                row(&[2, -2], Relation::Ge, 1),
            ],
        );
        assert!(matches!(out, LpOutcome::Optimal { ref value, .. } if *value == q(1)));
        let out = maximize(
            &[q(1)],
            &[row(&[1], Relation::Le, 1), row(&[1], Relation::Ge, 2)],
        );
        assert_eq!(out, LpOutcome::Infeasible);
        let out = maximize(&[q(1), q(-1)], &[row(&[1, -1], Relation::Ge, 0)]);
        assert_eq!(out, LpOutcome::Unbounded);
        let out = maximize(&[q(-1)], &[row(&[3], Relation::Ge, 1)]);
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: qf(-1, 3),
                x: vec![qf(1, 3)]
            }
        );
    }

    #[test]
    fn floating_instance_agrees() {
        let c = |v: &[f64], rel, b| Constraint {
            coeffs: v.to_vec(),
            rel,
            rhs: b,
        };
        let out = maximize_in(
            &[3.0, 5.0],
            &[
                c(&[1.0, 0.0], Relation::Le, 4.0),
                c(&[0.0, 2.0], Relation::Le, 12.0),
                c(&[3.0, 2.0], Relation::Le, 18.0),
            ],
        );
        match out {
            LpOutcome::Optimal { value, x } => {
                assert!((value - 36.0).abs() < 1e-9);
                assert!((x[0] - 2.0).abs() < 1e-9 && (x[1] - 6.0).abs() < 1e-9);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn redundant_equalities() {
        let out = maximize(
            &[q(1), q(1)],
            &[row(&[1, 1], Relation::Eq, 2), row(&[2, 2], Relation::Eq, 4)],
        );
        assert!(matches!(out, LpOutcome::Optimal { ref value, .. } if *value == q(2)));
    }
}
