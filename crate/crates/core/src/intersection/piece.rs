//! Closed convex subsets of the plane of dimension at most one:
//! `{ base + s·dir : 0 <= s <= hi }`, with `hi = None` for rays.

use num_traits::{One, Signed, Zero};

use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub base: [Q; 2],
    pub dir: [Q; 2],
    pub hi: Option<Q>,
}

fn det(a: &[Q; 2], b: &[Q; 2]) -> Q {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn sub(a: &[Q; 2], b: &[Q; 2]) -> [Q; 2] {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

fn at(p: &Piece, s: &Q) -> [Q; 2] {
    [&p.base[0] + s * &p.dir[0], &p.base[1] + s * &p.dir[1]]
}

fn in_range(s: &Q, hi: &Option<Q>) -> bool {
    !s.is_negative() && hi.as_ref().is_none_or(|h| s <= h)
}

impl Piece {
    pub fn point(p: [Q; 2]) -> Self {
        Self {
            base: p,
            dir: [Q::zero(), Q::zero()],
            hi: Some(Q::zero()),
        }
    }

    pub fn segment(a: [Q; 2], b: [Q; 2]) -> Self {
        let dir = sub(&b, &a);
        Self {
            base: a,
            dir,
            hi: Some(Q::one()),
        }
    }

    pub fn ray(a: [Q; 2], dir: [Q; 2]) -> Self {
        Self {
            base: a,
            dir,
            hi: None,
        }
    }

    pub fn is_point(&self) -> bool {
        self.dir[0].is_zero() && self.dir[1].is_zero()
            || self.hi.as_ref().is_some_and(Zero::is_zero)
    }

    pub fn contains(&self, p: &[Q; 2]) -> bool {
        let d = sub(p, &self.base);
        if self.is_point() {
            return d[0].is_zero() && d[1].is_zero();
        }
        if !det(&self.dir, &d).is_zero() {
            return false;
        }
        let k = if self.dir[0].is_zero() { 1 } else { 0 };
        in_range(&(&d[k] / &self.dir[k]), &self.hi)
    }

    /// Endpoints of the piece; one for rays, one for points.
    pub fn ends(&self) -> Vec<[Q; 2]> {
        match &self.hi {
            Some(h) if !self.is_point() => vec![self.base.clone(), at(self, h)],
            _ => vec![self.base.clone()],
        }
    }

    pub fn intersect(&self, o: &Piece) -> Option<Piece> {
        if self.is_point() {
            return o
                .contains(&self.base)
                .then(|| Piece::point(self.base.clone()));
        }
        if o.is_point() {
            return self.contains(&o.base).then(|| Piece::point(o.base.clone()));
        }
        let d = sub(&o.base, &self.base);
        let den = det(&self.dir, &o.dir);
        if !den.is_zero() {
            let s = det(&d, &o.dir) / &den;
            let t = det(&d, &self.dir) / &den;
            return (in_range(&s, &self.hi) && in_range(&t, &o.hi))
                .then(|| Piece::point(at(self, &s)));
        }
        if !det(&self.dir, &d).is_zero() {
            return None;
        }
        // Collinear: o's parameter interval expressed in self's parameter.
        let k = if self.dir[0].is_zero() { 1 } else { 0 };
        let s0 = &d[k] / &self.dir[k];
        let lambda = &o.dir[k] / &self.dir[k];
        let s1 = o.hi.as_ref().map(|h| &s0 + &lambda * h);
        let (lo, hi) = match (lambda.is_positive(), s1) {
            (true, s1) => (Some(s0), s1),
            (false, Some(s1)) => (Some(s1), Some(s0)),
            (false, None) => (None, Some(s0)),
        };
        let lo = lo.map_or(Q::zero(), |l| l.max(Q::zero()));
        let hi = match (hi, &self.hi) {
            (Some(a), Some(b)) => Some(a.min(b.clone())),
            (Some(a), None) => Some(a),
            (None, b) => b.clone(),
        };
        if hi.as_ref().is_some_and(|h| *h < lo) {
            return None;
        }
        let base = at(self, &lo);
        Some(match hi {
            None => Piece::ray(base, self.dir.clone()),
            Some(h) => {
                let end = at(self, &h);
                if h == lo {
                    Piece::point(base)
                } else {
                    Piece::segment(base, end)
                }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn p(x: i64, y: i64) -> [Q; 2] {
        [q(x), q(y)]
    }

    #[test]
    fn crossing_and_overlap() {
        let a = Piece::segment(p(0, 0), p(2, 2));
        let b = Piece::segment(p(0, 2), p(2, 0));
        assert_eq!(a.intersect(&b), Some(Piece::point(p(1, 1))));
        let r = Piece::ray(p(1, 1), p(-1, -1));
        assert_eq!(a.intersect(&r), Some(Piece::segment(p(0, 0), p(1, 1))));
        let r2 = Piece::ray(p(-1, 0), p(-1, 0));
        let r3 = Piece::ray(p(0, 0), p(-1, 0));
        assert_eq!(r3.intersect(&r2), Some(Piece::ray(p(-1, 0), p(-1, 0))));
        assert_eq!(r2.intersect(&r3), Some(Piece::ray(p(-1, 0), p(-1, 0))));
        let opposite = Piece::ray(p(3, 3), p(1, 1));
        assert_eq!(a.intersect(&opposite), None);
        let touching = Piece::ray(p(2, 2), p(1, 1));
        assert_eq!(a.intersect(&touching), Some(Piece::point(p(2, 2))));
        let half = Piece::segment([qf(1, 2), qf(1, 2)], p(5, 5));
        assert_eq!(
            a.intersect(&half),
            Some(Piece::segment([qf(1, 2), qf(1, 2)], p(2, 2)))
        );
        assert!(!a.contains(&p(3, 3)));
    }
}
