//! Tropical polynomials: representation, parsing, evaluation and the
//! univariate theory (roots, multiplicities, factorization).
//!
//! Grammar accepted by [`TropicalPolynomial::parse`]:
//!
//! ```text
//! poly      := term ("(+)" term)*  |  "max(" linear ("," linear)* ")"
//! term      := coef ["(*)"] monomial | coef | monomial
//! monomial  := factor (["(*)"] factor)*        factor := ("x"|"y"|"z") ["^" uint]
//! coef      := ["-"] uint ["/" uint]  |  "(" coef ")"
//! linear    := classical affine form such as "2x + y - 1/2"
//! ```
//!
//! Repeated monomials keep the larger coefficient. Output is canonical: terms
//! in descending degree-reverse-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lp::{maximize, Constraint, LpOutcome, Relation};
use crate::rational::{fmt_q, q, Q};
use crate::semiring::TropicalNumber;

pub type Exponent = Vec<u32>;

const VARS: [char; 3] = ['x', 'y', 'z'];

/// `⊕_α c_α ⊙ x^α` with finite coefficients; absent terms are `-inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropicalPolynomial {
    n_vars: usize,
    terms: BTreeMap<Exponent, Q>,
}

impl TropicalPolynomial {
    pub fn new(n_vars: usize) -> Self {
        assert!(n_vars >= 1, "a polynomial needs at least one variable");
        Self {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Q) -> Self {
        let mut p = Self::new(n_vars);
        p.insert(vec![0; n_vars], TropicalNumber::Finite(c));
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; `-inf` coefficients are dropped.
    pub fn from_terms<I>(n_vars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, TropicalNumber)>,
    {
        let mut p = Self::new(n_vars);
        for (e, c) in terms {
            if e.len() != n_vars {
                return Err(Error::DimensionMismatch {
                    expected: n_vars,
                    got: e.len(),
                });
            }
            p.insert(e, c);
        }
        Ok(p)
    }

    /// Integer-coefficient shorthand used heavily in tests and examples.
    pub fn from_int_terms(n_vars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            n_vars,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), TropicalNumber::int(*c))),
        )
        .expect("consistent exponent lengths")
    }

    /// Inserts a term, keeping the maximum when the monomial already exists.
    pub fn insert(&mut self, e: Exponent, c: TropicalNumber) {
        let TropicalNumber::Finite(c) = c else { return };
        match self.terms.get_mut(&e) {
            Some(old) if *old >= c => {}
            Some(old) => *old = c,
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> TropicalNumber {
        self.terms
            .get(e)
            .cloned()
            .map_or(TropicalNumber::NegInf, TropicalNumber::Finite)
    }

    pub fn exponents(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    /// Re-embeds into more variables (new exponents are zero).
    pub fn with_n_vars(&self, n_vars: usize) -> Result<Self> {
        if n_vars < self.n_vars {
            if self
                .terms
                .keys()
                .any(|e| e[n_vars..].iter().any(|&x| x != 0))
            {
                return Err(Error::DimensionMismatch {
                    expected: self.n_vars,
                    got: n_vars,
                });
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = e.clone();
                e2.resize(n_vars, 0);
                (e2, c.clone())
            })
            .collect();
        Ok(Self { n_vars, terms })
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// `Some(d)` when the Newton polytope is the standard simplex `T_d`, `d >= 1`.
    pub fn degree(&self) -> Option<u32> {
        let d = self.total_degree();
        if d == 0 {
            return None;
        }
        if !self.terms.contains_key(&vec![0; self.n_vars]) {
            return None;
        }
        for i in 0..self.n_vars {
            let mut e = vec![0; self.n_vars];
            e[i] = d;
            if !self.terms.contains_key(&e) {
                return None;
            }
        }
        Some(d)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).parse(None)
    }

    /// Parses with at least `n_vars` variables.
    pub fn parse_in(text: &str, n_vars: usize) -> Result<Self> {
        Parser::new(text).parse(Some(n_vars))
    }

    fn check_point(&self, point: &[Q]) -> Result<()> {
        if point.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                got: point.len(),
            });
        }
        Ok(())
    }

    pub fn term_value(e: &[u32], c: &Q, point: &[Q]) -> Q {
        e.iter().zip(point).fold(
            c.clone(),
            |acc, (&k, w)| if k == 0 { acc } else { acc + q(k as i64) * w },
        )
    }

    /// Value at `point` together with every exponent attaining the maximum.
    pub fn evaluate(&self, point: &[Q]) -> Result<(TropicalNumber, Vec<Exponent>)> {
        self.check_point(point)?;
        let mut best: Option<Q> = None;
        let mut arg = Vec::new();
        for (e, c) in &self.terms {
            let v = Self::term_value(e, c, point);
            match best.as_ref().map(|b| v.cmp(b)) {
                None | Some(Ordering::Greater) => {
                    best = Some(v);
                    arg.clear();
                    arg.push(e.clone());
                }
                Some(Ordering::Equal) => arg.push(e.clone()),
                Some(Ordering::Less) => {}
            }
        }
        Ok((
            best.map_or(TropicalNumber::NegInf, TropicalNumber::Finite),
            arg,
        ))
    }

    /// The maximum is attained at least twice.
    pub fn vanishes_at(&self, point: &[Q]) -> Result<bool> {
        Ok(self.evaluate(point)?.1.len() >= 2)
    }

    pub fn leading_coefficient(&self) -> Option<&Q> {
        self.terms
            .iter()
            .max_by(|a, b| degrevlex(a.0, b.0))
            .map(|(_, c)| c)
    }
}

/// Degree-reverse-lexicographic order on exponent vectors.
pub fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn fmt_monomial(e: &[u32]) -> String {
    let mut s = String::new();
    for (k, &p) in e.iter().enumerate() {
        if p == 0 {
            continue;
        }
        let v = VARS.get(k).copied().unwrap_or('?');
        s.push(v);
        if p > 1 {
            s.push_str(&format!("^{p}"));
        }
    }
    s
}

impl fmt::Display for TropicalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("-inf");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| degrevlex(b.0, a.0));
        let parts: Vec<String> = terms
            .iter()
            .map(|(e, c)| {
                let mono = fmt_monomial(e);
                match (mono.is_empty(), c.is_zero()) {
                    (true, _) => fmt_q(c),
                    (false, true) => mono,
                    (false, false) => format!("{}(*){}", fmt_q(c), mono),
                }
            })
            .collect();
        f.write_str(&parts.join(" (+) "))
    }
}

impl FromStr for TropicalPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for TropicalPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            n_vars: usize,
            text: String,
            terms: Vec<(&'a Exponent, String)>,
        }
        Wire {
            n_vars: self.n_vars,
            text: self.to_string(),
            terms: self.terms.iter().map(|(e, c)| (e, fmt_q(c))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TropicalPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n_vars: usize,
            text: String,
        }
        let w = Wire::deserialize(d)?;
        TropicalPolynomial::parse_in(&w.text, w.n_vars).map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// Parsing

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    max_var: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            pos: 0,
            max_var: 0,
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, msg))
    }

    fn parse(mut self, n_vars: Option<usize>) -> Result<TropicalPolynomial> {
        self.skip_ws();
        let raw: Vec<(Vec<i64>, Q, usize)> = if self.rest().starts_with("max") {
            self.pos += 3;
            self.parse_classical()?
        } else {
            self.parse_tropical()?
        };
        self.skip_ws();
        if !self.rest().is_empty() {
            return self.err(format!("unexpected trailing input {:?}", self.rest()));
        }
        let n = n_vars.unwrap_or(1).max(self.max_var).max(1);
        if let Some(want) = n_vars {
            if self.max_var > want {
                return Err(Error::DimensionMismatch {
                    expected: want,
                    got: self.max_var,
                });
            }
        }
        let mut p = TropicalPolynomial::new(n);
        for (mut e, c, at) in raw {
            if e.iter().any(|&k| k < 0) {
                return Err(Error::parse(at, "negative exponents are not allowed"));
            }
            e.resize(n, 0);
            p.insert(
                e.into_iter().map(|k| k as u32).collect(),
                TropicalNumber::Finite(c),
            );
        }
        Ok(p)
    }

    fn parse_tropical(&mut self) -> Result<Vec<(Vec<i64>, Q, usize)>> {
        let mut out = vec![self.parse_term()?];
        while self.eat("(+)") {
            out.push(self.parse_term()?);
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<(Vec<i64>, Q, usize)> {
        self.skip_ws();
        let at = self.pos;
        let coef = if self.at_coefficient() {
            Some(self.parse_coef()?)
        } else {
            None
        };
        let star = self.eat("(*)");
        let mono = self.parse_monomial()?;
        match (coef, mono) {
            (None, None) => self.err("expected a coefficient or a monomial"),
            (_, None) if star => self.err("expected a monomial after '(*)'"),
            (c, m) => Ok((m.unwrap_or_default(), c.unwrap_or_else(Q::zero), at)),
        }
    }

    fn at_coefficient(&mut self) -> bool {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with("(+)") || r.starts_with("(*)") {
            return false;
        }
        matches!(r.chars().next(), Some(c) if c.is_ascii_digit() || c == '-' || c == '(' || c == '+')
    }

    fn parse_uint(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let digits: String = self
            .rest()
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return self.err("expected digits");
        }
        self.pos += digits.len();
        Ok(digits.parse().expect("digits"))
    }

    fn parse_coef(&mut self) -> Result<Q> {
        if self.eat("(") {
            let c = self.parse_coef()?;
            if !self.eat(")") {
                return self.err("expected ')'");
            }
            return Ok(c);
        }
        let neg = if self.eat("-") {
            true
        } else {
            self.eat("+");
            false
        };
        let n = self.parse_uint()?;
        let mut v = Q::from_integer(n);
        if self.eat("/") {
            let d = self.parse_uint()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            v /= Q::from_integer(d);
        }
        Ok(if neg { -v } else { v })
    }

    fn parse_var(&mut self) -> Option<usize> {
        let c = self.peek()?;
        let k = VARS.iter().position(|&v| v == c)?;
        self.pos += 1;
        self.max_var = self.max_var.max(k + 1);
        Some(k)
    }

    fn parse_monomial(&mut self) -> Result<Option<Vec<i64>>> {
        let mut e: Vec<i64> = Vec::new();
        let mut any = false;
        loop {
            let save = self.pos;
            if any && self.eat("(*)") && !matches!(self.peek(), Some('x' | 'y' | 'z')) {
                self.pos = save;
                break;
            }
            let Some(k) = self.parse_var() else {
                self.pos = save;
                break;
            };
            let mut power = 1i64;
            if self.eat("^") {
                let neg = self.eat("-");
                let p = self.parse_uint()?;
                let p: i64 = p
                    .try_into()
                    .map_err(|_| Error::parse(self.pos, "exponent too large"))?;
                if neg {
                    return self.err("negative exponents are not allowed");
                }
                power = p;
            }
            if e.len() <= k {
                e.resize(k + 1, 0);
            }
            e[k] += power;
            any = true;
        }
        Ok(any.then_some(e))
    }

    fn parse_classical(&mut self) -> Result<Vec<(Vec<i64>, Q, usize)>> {
        if !self.eat("(") {
            return self.err("expected '(' after max");
        }
        let mut out = vec![self.parse_linear()?];
        while self.eat(",") {
            out.push(self.parse_linear()?);
        }
        if !self.eat(")") {
            return self.err("expected ')' closing max");
        }
        Ok(out)
    }

    /// `a1 x + a2 y + ... + c` with signed rational coefficients.
    fn parse_linear(&mut self) -> Result<(Vec<i64>, Q, usize)> {
        self.skip_ws();
        let at = self.pos;
        let mut e: Vec<Q> = Vec::new();
        let mut c = Q::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = if self.eat("-") {
                -Q::one()
            } else if self.eat("+") || first {
                Q::one()
            } else {
                break;
            };
            first = false;
            self.skip_ws();
            let num = if matches!(self.peek(), Some(ch) if ch.is_ascii_digit()) {
                let n = self.parse_uint()?;
                let mut v = Q::from_integer(n);
                if self.eat("/") {
                    let d = self.parse_uint()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    v /= Q::from_integer(d);
                }
                self.eat("*");
                Some(v)
            } else {
                None
            };
            match self.parse_var() {
                Some(k) => {
                    if e.len() <= k {
                        e.resize(k + 1, Q::zero());
                    }
                    e[k] += sign * num.unwrap_or_else(Q::one);
                }
                None => match num {
                    Some(v) => c += sign * v,
                    None => return self.err("expected a number or a variable"),
                },
            }
        }
        let mut ints = Vec::with_capacity(e.len());
        for a in e {
            if !a.is_integer() {
                return Err(Error::parse(at, "exponents must be integers"));
            }
            let k: i64 = a
                .to_integer()
                .try_into()
                .map_err(|_| Error::parse(at, "exponent too large"))?;
            ints.push(k);
        }
        Ok((ints, c, at))
    }
}

// ---------------------------------------------------------------------------
// Univariate theory

/// A root of a univariate tropical polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropicalRoot {
    pub location: TropicalNumber,
    pub multiplicity: u32,
}

impl fmt::Display for TropicalRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.location, self.multiplicity)
    }
}

fn require_univariate(p: &TropicalPolynomial) -> Result<()> {
    if p.n_vars != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: p.n_vars,
        });
    }
    if p.is_empty() {
        return Err(Error::domain("polynomial has no terms"));
    }
    Ok(())
}

/// Vertices `(i, c_i)` of the upper concave hull, by increasing exponent.
fn upper_hull_1d(p: &TropicalPolynomial) -> Vec<(i64, Q)> {
    let pts: Vec<(i64, Q)> = p
        .terms
        .iter()
        .map(|(e, c)| (e[0] as i64, c.clone()))
        .collect();
    let mut hull: Vec<(i64, Q)> = Vec::new();
    for pt in pts {
        while hull.len() >= 2 {
            let (a, b) = (&hull[hull.len() - 2], &hull[hull.len() - 1]);
            // Drop b unless it lies strictly above the chord a -> pt.
            let lhs = (&b.1 - &a.1) * q(pt.0 - a.0);
            let rhs = (&pt.1 - &a.1) * q(b.0 - a.0);
            if lhs <= rhs {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull
}

/// Breakpoints of the graph with their slope changes, plus a root at `-inf`
/// whose multiplicity is the leftmost slope (when nonzero).
pub fn roots_univariate(p: &TropicalPolynomial) -> Result<Vec<TropicalRoot>> {
    require_univariate(p)?;
    let hull = upper_hull_1d(p);
    let mut roots = Vec::new();
    let lowest = hull[0].0;
    if lowest > 0 {
        roots.push(TropicalRoot {
            location: TropicalNumber::NegInf,
            multiplicity: lowest as u32,
        });
    }
    for w in hull.windows(2) {
        let ((i1, c1), (i2, c2)) = (&w[0], &w[1]);
        let x = -(c2 - c1) / q(i2 - i1);
        roots.push(TropicalRoot {
            location: TropicalNumber::Finite(x),
            multiplicity: (i2 - i1) as u32,
        });
    }
    Ok(roots)
}

/// `c ⊙ (x ⊕ a_1)^m_1 ⊙ ... ⊙ (x ⊕ a_k)^m_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    #[serde(with = "crate::rational::serde_q")]
    pub c: Q,
    pub roots: Vec<TropicalRoot>,
}

impl Factorization {
    pub fn expand(&self) -> TropicalPolynomial {
        let mut acc = TropicalPolynomial::constant(1, self.c.clone());
        for r in &self.roots {
            let mut lin = TropicalPolynomial::new(1);
            lin.insert(vec![1], TropicalNumber::one());
            lin.insert(vec![0], r.location.clone());
            for _ in 0..r.multiplicity {
                acc = trop_poly_mul(&acc, &lin).expect("univariate");
            }
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={}", fmt_q(&self.c))?;
        let parts: Vec<String> = self
            .roots
            .iter()
            .map(|r| format!("{}^{}", r.location, r.multiplicity))
            .collect();
        if parts.is_empty() {
            Ok(())
        } else {
            write!(f, "; root {}", parts.join(" "))
        }
    }
}

pub fn factor_univariate(p: &TropicalPolynomial) -> Result<Factorization> {
    let roots = roots_univariate(p)?;
    let c = p
        .terms
        .iter()
        .next_back()
        .map(|(_, c)| c.clone())
        .expect("nonempty");
    Ok(Factorization { c, roots })
}

/// Coefficient of `γ` is `max_{α+β=γ} c_α + c_β`.
pub fn trop_poly_mul(f: &TropicalPolynomial, g: &TropicalPolynomial) -> Result<TropicalPolynomial> {
    if f.n_vars != g.n_vars {
        return Err(Error::DimensionMismatch {
            expected: f.n_vars,
            got: g.n_vars,
        });
    }
    let mut out = TropicalPolynomial::new(f.n_vars);
    for (a, ca) in &f.terms {
        for (b, cb) in &g.terms {
            let e: Exponent = a.iter().zip(b).map(|(x, y)| x + y).collect();
            out.insert(e, TropicalNumber::Finite(ca + cb));
        }
    }
    Ok(out)
}

/// Value at `alpha` of the concave envelope of the lifted coefficients of
/// `p`, or `None` when `alpha` lies outside the Newton polytope.
pub fn envelope_at(p: &TropicalPolynomial, alpha: &[u32]) -> Option<Q> {
    let terms: Vec<(&Exponent, &Q)> = p.terms.iter().collect();
    let objective: Vec<Q> = terms.iter().map(|(_, c)| (*c).clone()).collect();
    let mut cons = Vec::with_capacity(p.n_vars + 1);
    for k in 0..p.n_vars {
        cons.push(Constraint {
            coeffs: terms.iter().map(|(e, _)| q(e[k] as i64)).collect(),
            rel: Relation::Eq,
            rhs: q(alpha[k] as i64),
        });
    }
    cons.push(Constraint {
        coeffs: vec![Q::one(); terms.len()],
        rel: Relation::Eq,
        rhs: Q::one(),
    });
    match maximize(&objective, &cons) {
        LpOutcome::Optimal { value, .. } => Some(value),
        _ => None,
    }
}

/// `p <= q` pointwise as functions.
fn dominated_by(p: &TropicalPolynomial, other: &TropicalPolynomial) -> bool {
    p.terms
        .iter()
        .all(|(e, c)| matches!(envelope_at(other, e), Some(v) if v >= *c))
}

/// Equality of the functions defined by two polynomials.
pub fn function_equal(p: &TropicalPolynomial, other: &TropicalPolynomial) -> Result<bool> {
    if p.n_vars != other.n_vars {
        return Err(Error::DimensionMismatch {
            expected: p.n_vars,
            got: other.n_vars,
        });
    }
    Ok(dominated_by(p, other) && dominated_by(other, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    fn p(s: &str) -> TropicalPolynomial {
        TropicalPolynomial::parse(s).unwrap()
    }

    #[test]
    fn parse_univariate_forms() {
        let a = p("x^2 (+) 2(*)x (+) -1");
        assert_eq!(a.n_vars(), 1);
        assert_eq!(a.coefficient(&[2]), TropicalNumber::int(0));
        assert_eq!(a.coefficient(&[1]), TropicalNumber::int(2));
        assert_eq!(a.coefficient(&[0]), TropicalNumber::int(-1));
        assert_eq!(p("max(2x, x+2, -1)"), a);
        assert_eq!(p("0"), TropicalPolynomial::constant(1, q(0)));
        assert_eq!(a.to_string(), "x^2 (+) 2(*)x (+) -1");
    }

    #[test]
    fn parse_bivariate_and_canonical_output() {
        let quad = p("1(*)x^2 (+) 1(*)y^2 (+) 2(*)xy (+) 2(*)x (+) 2(*)y (+) 1");
        assert_eq!(quad.n_vars(), 2);
        assert_eq!(quad.len(), 6);
        assert_eq!(quad.degree(), Some(2));
        assert_eq!(
            quad.to_string(),
            "1(*)x^2 (+) 2(*)xy (+) 1(*)y^2 (+) 2(*)x (+) 2(*)y (+) 1"
        );
        assert_eq!(p(&quad.to_string()), quad);
        let frac = p("(-1/2)(*)x^2 (+) x(*)y (+) 0");
        assert_eq!(frac.coefficient(&[2, 0]), TropicalNumber::Finite(qf(-1, 2)));
        assert_eq!(frac.coefficient(&[1, 1]), TropicalNumber::int(0));
        assert_eq!(
            p("max(x + y + 1/2, 0)").coefficient(&[1, 1]),
            TropicalNumber::Finite(qf(1, 2))
        );
    }

    #[test]
    fn repeated_monomials_keep_max() {
        assert_eq!(
            p("1(*)x (+) 3(*)x (+) 2(*)x").coefficient(&[1]),
            TropicalNumber::int(3)
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        match TropicalPolynomial::parse("x (+) 2(*)") {
            Err(Error::Parse { pos, .. }) => assert!(pos >= 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            TropicalPolynomial::parse("max(-x, 0)"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            TropicalPolynomial::parse("x^-1"),
            Err(Error::Parse { .. })
        ));
        assert!(TropicalPolynomial::parse("x (+) w").is_err());
        assert!(TropicalPolynomial::parse("1/0").is_err());
    }

    #[test]
    fn evaluation_and_vanishing() {
        let line = p("x (+) y (+) 0");
        let (v, arg) = line.evaluate(&[q(0), q(0)]).unwrap();
        assert_eq!(v, TropicalNumber::int(0));
        assert_eq!(arg.len(), 3);
        assert!(line.vanishes_at(&[q(5), q(5)]).unwrap());
        assert!(!line.vanishes_at(&[q(-1), q(-2)]).unwrap());
        let uni = p("x^2 (+) 2(*)x (+) -1");
        let (v, arg) = uni.evaluate(&[q(-3)]).unwrap();
        assert_eq!(v, TropicalNumber::int(-1));
        assert_eq!(arg, vec![vec![0], vec![1]]);
        let c = p("7");
        assert_eq!(
            c.evaluate(&[q(100)]).unwrap(),
            (TropicalNumber::int(7), vec![vec![0]])
        );
        assert!(!p("3(*)x^2y").vanishes_at(&[q(1), q(9)]).unwrap());
        assert!(matches!(
            line.evaluate(&[q(0)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn univariate_roots() {
        let r = roots_univariate(&p("x^2 (+) 2(*)x (+) -1")).unwrap();
        assert_eq!(
            r,
            vec![
                TropicalRoot {
                    location: TropicalNumber::int(-3),
                    multiplicity: 1
                },
                TropicalRoot {
                    location: TropicalNumber::int(2),
                    multiplicity: 1
                },
            ]
        );
        let r = roots_univariate(&p("x^2 (+) 0")).unwrap();
        assert_eq!(
            r,
            vec![TropicalRoot {
                location: TropicalNumber::int(0),
                multiplicity: 2
            }]
        );
        let r = roots_univariate(&p("x")).unwrap();
        assert_eq!(
            r,
            vec![TropicalRoot {
                location: TropicalNumber::NegInf,
                multiplicity: 1
            }]
        );
    }

    #[test]
    fn factorizations() {
        let f = p("x^2 (+) 2(*)x (+) -1");
        let fac = factor_univariate(&f).unwrap();
        assert_eq!(fac.c, q(0));
        assert_eq!(fac.expand(), f);
        let g = p("x^2 (+) -100(*)x (+) 0");
        let fac = factor_univariate(&g).unwrap();
        assert_eq!(
            fac.roots,
            vec![TropicalRoot {
                location: TropicalNumber::int(0),
                multiplicity: 2
            }]
        );
        assert!(function_equal(&fac.expand(), &g).unwrap());
        let h = p("5(*)x");
        let fac = factor_univariate(&h).unwrap();
        assert_eq!(fac.to_string(), "c=5; root -inf^1");
        assert_eq!(fac.expand(), h);
    }

    #[test]
    fn products() {
        let a = p("x (+) -3");
        let b = p("x (+) 2");
        assert_eq!(trop_poly_mul(&a, &b).unwrap(), p("x^2 (+) 2(*)x (+) -1"));
        let f = p("x (+) y");
        let one = TropicalPolynomial::constant(2, q(0));
        assert_eq!(trop_poly_mul(&f, &one).unwrap(), f);
        let g = p("x (+) 0").with_n_vars(2).unwrap();
        assert_eq!(trop_poly_mul(&f, &g).unwrap(), p("x^2 (+) xy (+) x (+) y"));
    }

    #[test]
    fn function_equality() {
        let a = p("x^2 (+) 0");
        assert!(function_equal(&a, &p("x^2 (+) -100(*)x (+) 0")).unwrap());
        assert!(!function_equal(&a, &p("x^2 (+) 1(*)x (+) 0")).unwrap());
        assert!(function_equal(&a, &a).unwrap());
        assert!(!function_equal(&a, &p("x^3 (+) 0")).unwrap());
        let quad = p("x^2 (+) y^2 (+) 0");
        assert!(function_equal(&quad, &p("x^2 (+) y^2 (+) -5(*)xy (+) 0")).unwrap());
    }
}
