//! Polynomials with Puiseux-series coefficients, their tropicalization, and
//! verification of supplied solutions.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::series::{series_add, series_mul, series_pow, Puiseux, SeriesValuation};
use crate::error::{Error, Result};
use crate::polynomial::TropicalPolynomial;
use crate::rational::{serde_q, Q};
use crate::semiring::TropicalNumber;

const VARS: [char; 3] = ['x', 'y', 'z'];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedPolynomial {
    n_vars: usize,
    terms: BTreeMap<Vec<u32>, Puiseux>,
}

impl Puiseux {
    /// Parses a lone series such as `1 - t^(1/2) + O(t^3)`.
    pub fn parse(text: &str) -> Result<Self> {
        let p = ValuedPolynomial::parse(text)?;
        if p.terms().any(|(e, _)| e.iter().any(|&k| k > 0)) {
            return Err(Error::parse(0, "a series cannot contain variables"));
        }
        let c = p.terms().next().map(|(_, c)| c.clone());
        Ok(c.unwrap_or_default())
    }
}

impl ValuedPolynomial {
    pub fn zero(n_vars: usize) -> Self {
        Self {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Puiseux) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(vec![0; n_vars], c).expect("constant term");
        p
    }

    pub fn variable(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        let mut p = Self::zero(n_vars);
        p.add_term(e, Puiseux::constant(Q::one()))
            .expect("variable term");
        p
    }

    pub fn from_terms(
        n_vars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Puiseux)>,
    ) -> Result<Self> {
        let mut p = Self::zero(n_vars);
        for (e, c) in terms {
            if e.len() != n_vars {
                return Err(Error::DimensionMismatch {
                    expected: n_vars,
                    got: e.len(),
                });
            }
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Puiseux) -> Result<()> {
        let sum = match self.terms.get(&e) {
            Some(old) => series_add(old, &c)?,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, sum);
        }
        Ok(())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Puiseux)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone())?;
        }
        Ok(p)
    }

    pub fn neg(&self) -> Self {
        Self {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let mut p = Self::zero(self.n_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, series_mul(c1, c2)?)?;
            }
        }
        Ok(p)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut p = Self::constant(self.n_vars, Puiseux::constant(Q::one()));
        for _ in 0..k {
            p = p.mul(self)?;
        }
        Ok(p)
    }

    fn with_n_vars(&self, n: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.resize(n, 0);
                (e, c.clone())
            })
            .collect();
        Self { n_vars: n, terms }
    }

    /// `f(point)` by exact series arithmetic.
    pub fn evaluate(&self, point: &[Puiseux]) -> Result<Puiseux> {
        if point.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                got: point.len(),
            });
        }
        let mut acc = Puiseux::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (s, &k) in point.iter().zip(e) {
                m = series_mul(&m, &series_pow(s, k)?)?;
            }
            acc = series_add(&acc, &m)?;
        }
        Ok(acc)
    }

    /// Parses sums of products of rationals, `t` with rational powers,
    /// variables `x`, `y`, `z`, parentheses and `O(t^k)`; e.g.
    /// `(2 + t^(1/2))*x^2 - 3t*y + 1 + O(t^4)`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser {
            s: text.as_bytes(),
            pos: 0,
        };
        let v = p.expr()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        let used = v
            .terms
            .keys()
            .flat_map(|e| {
                e.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, _)| i + 1)
            })
            .max();
        Ok(v.with_n_vars(used.unwrap_or(1)))
    }

    pub fn parse_in(text: &str, n_vars: usize) -> Result<Self> {
        let p = Self::parse(text)?;
        if p.n_vars > n_vars {
            return Err(Error::DimensionMismatch {
                expected: n_vars,
                got: p.n_vars,
            });
        }
        Ok(p.with_n_vars(n_vars))
    }
}

impl fmt::Display for ValuedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            VARS[i].to_string()
                        } else {
                            format!("{}^{k}", VARS[i])
                        }
                    })
                    .collect();
                match (mono.is_empty(), *c == Puiseux::constant(Q::one())) {
                    (true, _) => format!("({c})"),
                    (false, true) => mono.join("*"),
                    (false, false) => format!("({c})*{}", mono.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

/// Three variables while parsing; trimmed afterwards.
const PARSE_VARS: usize = 3;

impl Parser<'_> {
    fn ws(&mut self) {
        while self
            .s
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::parse(self.pos, msg))
    }

    fn expr(&mut self) -> Result<ValuedPolynomial> {
        let mut acc = ValuedPolynomial::zero(PARSE_VARS);
        let mut first = true;
        loop {
            let negate = if self.eat(b'-') {
                true
            } else if self.eat(b'+') || first {
                false
            } else {
                return Ok(acc);
            };
            first = false;
            let t = self.term()?;
            acc = acc.add(&if negate { t.neg() } else { t })?;
        }
    }

    fn term(&mut self) -> Result<ValuedPolynomial> {
        let mut acc = self.factor()?;
        loop {
            let starred = self.eat(b'*');
            match self.peek() {
                Some(b'0'..=b'9' | b'(' | b't' | b'x' | b'y' | b'z' | b'O') => {
                    acc = acc.mul(&self.factor()?)?
                }
                _ if starred => return self.err("expected a factor after '*'"),
                _ => return Ok(acc),
            }
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .expect("ascii")
            .parse()
            .or_else(|_| self.err("number too large"))
    }

    fn rational(&mut self) -> Result<Q> {
        let neg = self.eat(b'-');
        let n = self.uint()?;
        let d = if self.eat(b'/') { self.uint()? } else { 1 };
        if d == 0 {
            return self.err("zero denominator");
        }
        let q = Q::new(n.into(), d.into());
        Ok(if neg { -q } else { q })
    }

    fn exponent(&mut self) -> Result<Q> {
        if self.eat(b'(') {
            let e = self.rational()?;
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            Ok(e)
        } else {
            let neg = self.eat(b'-');
            let e = Q::from_integer(self.uint()?.into());
            Ok(if neg { -e } else { e })
        }
    }

    fn int_power(&mut self) -> Result<u32> {
        let e = self.exponent()?;
        if !e.is_integer() || e < Q::zero() {
            return self.err("only t takes fractional or negative powers");
        }
        e.to_integer()
            .try_into()
            .or_else(|_| self.err("power too large"))
    }

    fn series(c: Puiseux) -> ValuedPolynomial {
        ValuedPolynomial::constant(PARSE_VARS, c)
    }

    fn factor(&mut self) -> Result<ValuedPolynomial> {
        let base = match self.peek() {
            Some(b'0'..=b'9') => {
                let n = self.uint()?;
                // `a/b` is a rational literal only when a digit follows the slash.
                let save = self.pos;
                let d = if self.eat(b'/') && self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.uint()?
                } else {
                    self.pos = save;
                    1
                };
                if d == 0 {
                    return self.err("zero denominator");
                }
                Self::series(Puiseux::constant(Q::new(n.into(), d.into())))
            }
            Some(b't') => {
                self.pos += 1;
                let e = if self.eat(b'^') {
                    self.exponent()?
                } else {
                    Q::one()
                };
                return Ok(Self::series(Puiseux::monomial(Q::one(), e)));
            }
            Some(b'O') => {
                self.pos += 1;
                if !(self.eat(b'(') && self.eat(b't')) {
                    return self.err("expected O(t^k)");
                }
                let k = if self.eat(b'^') {
                    self.exponent()?
                } else {
                    Q::one()
                };
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                return Ok(Self::series(Puiseux::big_o(k)));
            }
            Some(c @ (b'x' | b'y' | b'z')) => {
                self.pos += 1;
                ValuedPolynomial::variable(PARSE_VARS, (c - b'x') as usize)
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                e
            }
            _ => return self.err("expected a number, t, a variable or '('"),
        };
        if self.eat(b'^') {
            let k = self.int_power()?;
            return base.pow(k);
        }
        Ok(base)
    }
}

/// `⊕_α (−val c_α) ⊙ x^α`.
pub fn tropicalize_poly(f: &ValuedPolynomial) -> Result<TropicalPolynomial> {
    if f.is_zero() {
        return Err(Error::domain("the zero polynomial has no tropicalization"));
    }
    let mut terms = Vec::new();
    for (e, c) in f.terms() {
        match c.valuation() {
            SeriesValuation::Finite(v) => terms.push((e.clone(), TropicalNumber::Finite(-v))),
            SeriesValuation::Infinite => {}
            SeriesValuation::AtLeast(k) => {
                return Err(Error::domain(format!(
                    "a coefficient is only known to be O(t^{k}); its valuation is unknown"
                )))
            }
        }
    }
    TropicalPolynomial::from_terms(f.n_vars(), terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessStatus {
    /// `f(solution) = 0` exactly.
    Root,
    /// A nonzero term of `f(solution)` is known.
    NotARoot,
    /// Every known term cancels, but truncation hides the rest.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub status: WitnessStatus,
    /// `(−val s_1, …, −val s_n)`.
    #[serde(with = "serde_q::vec")]
    pub image: Vec<Q>,
    pub on_tropical_hypersurface: bool,
    pub tropicalization: TropicalPolynomial,
}

impl WitnessReport {
    pub fn holds(&self) -> bool {
        self.status == WitnessStatus::Root && self.on_tropical_hypersurface
    }
}

/// Checks that `solution` is a root of `f` and that its image under `−val`
/// lies on the tropical hypersurface of `trop(f)`.
pub fn check_witness(f: &ValuedPolynomial, solution: &[Puiseux]) -> Result<WitnessReport> {
    let mut image = Vec::with_capacity(solution.len());
    for s in solution {
        match s.valuation() {
            SeriesValuation::Finite(v) => image.push(-v),
            _ => {
                return Err(Error::domain(format!(
                    "solution coordinate {s} has no known valuation"
                )))
            }
        }
    }
    let value = f.evaluate(solution)?;
    let status = if value.is_zero() {
        WitnessStatus::Root
    } else if value.terms().next().is_some() {
        WitnessStatus::NotARoot
    } else {
        WitnessStatus::Inconclusive
    };
    let tropicalization = tropicalize_poly(f)?;
    let on_tropical_hypersurface = tropicalization.vanishes_at(&image)?;
    Ok(WitnessReport {
        status,
        image,
        on_tropical_hypersurface,
        tropicalization,
    })
}
