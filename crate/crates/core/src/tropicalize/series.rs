//! p-adic valuations and truncated Puiseux series with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, Q};

/// Largest exponent denominator accepted by default.
pub const DEFAULT_MAX_RAMIFICATION: u64 = 1 << 20;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Exponent of the prime `p` in `q`; `None` for `q = 0`.
pub fn val_p(q: &Q, p: u64) -> Result<Option<i64>> {
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if q.is_zero() {
        return Ok(None);
    }
    let p = BigInt::from(p);
    let count = |mut n: BigInt| {
        let mut k = 0i64;
        loop {
            let (d, r) = n.div_rem(&p);
            if !r.is_zero() {
                return k;
            }
            n = d;
            k += 1;
        }
    };
    Ok(Some(count(q.numer().clone()) - count(q.denom().clone())))
}

/// `Σ c_e t^e` over finitely many rational exponents, known exactly or up
/// to `O(t^precision)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Puiseux {
    terms: BTreeMap<Q, Q>,
    precision: Option<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesValuation {
    Finite(Q),
    /// The exact zero series.
    Infinite,
    /// Every known term vanished below the truncation order.
    AtLeast(Q),
}

impl Puiseux {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, Q::zero())
    }

    pub fn monomial(c: Q, e: Q) -> Self {
        let mut s = Self::zero();
        if !c.is_zero() {
            s.terms.insert(e, c);
        }
        s
    }

    /// `O(t^k)`: an unknown series of valuation at least `k`.
    pub fn big_o(k: Q) -> Self {
        Self {
            terms: BTreeMap::new(),
            precision: Some(k),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Q, Q)>, precision: Option<Q>) -> Self {
        let mut s = Self {
            terms: BTreeMap::new(),
            precision,
        };
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s.truncate();
        s
    }

    fn add_term(&mut self, e: Q, c: Q) {
        let v = self.terms.entry(e.clone()).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn truncate(&mut self) {
        if let Some(p) = &self.precision {
            self.terms.retain(|e, _| e < p);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Q, &Q)> {
        self.terms.iter()
    }

    pub fn precision(&self) -> Option<&Q> {
        self.precision.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// Exactly zero (not merely zero up to the truncation order).
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.precision.is_none()
    }

    /// Least common denominator of the exponents.
    pub fn ramification(&self) -> BigInt {
        self.terms
            .keys()
            .chain(&self.precision)
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }

    pub fn valuation(&self) -> SeriesValuation {
        match (self.terms.keys().next(), &self.precision) {
            (Some(e), _) => SeriesValuation::Finite(e.clone()),
            (None, None) => SeriesValuation::Infinite,
            (None, Some(p)) => SeriesValuation::AtLeast(p.clone()),
        }
    }

    /// Lower bound on the valuation, `None` for the exact zero.
    fn order(&self) -> Option<Q> {
        self.terms
            .keys()
            .next()
            .cloned()
            .or_else(|| self.precision.clone())
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            precision: self.precision.clone(),
        }
    }

    /// Multiplies every exponent by `k` (substitution `t -> t^k`, `k > 0`).
    pub fn scale_exponents(&self, k: &Q) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
            precision: self.precision.as_ref().map(|p| p * k),
        }
    }
}

fn min_opt(a: Option<Q>, b: Option<Q>) -> Option<Q> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, None) => a,
        (None, b) => b,
    }
}

fn check_ramification(s: Puiseux, bound: u64) -> Result<Puiseux> {
    if s.ramification() > BigInt::from(bound) {
        return Err(Error::domain(format!(
            "exponent denominators exceed the ramification bound {bound}"
        )));
    }
    Ok(s)
}

pub fn series_add(a: &Puiseux, b: &Puiseux) -> Result<Puiseux> {
    let mut s = Puiseux {
        terms: a.terms.clone(),
        precision: min_opt(a.precision.clone(), b.precision.clone()),
    };
    for (e, c) in &b.terms {
        s.add_term(e.clone(), c.clone());
    }
    s.truncate();
    check_ramification(s, DEFAULT_MAX_RAMIFICATION)
}

pub fn series_mul(a: &Puiseux, b: &Puiseux) -> Result<Puiseux> {
    series_mul_bounded(a, b, DEFAULT_MAX_RAMIFICATION)
}

/// Product, rejecting results whose exponent denominators exceed `bound`.
pub fn series_mul_bounded(a: &Puiseux, b: &Puiseux, bound: u64) -> Result<Puiseux> {
    if a.is_zero() || b.is_zero() {
        return Ok(Puiseux::zero());
    }
    // Unknown tails contribute from (precision of one) + (order of the other).
    let tail = |x: &Puiseux, y: &Puiseux| {
        x.precision
            .as_ref()
            .map(|p| p + y.order().expect("nonzero"))
    };
    let precision = min_opt(tail(a, b), tail(b, a));
    let mut s = Puiseux {
        terms: BTreeMap::new(),
        precision,
    };
    for (e1, c1) in &a.terms {
        for (e2, c2) in &b.terms {
            s.add_term(e1 + e2, c1 * c2);
        }
    }
    s.truncate();
    check_ramification(s, bound)
}

pub fn series_pow(a: &Puiseux, k: u32) -> Result<Puiseux> {
    let mut out = Puiseux::constant(Q::one());
    for _ in 0..k {
        out = series_mul(&out, a)?;
    }
    Ok(out)
}

/// Valuation of a series: least exponent, or infinity for zero.
pub fn series_val(s: &Puiseux) -> SeriesValuation {
    s.valuation()
}

fn fmt_exp(e: &Q) -> String {
    if e.is_integer() && !e.is_negative() {
        fmt_q(e)
    } else {
        format!("({})", fmt_q(e))
    }
}

impl fmt::Display for Puiseux {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (e, c) in &self.terms {
            let mag = c.abs();
            let body = match (e.is_zero(), mag.is_one()) {
                (true, _) => fmt_q(&mag),
                (false, true) if e.is_one() => "t".to_string(),
                (false, true) => format!("t^{}", fmt_exp(e)),
                (false, false) if e.is_one() => format!("{}*t", fmt_q(&mag)),
                (false, false) => format!("{}*t^{}", fmt_q(&mag), fmt_exp(e)),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            parts.push(if parts.is_empty() && sign == "+" {
                body
            } else {
                format!("{sign} {body}")
            });
        }
        if let Some(p) = &self.precision {
            let o = if p.is_one() {
                "O(t)".to_string()
            } else {
                format!("O(t^{})", fmt_exp(p))
            };
            parts.push(if parts.is_empty() {
                o
            } else {
                format!("+ {o}")
            });
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let s = parts.join(" ");
        write!(
            f,
            "{}",
            s.strip_prefix("- ").map(|r| format!("-{r}")).unwrap_or(s)
        )
    }
}
