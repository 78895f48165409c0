//! Max-plus arithmetic on `Q ∪ {-inf}` and max-plus linear algebra.
//!
//! Conventions: `a ⊕ b = max(a, b)`, `a ⊙ b = a + b`, `-inf` is the additive
//! identity and `0` the multiplicative one. The tropical eigenvalue is the
//! maximum cycle mean of the weighted digraph of a matrix (the max-plus dual of
//! the shortest-mean-cycle formulation used with the min convention).

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{fmt_q, parse_q, q, Q};

/// An element of the tropical semiring. `NegInf` sorts below every rational.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropicalNumber {
    NegInf,
    Finite(Q),
}

pub use TropicalNumber::{Finite, NegInf};

impl TropicalNumber {
    pub fn int(n: i64) -> Self {
        Finite(q(n))
    }

    pub fn zero() -> Self {
        NegInf
    }

    pub fn one() -> Self {
        Finite(Q::zero())
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, NegInf)
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            Finite(x) => Some(x),
            NegInf => None,
        }
    }

    /// Multiplicative inverse; `None` for `-inf`.
    pub fn inverse(&self) -> Option<Self> {
        self.finite().map(|x| Finite(-x))
    }
}

impl From<Q> for TropicalNumber {
    fn from(x: Q) -> Self {
        Finite(x)
    }
}

impl From<i64> for TropicalNumber {
    fn from(n: i64) -> Self {
        Finite(q(n))
    }
}

pub fn trop_add(a: &TropicalNumber, b: &TropicalNumber) -> TropicalNumber {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn trop_mul(a: &TropicalNumber, b: &TropicalNumber) -> TropicalNumber {
    match (a, b) {
        (Finite(x), Finite(y)) => Finite(x + y),
        _ => NegInf,
    }
}

impl fmt::Display for TropicalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => f.write_str("-inf"),
            Finite(x) => f.write_str(&fmt_q(x)),
        }
    }
}

impl FromStr for TropicalNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" | "-∞" => Ok(NegInf),
            t => parse_q(t).map(Finite),
        }
    }
}

impl Serialize for TropicalNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TropicalNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

/// Dense row-major matrix over the tropical semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropicalNumber>,
}

impl TropicalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<TropicalNumber>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::domain("matrix dimensions must be positive"));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<TropicalNumber>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                got: bad.len(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from integers, with `None` for `-inf`.
    pub fn from_ints(rows: &[&[Option<i64>]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|e| e.map_or(NegInf, TropicalNumber::from))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![NegInf; n * n];
        for i in 0..n {
            entries[i * n + i] = TropicalNumber::one();
        }
        Self {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TropicalNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<TropicalNumber>> {
        self.entries.chunks(self.cols).map(<[_]>::to_vec).collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }
}

impl Serialize for TropicalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TropicalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<TropicalNumber>>::deserialize(d)?;
        TropicalMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for TropicalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.cols) {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &TropicalMatrix, b: &TropicalMatrix) -> Result<TropicalMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            expected: a.cols,
            got: b.rows,
        });
    }
    let mut entries = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let v = (0..a.cols)
                .map(|k| trop_mul(a.get(i, k), b.get(k, j)))
                .fold(NegInf, |acc, x| trop_add(&acc, &x));
            entries.push(v);
        }
    }
    TropicalMatrix::new(a.rows, b.cols, entries)
}

/// Tropical determinant (max-plus permanent) with a singularity flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Determinant {
    pub value: TropicalNumber,
    /// The maximum is attained by at least two permutations.
    pub singular: bool,
}

/// `max_σ Σ_i A(i, σ(i))`, by dynamic programming over column subsets.
pub fn trop_det(a: &TropicalMatrix) -> Result<Determinant> {
    let n = a.require_square()?;
    if n > 20 {
        return Err(Error::BudgetExceeded(format!(
            "tropical determinant limited to n <= 20 (got {n})"
        )));
    }
    // best[mask] = (value, number of optimal partial assignments capped at 2)
    // for rows 0..popcount(mask) assigned to the columns in mask.
    let mut best: Vec<(TropicalNumber, u8)> = vec![(NegInf, 0); 1 << n];
    best[0] = (TropicalNumber::one(), 1);
    for mask in 0usize..(1 << n) {
        let (val, count) = best[mask].clone();
        if count == 0 {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 {
                continue;
            }
            let entry = a.get(row, col);
            if entry.is_neg_inf() {
                continue;
            }
            let cand = trop_mul(&val, entry);
            let slot = &mut best[mask | (1 << col)];
            if slot.1 == 0 || cand > slot.0 {
                *slot = (cand, count);
            } else if cand == slot.0 {
                slot.1 = (slot.1 + count).min(2);
            }
        }
    }
    let (value, count) = best[(1 << n) - 1].clone();
    Ok(Determinant {
        singular: count >= 2,
        value: if count == 0 { NegInf } else { value },
    })
}

/// Maximum cycle mean of the digraph with arc `i -> j` of weight `A(i, j)`
/// (Karp's algorithm with every node as a source).
pub fn trop_eigenvalue(a: &TropicalMatrix) -> Result<Q> {
    let n = a.require_square()?;
    // walk[k][v]: max weight of a k-arc walk ending at v.
    let mut walk: Vec<Vec<TropicalNumber>> = vec![vec![TropicalNumber::one(); n]];
    for k in 1..=n {
        let prev = &walk[k - 1];
        let next: Vec<TropicalNumber> = (0..n)
            .map(|v| {
                (0..n)
                    .map(|u| trop_mul(&prev[u], a.get(u, v)))
                    .fold(NegInf, |acc, x| trop_add(&acc, &x))
            })
            .collect();
        walk.push(next);
    }
    let mut best: Option<Q> = None;
    for v in 0..n {
        let Finite(last) = &walk[n][v] else { continue };
        let mut worst: Option<Q> = None;
        for (k, row) in walk.iter().enumerate().take(n) {
            let Finite(wk) = &row[v] else { continue };
            let mean = (last - wk) / q((n - k) as i64);
            worst = Some(match worst {
                Some(w) if w <= mean => w,
                _ => mean,
            });
        }
        if let Some(w) = worst {
            best = Some(match best {
                Some(b) if b >= w => b,
                _ => w,
            });
        }
    }
    best.ok_or(Error::NoEigenvalue)
}
