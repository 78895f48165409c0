//! Valuations, Puiseux series, and tropicalization of classical polynomials.

mod series;
mod valued;

pub use series::{
    series_add, series_mul, series_mul_bounded, series_pow, series_val, val_p, Puiseux,
    SeriesValuation, DEFAULT_MAX_RAMIFICATION,
};
pub use valued::{check_witness, tropicalize_poly, ValuedPolynomial, WitnessReport, WitnessStatus};
