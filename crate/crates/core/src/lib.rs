//! Exact tropical arithmetic and tropical geometry over the rationals.

pub mod budget;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod hypersurface;
pub mod intersection;
pub mod lp;
pub mod polynomial;
pub mod rational;
pub mod render;
pub mod semiring;
pub mod skeleton;
pub mod tropicalize;

pub use error::{Error, Result};
pub use polynomial::{TropicalPolynomial, TropicalRoot};
pub use rational::Q;
pub use semiring::TropicalNumber;
