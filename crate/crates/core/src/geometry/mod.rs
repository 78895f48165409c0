//! Lattice polytopes, regular subdivisions and lattice polygons.

pub mod hull;
pub mod linalg;
pub mod maximal;
pub mod polygon;
pub mod subdivision;
pub mod triangulation;

pub use subdivision::{
    cayley, is_regular, is_unimodular, newton_polytope, regular_subdivision, AffineFunctional,
    PointConfiguration, Regularity, Subdivision,
};
