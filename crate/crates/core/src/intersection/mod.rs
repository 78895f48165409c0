//! Stable intersections of plane curves and space curves cut out by two surfaces.

mod piece;
mod plane;
mod space;

pub use plane::{
    bezout_sum, detect_tangencies, mixed_cell_intersection, perturbation_direction,
    stable_intersection, stable_intersection_along, transversal_multiplicity, Component,
    IntersectionPoint, Shape,
};
pub use space::{smooth_space_curve_counts, space_curve, SpaceCurve};
