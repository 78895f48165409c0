//! Skeletons of tropical curves as metric graphs, their isomorphism classes,
//! and the census of troplanar graphs.

mod canon;
mod census;
mod graph;

pub use canon::{canonical_certificate, MAX_CERTIFICATE_VERTICES};
pub use census::{
    curve_polynomial, triangulation_skeleton, troplanar_census, CensusConfig, CensusRecord,
    ClassRecord, PolygonRecord, DEFAULT_CENSUS_MAX_GENUS,
};
pub use graph::{
    lattice_length, named, skeletonize, skeletonize_embedded, skeletonize_space_curve, MetricEdge,
    MetricGraph,
};
