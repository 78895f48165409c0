mod support;

use support::random::{intersection_oracles, smooth_curves};

#[test]
fn random_smooth_curves_match_triangulation_counts() {
    assert_eq!(smooth_curves(11, 4, 8).unwrap(), 32);
}

#[test]
fn perturbation_agrees_with_mixed_cells() {
    intersection_oracles(12, 150).unwrap();
}
