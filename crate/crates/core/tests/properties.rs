mod support;

use support::*;

#[test]
fn semiring() {
    semiring_axioms(CASES, 1).unwrap();
}

#[test]
fn p_adic_valuation() {
    val_p_axioms(CASES, 2).unwrap();
}

#[test]
fn series_valuation() {
    series_val_axioms(CASES, 3).unwrap();
}

#[test]
fn product_hypersurface_is_union() {
    union_membership(CASES, 4).unwrap();
}

#[test]
fn curves_are_balanced() {
    balancing(CASES, 5).unwrap();
}

#[test]
fn certificates_ignore_labels() {
    certificate_invariance(CASES, 6).unwrap();
}
