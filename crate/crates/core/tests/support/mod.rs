//! Seeded property suites shared by the property tests and the acceptance run.
#![allow(dead_code)]

pub mod random;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};

use tropical::hypersurface::{build_curve, check_balancing};
use tropical::polynomial::trop_poly_mul;
use tropical::rational::{q, qf, Q};
use tropical::semiring::{trop_add, trop_mul, TropicalNumber};
use tropical::skeleton::{canonical_certificate, MetricGraph};
use tropical::tropicalize::{series_add, series_mul, series_val, val_p, Puiseux, SeriesValuation};
use tropical::TropicalPolynomial;

pub const CASES: u32 = 10_000;

pub fn runner(cases: u32, seed: u64) -> TestRunner {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes))
}

fn report<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn small_q() -> impl Strategy<Value = Q> {
    (-60i64..60, 1i64..7).prop_map(|(n, d)| qf(n, d))
}

pub fn trop_number() -> impl Strategy<Value = TropicalNumber> {
    prop_oneof![1 => Just(TropicalNumber::NegInf), 6 => small_q().prop_map(TropicalNumber::Finite)]
}

pub fn semiring_axioms(cases: u32, seed: u64) -> Result<(), String> {
    let zero = TropicalNumber::zero();
    let one = TropicalNumber::one();
    report(runner(cases, seed).run(
        &(trop_number(), trop_number(), trop_number()),
        |(a, b, c)| {
            prop_assert_eq!(trop_add(&a, &b), trop_add(&b, &a));
            prop_assert_eq!(trop_mul(&a, &b), trop_mul(&b, &a));
            prop_assert_eq!(
                trop_add(&trop_add(&a, &b), &c),
                trop_add(&a, &trop_add(&b, &c))
            );
            prop_assert_eq!(
                trop_mul(&trop_mul(&a, &b), &c),
                trop_mul(&a, &trop_mul(&b, &c))
            );
            prop_assert_eq!(
                trop_mul(&a, &trop_add(&b, &c)),
                trop_add(&trop_mul(&a, &b), &trop_mul(&a, &c))
            );
            prop_assert_eq!(trop_add(&a, &zero), a.clone());
            prop_assert_eq!(trop_mul(&a, &one), a.clone());
            prop_assert_eq!(trop_mul(&a, &zero), zero.clone());
            prop_assert_eq!(trop_add(&a, &a), a.clone());
            if let Some(inv) = a.inverse() {
                prop_assert_eq!(trop_mul(&a, &inv), one.clone());
            }
            Ok(())
        },
    ))
}

fn nonzero_q() -> impl Strategy<Value = Q> {
    (prop_oneof![-5000i64..-1, 1i64..5000], 1i64..5000).prop_map(|(n, d)| qf(n, d))
}

pub fn val_p_axioms(cases: u32, seed: u64) -> Result<(), String> {
    let primes = prop::sample::select(vec![2u64, 3, 5, 7, 11]);
    report(
        runner(cases, seed).run(&(nonzero_q(), nonzero_q(), primes), |(a, b, p)| {
            let v = |x: &Q| val_p(x, p).unwrap();
            let (va, vb) = (v(&a).unwrap(), v(&b).unwrap());
            prop_assert_eq!(v(&(&a * &b)), Some(va + vb));
            let s = &a + &b;
            match v(&s) {
                None => prop_assert_eq!(s, q(0)),
                Some(vs) => prop_assert!(vs >= va.min(vb)),
            }
            prop_assert_eq!(v(&q(0)), None);
            Ok(())
        }),
    )
}

pub fn exact_series() -> impl Strategy<Value = Puiseux> {
    prop::collection::vec((prop_oneof![-4i64..-1, 1i64..4], -6i64..6, 1i64..4), 0..4)
        .prop_map(|ts| Puiseux::from_terms(ts.into_iter().map(|(c, n, d)| (qf(n, d), q(c))), None))
}

fn value(s: &Puiseux) -> Option<Q> {
    match series_val(s) {
        SeriesValuation::Finite(v) => Some(v),
        SeriesValuation::Infinite => None,
        SeriesValuation::AtLeast(_) => panic!("exact series"),
    }
}

pub fn series_val_axioms(cases: u32, seed: u64) -> Result<(), String> {
    report(
        runner(cases, seed).run(&(exact_series(), exact_series()), |(a, b)| {
            let (va, vb) = (value(&a), value(&b));
            let prod = value(&series_mul(&a, &b).unwrap());
            match (&va, &vb) {
                (Some(x), Some(y)) => prop_assert_eq!(prod, Some(x + y)),
                _ => prop_assert_eq!(prod, None),
            }
            let sum = value(&series_add(&a, &b).unwrap());
            match (&va, &vb) {
                (Some(x), Some(y)) if x != y => prop_assert_eq!(sum, Some(x.min(y).clone())),
                (Some(x), Some(_)) => prop_assert!(sum.map_or(true, |s| s >= *x)),
                (None, _) => prop_assert_eq!(sum, vb.clone()),
                (_, None) => prop_assert_eq!(sum, va.clone()),
            }
            Ok(())
        }),
    )
}

/// A bivariate polynomial of degree at most `d` with at least three terms.
pub fn plane_poly(d: u32) -> impl Strategy<Value = TropicalPolynomial> {
    let monomials: Vec<(u32, u32)> = (0..=d)
        .flat_map(|i| (0..=d - i).map(move |j| (i, j)))
        .collect();
    let n = monomials.len();
    prop::collection::vec(prop::option::weighted(0.8, -8i64..8), n).prop_map(move |cs| {
        let terms = monomials
            .iter()
            .zip(cs)
            .filter_map(|(&(i, j), c)| c.map(|c| (vec![i, j], TropicalNumber::Finite(q(c)))));
        TropicalPolynomial::from_terms(2, terms).expect("valid terms")
    })
}

/// Polynomials whose Newton polygon is two-dimensional.
fn curve_poly(d: u32) -> impl Strategy<Value = TropicalPolynomial> {
    plane_poly(d).prop_filter("two-dimensional Newton polygon", |p| build_curve(p).is_ok())
}

/// Random points on `T(f)`, on `T(g)`, or anywhere.
pub fn union_membership(cases: u32, seed: u64) -> Result<(), String> {
    let strat = (1u32..=2, 1u32..=2).prop_flat_map(|(d, e)| {
        (
            curve_poly(d),
            curve_poly(e),
            0u8..3,
            any::<prop::sample::Index>(),
            1i64..8,
            small_q(),
            small_q(),
        )
    });
    report(
        runner(cases, seed).run(&strat, |(f, g, mode, idx, t, x, y)| {
            let fg = trop_poly_mul(&f, &g).unwrap();
            let point = match mode {
                0 => vec![x, y],
                _ => {
                    let c = build_curve(if mode == 1 { &f } else { &g }).unwrap();
                    let e = &c.edges;
                    if e.is_empty() {
                        c.vertices[idx.index(c.vertices.len())].coords.clone()
                    } else {
                        let e = &e[idx.index(e.len())];
                        let (a, b) = (&c.vertices[e.a].coords, &c.vertices[e.b].coords);
                        let s = qf(t, 8);
                        (0..2).map(|k| &a[k] + (&b[k] - &a[k]) * &s).collect()
                    }
                }
            };
            let lhs = fg.vanishes_at(&point).unwrap();
            let rhs = f.vanishes_at(&point).unwrap() || g.vanishes_at(&point).unwrap();
            prop_assert_eq!(lhs, rhs);
            if mode != 0 {
                prop_assert!(lhs);
            }
            Ok(())
        }),
    )
}

pub fn balancing(cases: u32, seed: u64) -> Result<(), String> {
    let strat = (1u32..=3).prop_flat_map(curve_poly);
    report(runner(cases, seed).run(&strat, |p| {
        let c = build_curve(&p).unwrap();
        prop_assert!(check_balancing(&c).balanced, "{}", p);
        Ok(())
    }))
}

/// A connected multigraph with loops: a random spanning tree plus extra edges.
pub fn metric_graph() -> impl Strategy<Value = MetricGraph> {
    (1usize..9).prop_flat_map(|n| {
        let parents = prop::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = prop::collection::vec((0..n, 0..n), 0..6);
        let lengths = prop::collection::vec(1i64..5, n - 1 + 6);
        (Just(n), parents, extra, lengths).prop_map(|(n, parents, extra, lengths)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            edges.extend(extra);
            let e: Vec<(usize, usize, Q)> = edges
                .iter()
                .zip(&lengths)
                .map(|(&(a, b), &l)| (a, b, q(l)))
                .collect();
            MetricGraph::new(n, &e).expect("positive lengths")
        })
    })
}

pub fn relabel(g: &MetricGraph, perm: &[usize]) -> MetricGraph {
    let e: Vec<(usize, usize, Q)> = g
        .edges
        .iter()
        .rev()
        .map(|x| (perm[x.b], perm[x.a], x.length.clone()))
        .collect();
    MetricGraph::new(g.n_vertices, &e).unwrap()
}

pub fn certificate_invariance(cases: u32, seed: u64) -> Result<(), String> {
    let strat = metric_graph().prop_flat_map(|g| {
        let n = g.n_vertices;
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    });
    report(runner(cases, seed).run(&strat, |(g, perm)| {
        let h = relabel(&g, &perm);
        for lengths in [false, true] {
            prop_assert_eq!(
                canonical_certificate(&g, lengths).unwrap(),
                canonical_certificate(&h, lengths).unwrap()
            );
        }
        Ok(())
    }))
}
