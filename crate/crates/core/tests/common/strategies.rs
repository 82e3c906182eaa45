//! Proptest generators shared by the property suites.

use std::sync::Arc;

use proptest::prelude::*;

use selfdual::linalg::PolyMatrix;
use selfdual::poly::{Monomial, MonomialOrder, OrderKind, Polynomial, VariableSet};
use selfdual::{rat, Poly, Rational};

pub fn xyz() -> Arc<VariableSet> {
    VariableSet::new(["x", "y", "z"]).unwrap()
}

/// Exponent vector of total degree at most `max_deg`.
pub fn exponents(nvars: usize, max_deg: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..nvars, 0..=max_deg as usize).prop_map(move |picks| {
        let mut e = vec![0u32; nvars];
        for v in picks {
            e[v] += 1;
        }
        e
    })
}

pub fn coefficient() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

/// Random polynomial in `x, y, z` with up to `max_terms` terms.
pub fn poly(max_terms: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((exponents(3, max_deg), coefficient()), 0..=max_terms).prop_map(|terms| {
        let vars = xyz();
        Polynomial::from_terms(&vars, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), c)).collect())
    })
}

pub fn nonzero_poly(max_terms: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    poly(max_terms, max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn order_kind() -> impl Strategy<Value = OrderKind> {
    prop_oneof![Just(OrderKind::Lex), Just(OrderKind::Grlex), Just(OrderKind::Grevlex)]
}

/// Any order kind with any ranking of three variables.
pub fn order() -> impl Strategy<Value = MonomialOrder> {
    (order_kind(), Just(vec![0usize, 1, 2]).prop_shuffle())
        .prop_map(|(k, ranking)| MonomialOrder::from_ranking(k, ranking).unwrap())
}

/// A constant 8-column matrix in RCF with the given rank.
pub fn rcf(rank: usize) -> impl Strategy<Value = PolyMatrix<Rational>> {
    (
        prop::sample::subsequence((0..8).collect::<Vec<usize>>(), rank),
        prop::collection::vec(coefficient(), rank * 8),
    )
        .prop_map(move |(pivots, fill)| {
            let mut rows = vec![vec![rat(0, 1); 8]; rank];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = rat(1, 1);
                for j in p + 1..8 {
                    if !pivots.contains(&j) {
                        rows[i][j] = fill[i * 8 + j].clone();
                    }
                }
            }
            let none = VariableSet::new(Vec::<String>::new()).unwrap();
            PolyMatrix::from_constants(&none, &rows, 8).unwrap()
        })
}

/// Fixed seed so runs are reproducible; `PROPTEST_CASES` still overrides
/// the count.
pub fn config(cases: u32) -> ProptestConfig {
    let cases = std::env::var("PROPTEST_CASES").ok().and_then(|v| v.parse().ok()).unwrap_or(cases);
    ProptestConfig {
        cases,
        rng_seed: proptest::test_runner::RngSeed::Fixed(0x5e1f_d0a1),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}
