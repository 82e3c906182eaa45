//! Gröbner bases over exact fields.
//!
//! Two strategies compute the same reduced basis:
//!
//! * [`Strategy::Staged`] runs whole rounds: self-reduce the current set,
//!   then reduce *every* pairwise S-polynomial against it and merge the
//!   nonzero remainders. Each round is recorded in a [`StageRecord`].
//! * [`Strategy::Pairs`] is a pair-queue Buchberger with the Gebauer–Möller
//!   criteria. Much faster on the larger classification ideals; it records
//!   no trace.
//!
//! Either way the output is post-processed into the unique reduced basis.

mod io;
mod pairs;
mod staged;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::poly::sorted::{self, OrderedPoly, Reducers};
use crate::poly::{MonomialOrder, OrderKind, PolyError, Polynomial, VariableSet};
use crate::scalar::Coefficient;

pub use io::{GroebnerReport, IdealFile};
pub use staged::self_reduce;

/// A finite generating set of an ideal. Zero generators are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerators<F> {
    vars: Arc<VariableSet>,
    generators: Vec<Polynomial<F>>,
}

impl<F: Coefficient> IdealGenerators<F> {
    pub fn new(vars: &Arc<VariableSet>, generators: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self, PolyError> {
        let mut gens = Vec::new();
        for g in generators {
            if g.vars().as_ref() != vars.as_ref() {
                return Err(PolyError::VariableMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(IdealGenerators {
            vars: vars.clone(),
            generators: gens,
        })
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// One round of the staged algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct StageRecord {
    pub stage: usize,
    pub elements_before_self_reduce: usize,
    pub eliminated_by_self_reduce: usize,
    pub surviving_generators: usize,
    pub nonzero_s_polynomials: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Staged,
    #[default]
    Pairs,
}

/// A reduced Gröbner basis, sorted ascending by leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerResult<F> {
    vars: Arc<VariableSet>,
    basis: Vec<Polynomial<F>>,
    order: MonomialOrder,
    trace: Vec<StageRecord>,
}

impl<F: Coefficient> GroebnerResult<F> {
    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn trace(&self) -> &[StageRecord] {
        &self.trace
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    /// Ideal membership by reduction to zero.
    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        let ds: Vec<OrderedPoly<F>> = self.basis.iter().map(|b| OrderedPoly::from_poly(b, &self.order)).collect();
        let reducers = Reducers::new(ds.iter());
        reducers.normal_form(&OrderedPoly::from_poly(f, &self.order), &self.order).is_zero()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let ds: Vec<OrderedPoly<F>> = self.basis.iter().map(|b| OrderedPoly::from_poly(b, &self.order)).collect();
        let reducers = Reducers::new(ds.iter());
        reducers
            .normal_form(&OrderedPoly::from_poly(f, &self.order), &self.order)
            .to_poly(&self.vars)
    }

    /// The basis sorted ascending under another order (same polynomials).
    pub fn sorted_by(&self, ord: &MonomialOrder) -> Vec<Polynomial<F>> {
        let mut v: Vec<OrderedPoly<F>> = self.basis.iter().map(|b| OrderedPoly::from_poly(b, ord)).collect();
        v.sort_by(|a, b| a.cmp_by(b, ord));
        v.iter().map(|p| p.to_poly(&self.vars)).collect()
    }

    /// Greatest element under the computation order.
    pub fn greatest(&self) -> Option<&Polynomial<F>> {
        self.basis.last()
    }

    /// Greatest element when the basis is sorted lexicographically (same
    /// variable ranking as the computation order).
    pub fn greatest_lex(&self) -> Option<Polynomial<F>> {
        self.sorted_by(&self.order.with_kind(OrderKind::Lex)).pop()
    }
}

/// `(lcm/lt(f))·f − (lcm/lt(g))·g` over the leading monomials of `f`, `g`.
pub fn s_polynomial<F: Coefficient>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    ord: &MonomialOrder,
) -> Result<Polynomial<F>, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !f.same_ring(g) {
        return Err(PolyError::VariableMismatch);
    }
    let s = sorted::s_polynomial(&OrderedPoly::from_poly(f, ord), &OrderedPoly::from_poly(g, ord), ord);
    Ok(s.to_poly(f.vars()))
}

/// Computes the reduced Gröbner basis of `gens` under `ord`.
pub fn groebner_basis<F: Coefficient>(gens: &IdealGenerators<F>, ord: &MonomialOrder, strategy: Strategy) -> GroebnerResult<F> {
    assert_eq!(ord.nvars(), gens.vars().len(), "order arity must match the ring");
    let input: Vec<OrderedPoly<F>> = gens
        .generators()
        .iter()
        .map(|g| OrderedPoly::from_poly(g, ord).monic())
        .collect();
    let (raw, trace) = match strategy {
        Strategy::Staged => staged::run(input, ord),
        Strategy::Pairs => (pairs::run(input, ord), Vec::new()),
    };
    let basis = reduce_basis(raw, ord);
    GroebnerResult {
        vars: gens.vars().clone(),
        basis: basis.iter().map(|p| p.to_poly(gens.vars())).collect(),
        order: ord.clone(),
        trace,
    }
}

/// The staged algorithm with its per-round trace.
pub fn buchberger_staged<F: Coefficient>(gens: &IdealGenerators<F>, ord: &MonomialOrder) -> GroebnerResult<F> {
    groebner_basis(gens, ord, Strategy::Staged)
}

pub fn is_unit_ideal<F: Coefficient>(gens: &IdealGenerators<F>, ord: &MonomialOrder) -> bool {
    groebner_basis(gens, ord, Strategy::Pairs).is_unit()
}

/// Equality of ideals via their reduced bases.
pub fn ideals_equal<F: Coefficient>(a: &IdealGenerators<F>, b: &IdealGenerators<F>, ord: &MonomialOrder) -> Result<bool, PolyError> {
    if a.vars().as_ref() != b.vars().as_ref() {
        return Err(PolyError::VariableMismatch);
    }
    let ga = groebner_basis(a, ord, Strategy::Pairs);
    let gb = groebner_basis(b, ord, Strategy::Pairs);
    Ok(ga.basis() == gb.basis())
}

/// Minimalizes, inter-reduces and monicizes a Gröbner basis; sorts ascending.
pub(crate) fn reduce_basis<F: Coefficient>(gb: Vec<OrderedPoly<F>>, ord: &MonomialOrder) -> Vec<OrderedPoly<F>> {
    let mut gb: Vec<OrderedPoly<F>> = gb.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    gb.sort_by(|a, b| ord.compare(a.lm(), b.lm()));
    gb.dedup_by(|a, b| a.lm() == b.lm());
    if gb.iter().any(|p| p.is_one()) {
        return vec![gb.into_iter().find(|p| p.is_one()).expect("unit present")];
    }
    // drop elements whose leading monomial is divisible by another's
    let minimal: Vec<OrderedPoly<F>> = gb
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            !gb.iter()
                .enumerate()
                .any(|(j, q)| j != *i && q.lm().divides(p.lm()))
        })
        .map(|(_, p)| p.clone())
        .collect();
    let reduced: Vec<OrderedPoly<F>> = (0..minimal.len())
        .map(|i| {
            let others = Reducers::new(minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, p)| p));
            // the leading term is untouched because the basis is minimal
            others.normal_form(&minimal[i], ord).monic()
        })
        .collect();
    let mut out = reduced;
    out.sort_by(|a, b| a.cmp_by(b, ord));
    out
}

pub(crate) fn sort_polys<F: Coefficient>(v: &mut [OrderedPoly<F>], ord: &MonomialOrder) {
    v.sort_by(|a, b| a.cmp_by(b, ord));
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::scalar::Rational;

    fn ring(names: &[&str]) -> Arc<VariableSet> {
        VariableSet::new(names.iter().copied()).unwrap()
    }

    fn polys(v: &Arc<VariableSet>, src: &[&str]) -> Vec<Polynomial<Rational>> {
        src.iter().map(|s| parse_polynomial(s, v).unwrap()).collect()
    }

    fn ideal(v: &Arc<VariableSet>, src: &[&str]) -> IdealGenerators<Rational> {
        IdealGenerators::new(v, polys(v, src)).unwrap()
    }

    #[test]
    fn s_polynomial_examples() {
        let v = ring(&["B", "A"]);
        // lex with A ≻ B
        let lex = MonomialOrder::new(OrderKind::Lex, &v);
        let f = parse_polynomial::<Rational>("A^2 - B", &v).unwrap();
        let g = parse_polynomial::<Rational>("A*B - 1", &v).unwrap();
        // B·(A^2 − B) − A·(AB − 1) = A − B^2
        assert_eq!(s_polynomial(&f, &g, &lex).unwrap(), parse_polynomial("A - B^2", &v).unwrap());
        assert!(s_polynomial(&f, &f, &lex).unwrap().is_zero());
        let a2 = parse_polynomial::<Rational>("A^2", &v).unwrap();
        let ab = parse_polynomial::<Rational>("A*B", &v).unwrap();
        assert!(s_polynomial(&a2, &ab, &lex).unwrap().is_zero());
        assert_eq!(s_polynomial(&a2, &Polynomial::zero(&v), &lex), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn unit_ideal_detection() {
        let v = ring(&["A"]);
        let ord = MonomialOrder::new(OrderKind::Grevlex, &v);
        for strategy in [Strategy::Staged, Strategy::Pairs] {
            let gb = groebner_basis(&ideal(&v, &["A + 1", "A"]), &ord, strategy);
            assert!(gb.is_unit());
            assert_eq!(gb.basis(), polys(&v, &["1"]).as_slice());
        }
        assert!(!is_unit_ideal(&ideal(&v, &["A"]), &ord));
    }

    #[test]
    fn membership() {
        let v = ring(&["A"]);
        let ord = MonomialOrder::new(OrderKind::Grevlex, &v);
        let gb = groebner_basis(&ideal(&v, &["A"]), &ord, Strategy::Pairs);
        assert!(gb.contains(&polys(&v, &["A^2 + A"])[0]));
        assert!(!gb.contains(&polys(&v, &["A + 1"])[0]));
    }

    #[test]
    fn equality_of_ideals() {
        let v = ring(&["A"]);
        let ord = MonomialOrder::new(OrderKind::Grevlex, &v);
        assert!(ideals_equal(&ideal(&v, &["A"]), &ideal(&v, &["2*A", "A^2"]), &ord).unwrap());
        assert!(!ideals_equal(&ideal(&v, &["A"]), &ideal(&v, &["A + 1"]), &ord).unwrap());
    }

    #[test]
    fn zero_generators_are_dropped() {
        let v = ring(&["A"]);
        let g = ideal(&v, &["0", "A"]);
        assert_eq!(g.len(), 1);
        let empty = ideal(&v, &["0"]);
        let ord = MonomialOrder::new(OrderKind::Lex, &v);
        assert!(groebner_basis(&empty, &ord, Strategy::Pairs).is_empty());
        assert!(groebner_basis(&empty, &ord, Strategy::Staged).is_empty());
    }

    #[test]
    fn textbook_basis() {
        // x^3 - 2xy, x^2 y - 2y^2 + x under grlex x ≻ y (Cox–Little–O'Shea)
        let v = ring(&["y", "x"]);
        let ord = MonomialOrder::new(OrderKind::Grlex, &v);
        let gens = ideal(&v, &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"]);
        let expected = polys(&v, &["x^2", "x*y", "y^2 - 1/2*x"]);
        for strategy in [Strategy::Staged, Strategy::Pairs] {
            let gb = groebner_basis(&gens, &ord, strategy);
            let mut got = gb.basis().to_vec();
            got.sort_by(|a, b| a.terms().cmp(b.terms()));
            let mut want = expected.clone();
            want.sort_by(|a, b| a.terms().cmp(b.terms()));
            assert_eq!(got, want, "{strategy:?}");
        }
    }
}
