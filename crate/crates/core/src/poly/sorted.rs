//! Working representation for reduction-heavy code: terms kept sorted by a
//! fixed monomial order, leading term last.

use std::cmp::Ordering;
use std::sync::Arc;

use super::{Monomial, MonomialOrder, Polynomial, VariableSet};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct OrderedPoly<F> {
    // ascending under the order; leading term at the end
    pub(crate) terms: Vec<(Monomial, F)>,
}

/// Bitmask of variables that occur in `m` (variables past 64 share bit 63).
pub(crate) fn support_mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << i.min(63)))
}

impl<F: Coefficient> OrderedPoly<F> {
    pub(crate) fn from_poly(p: &Polynomial<F>, ord: &MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| ord.compare(&a.0, &b.0));
        OrderedPoly { terms }
    }

    pub(crate) fn to_poly(&self, vars: &Arc<VariableSet>) -> Polynomial<F> {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial::from_sorted_unchecked(vars, terms)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("leading monomial of zero").0
    }

    pub(crate) fn lc(&self) -> &F {
        &self.terms.last().expect("leading coefficient of zero").1
    }

    pub(crate) fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.last() {
            if !c.is_one() {
                let inv = c.inv();
                for (_, x) in self.terms.iter_mut() {
                    *x = x.clone() * inv.clone();
                }
            }
        }
    }

    pub(crate) fn monic(mut self) -> Self {
        self.make_monic();
        self
    }

    /// `self - c · m · g`, merging in order.
    pub(crate) fn sub_mul(&self, c: &F, m: &Monomial, g: &OrderedPoly<F>, ord: &MonomialOrder) -> Self {
        let a = &self.terms;
        let mut out = Vec::with_capacity(a.len() + g.terms.len());
        let mut i = 0;
        let mut shifted = g.terms.iter().map(|(t, x)| (t.mul(m), x.clone() * c.clone()));
        let mut next = shifted.next();
        while let Some((bm, bc)) = next.take() {
            while i < a.len() && ord.compare(&a[i].0, &bm) == Ordering::Less {
                out.push(a[i].clone());
                i += 1;
            }
            if i < a.len() && a[i].0 == bm {
                let v = a[i].1.clone() - bc;
                if !v.is_zero() {
                    out.push((bm, v));
                }
                i += 1;
            } else {
                out.push((bm, -bc));
            }
            next = shifted.next();
        }
        out.extend(a[i..].iter().cloned());
        OrderedPoly { terms: out }
    }

    pub(crate) fn cmp_by(&self, other: &Self, ord: &MonomialOrder) -> Ordering {
        // term by term from the top: monomials first, then coefficients
        let mut a = self.terms.iter().rev();
        let mut b = other.terms.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ma, ca)), Some((mb, cb))) => {
                    match ord.compare(ma, mb) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                    if ca != cb {
                        return ca.partial_cmp_coeff(cb);
                    }
                }
            }
        }
    }
}

trait CoeffOrd {
    fn partial_cmp_coeff(&self, other: &Self) -> Ordering;
}

impl<F: Coefficient> CoeffOrd for F {
    fn partial_cmp_coeff(&self, other: &Self) -> Ordering {
        let d = self.clone() - other.clone();
        if d.is_zero() {
            Ordering::Equal
        } else if d.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

/// A reducer set with cached leading data for fast divisor lookup.
pub(crate) struct Reducers<'a, F> {
    polys: Vec<&'a OrderedPoly<F>>,
    masks: Vec<u64>,
}

impl<'a, F: Coefficient> Reducers<'a, F> {
    pub(crate) fn new(polys: impl IntoIterator<Item = &'a OrderedPoly<F>>) -> Self {
        let polys: Vec<_> = polys.into_iter().collect();
        let masks = polys.iter().map(|p| support_mask(p.lm())).collect();
        Reducers { polys, masks }
    }

    /// First reducer (in sequence order) whose leading monomial divides `m`.
    pub(crate) fn find(&self, m: &Monomial) -> Option<&'a OrderedPoly<F>> {
        let mm = support_mask(m);
        for (p, &mask) in self.polys.iter().zip(self.masks.iter()) {
            if mask & !mm == 0 && p.lm().divides(m) {
                return Some(p);
            }
        }
        None
    }

    /// Full (tail) reduction of `f`.
    pub(crate) fn normal_form(&self, f: &OrderedPoly<F>, ord: &MonomialOrder) -> OrderedPoly<F> {
        let mut p = f.clone();
        // remainder collected in descending order
        let mut rem: Vec<(Monomial, F)> = Vec::new();
        while let Some((m, c)) = p.terms.last().cloned() {
            match self.find(&m) {
                Some(g) => {
                    let q = g.lm().quotient_of(&m);
                    let coef = c.clone() / g.lc().clone();
                    let mut next = p.sub_mul(&coef, &q, g, ord);
                    // leading terms cancel exactly over a field; drop residue from inexact ones
                    if next.terms.last().map(|t| &t.0) == Some(&m) {
                        next.terms.pop();
                    }
                    p = next;
                }
                None => {
                    rem.push(p.terms.pop().expect("nonempty"));
                }
            }
        }
        rem.reverse();
        OrderedPoly { terms: rem }
    }
}

pub(crate) fn s_polynomial<F: Coefficient>(f: &OrderedPoly<F>, g: &OrderedPoly<F>, ord: &MonomialOrder) -> OrderedPoly<F> {
    let lcm = f.lm().lcm(g.lm());
    let uf = f.lm().quotient_of(&lcm);
    let ug = g.lm().quotient_of(&lcm);
    // (lcm/lt f)·f − (lcm/lt g)·g with lt including the coefficient
    let ff = OrderedPoly { terms: Vec::new() }.sub_mul(&-f.lc().inv(), &uf, f, ord);
    let mut s = ff.sub_mul(&g.lc().inv(), &ug, g, ord);
    if s.terms.last().map(|t| &t.0) == Some(&lcm) {
        s.terms.pop();
    }
    s
}
