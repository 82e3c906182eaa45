use super::sorted::{OrderedPoly, Reducers};
use super::{Monomial, MonomialOrder, PolyError, Polynomial};
use crate::scalar::Coefficient;

/// The ≻-maximal term of `f`.
pub fn leading_term<F: Coefficient>(f: &Polynomial<F>, ord: &MonomialOrder) -> Result<(Monomial, F), PolyError> {
    f.terms()
        .iter()
        .max_by(|a, b| ord.compare(&a.0, &b.0))
        .cloned()
        .ok_or(PolyError::ZeroPolynomial)
}

/// `f` divided by its leading coefficient.
pub fn monic_form<F: Coefficient>(f: &Polynomial<F>, ord: &MonomialOrder) -> Result<Polynomial<F>, PolyError> {
    let (_, c) = leading_term(f, ord)?;
    Ok(f.scale(&c.inv()))
}

/// Remainder of full multivariate division of `f` by `divisors`.
///
/// At every step the greatest remaining term is reduced by the first divisor
/// (in sequence order) whose leading monomial divides it.
pub fn normal_form<F: Coefficient>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Result<Polynomial<F>, PolyError> {
    check_divisors(f, divisors)?;
    let ds: Vec<OrderedPoly<F>> = divisors.iter().map(|d| OrderedPoly::from_poly(d, ord)).collect();
    let reducers = Reducers::new(ds.iter());
    let r = reducers.normal_form(&OrderedPoly::from_poly(f, ord), ord);
    Ok(r.to_poly(f.vars()))
}

fn check_divisors<F: Coefficient>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Result<(), PolyError> {
    for d in divisors {
        if d.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if !d.same_ring(f) {
            return Err(PolyError::VariableMismatch);
        }
    }
    Ok(())
}

/// Quotients and remainder with `f = Σ quotients[i]·divisors[i] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division<F> {
    pub quotients: Vec<Polynomial<F>>,
    pub remainder: Polynomial<F>,
}

/// Division with quotient tracking; same strategy as [`normal_form`].
pub fn divide<F: Coefficient>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    ord: &MonomialOrder,
) -> Result<Division<F>, PolyError> {
    check_divisors(f, divisors)?;
    let vars = f.vars();
    let leads: Vec<(Monomial, F)> = divisors
        .iter()
        .map(|d| leading_term(d, ord))
        .collect::<Result<_, _>>()?;
    let mut quotients = vec![Polynomial::zero(vars); divisors.len()];
    let mut remainder = Polynomial::zero(vars);
    let mut p = f.clone();
    while !p.is_zero() {
        let (m, c) = leading_term(&p, ord)?;
        match leads.iter().position(|(lm, _)| lm.divides(&m)) {
            Some(i) => {
                let q = leads[i].0.quotient_of(&m);
                let coef = c / leads[i].1.clone();
                p = &p - &divisors[i].mul_term(&q, &coef);
                quotients[i] = &quotients[i] + &Polynomial::from_terms(vars, vec![(q, coef)]);
            }
            None => {
                let t = Polynomial::from_terms(vars, vec![(m, c)]);
                p = &p - &t;
                remainder = &remainder + &t;
            }
        }
    }
    Ok(Division { quotients, remainder })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, OrderKind, VariableSet};
    use crate::scalar::{rat, Rational};
    use std::sync::Arc;

    fn setup() -> (Arc<VariableSet>, MonomialOrder) {
        let v = VariableSet::new(["A", "B"]).unwrap();
        let o = MonomialOrder::new(OrderKind::Grevlex, &v);
        (v, o)
    }

    fn p(v: &Arc<VariableSet>, s: &str) -> Polynomial<Rational> {
        parse_polynomial(s, v).unwrap()
    }

    #[test]
    fn leading_terms() {
        let (v, o) = setup();
        // A ≺ B under grevlex: the degree-2 part ranks A^2 ≺ AB
        assert_eq!(leading_term(&p(&v, "A^2 + A*B + B"), &o).unwrap(), (p(&v, "A*B").terms()[0].0.clone(), rat(1, 1)));
        assert_eq!(leading_term(&p(&v, "3*A"), &o).unwrap().1, rat(3, 1));
        assert_eq!(leading_term(&Polynomial::<Rational>::zero(&v), &o), Err(PolyError::ZeroPolynomial));

        let z = VariableSet::new(["Z4"]).unwrap();
        let gl = MonomialOrder::new(OrderKind::Grlex, &z);
        let (m, c) = leading_term(&p(&z, "Z4^2 + 1"), &gl).unwrap();
        assert_eq!((m.degree(), c), (2, rat(1, 1)));
    }

    #[test]
    fn monic_forms() {
        let (v, o) = setup();
        // lex with B ≺ A
        let lex = MonomialOrder::from_ranking(OrderKind::Lex, vec![1, 0]).unwrap();
        assert_eq!(monic_form(&p(&v, "2*A + 4*B"), &lex).unwrap(), p(&v, "A + 2*B"));
        assert_eq!(monic_form(&p(&v, "-A"), &o).unwrap(), p(&v, "A"));
        let once = monic_form(&p(&v, "-3*A^2 + B"), &o).unwrap();
        assert_eq!(monic_form(&once, &o).unwrap(), once);
    }

    #[test]
    fn normal_forms() {
        let (v, o) = setup();
        let a = p(&v, "A");
        assert!(normal_form(&p(&v, "A^2"), std::slice::from_ref(&a), &o).unwrap().is_zero());
        assert_eq!(normal_form(&p(&v, "A + 1"), std::slice::from_ref(&a), &o).unwrap(), p(&v, "1"));
        assert_eq!(normal_form(&p(&v, "A"), &[Polynomial::zero(&v)], &o), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn division_reconstructs() {
        let (v, o) = setup();
        let f = p(&v, "A^2*B + A*B^2 + B^2");
        let ds = [p(&v, "A*B - 1"), p(&v, "B^2 - 1")];
        let d = divide(&f, &ds, &o).unwrap();
        let mut back = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(ds.iter()) {
            back = &back + &(q * g);
        }
        assert_eq!(back, f);
        assert_eq!(d.remainder, normal_form(&f, &ds, &o).unwrap());
    }
}
