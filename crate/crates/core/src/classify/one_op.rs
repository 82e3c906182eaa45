//! One binary operation: relations `a·(x1 x2) x3 + b·x1 (x2 x3)`. The same
//! obstruction pipeline runs on the 2-column space.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{entry_ideal, ClassifyError};
use crate::groebner::{groebner_basis, Strategy};
use crate::linalg::{build_parametric_rcf, ParamNaming, PivotPattern};
use crate::operad::{osborn_unital_check, self_dual_obstruction};
use crate::poly::{MonomialOrder, OrderKind, Polynomial};
use crate::scalar::Rational;

/// A self-dual relation `a·(x1 x2) x3 + b·x1 (x2 x3)`, scaled so `a = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneOpSolution {
    pub a: Rational,
    pub b: Rational,
    /// Coefficient sum is zero, so the relation can hold in a unital
    /// algebra.
    pub unital: bool,
    pub name: &'static str,
}

/// All self-dual one-operation relations up to scale.
pub fn one_operation_classification() -> Result<Vec<OneOpSolution>, ClassifyError> {
    let mut out = Vec::new();
    for pivot in [1usize, 2] {
        let pattern = PivotPattern::from_one_based(&[pivot])?;
        let r = build_parametric_rcf::<Rational>(&pattern, 2, ParamNaming::Indexed)?;
        let t = self_dual_obstruction(&r)?;
        if !t.nonzero_constants().is_empty() {
            continue;
        }
        // one parameter: the coefficient b with a = 1
        let vars = r.vars().clone();
        let ord = MonomialOrder::new(OrderKind::Grevlex, &vars);
        let gb = groebner_basis(&entry_ideal(&t), &ord, Strategy::Pairs);
        if gb.is_unit() {
            continue;
        }
        let [g] = gb.basis() else {
            return Err(ClassifyError::Data("expected a principal ideal in one variable".into()));
        };
        for b in rational_roots(g)? {
            let row = [Rational::one(), b.clone()];
            let unital = osborn_unital_check(&row)?;
            out.push(OneOpSolution {
                a: Rational::one(),
                b,
                unital,
                name: if unital { "associative" } else { "anti-associative" },
            });
        }
    }
    out.sort_by(|x, y| y.b.cmp(&x.b));
    Ok(out)
}

/// Rational roots of a univariate polynomial, without multiplicity.
fn rational_roots(f: &Polynomial<Rational>) -> Result<Vec<Rational>, ClassifyError> {
    let deg = f.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in f.terms() {
        coeffs[m.degree() as usize] = c.clone();
    }
    let denom = coeffs.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(denom.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Rational::zero());
    }
    let (Some(c0), Some(cn)) = (ints[low].to_i64(), ints[deg].to_i64()) else {
        return Err(ClassifyError::Data("coefficients too large for the root search".into()));
    };
    for p in divisors(c0.unsigned_abs()) {
        for q in divisors(cn.unsigned_abs()) {
            for sign in [1i64, -1] {
                let x = Rational::new((sign * p as i64).into(), (q as i64).into());
                let value = coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c);
                if value.is_zero() && !roots.contains(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots.sort_by(|a, b| b.abs().cmp(&a.abs()).then(b.cmp(a)));
    Ok(roots)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}
