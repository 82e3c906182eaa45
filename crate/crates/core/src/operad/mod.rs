//! Quadratic nonsymmetric operads with two binary operations `⊢` and `⊣`.
//!
//! A relation space is a subspace of the 8-dimensional weight-2 component,
//! stored as the rows of a matrix whose columns follow [`quadratic_basis`].
//! Columns 1–4 hold the left-nested monomials `(a∘b)∘c`, columns 5–8 the
//! right-nested ones `a∘(b∘c)`.

mod catalog;
mod tree;

use std::sync::Arc;

use num_bigint::BigUint;
use thiserror::Error;

use crate::linalg::{
    fix_leading_signs, leading_columns, negate_columns, rcf_numeric, stack_reduce, structured_nullspace, LinalgError,
    PolyMatrix,
};
use crate::poly::{Polynomial, VariableSet};
use crate::scalar::Coefficient;

pub use catalog::{catalog, catalog_names, check_dual_pair, CatalogError, NamedOperadEntry};
pub use tree::{enumerate_basis, Op, TreeMonomial, MAX_WEIGHT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("relation matrix must have {expected} columns, found {found}")]
    WrongWidth { expected: usize, found: usize },
    #[error("relation matrix has rank {0}; self-duality needs rank 4")]
    WrongRank(usize),
    #[error("zero relation row")]
    ZeroRow,
    #[error("weight {0} exceeds the enumeration bound")]
    WeightTooLarge(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `2^w · C(2w, w) / (w + 1)`: labeled binary trees with `w` internal nodes.
pub fn dimension(w: u32) -> BigUint {
    let mut catalan = BigUint::from(1u32);
    // C_{k+1} = C_k · 2(2k+1)/(k+2)
    for k in 0..w {
        catalan = catalan * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    catalan << w as usize
}

/// The eight weight-2 monomials in column order.
pub fn quadratic_basis() -> Vec<TreeMonomial> {
    enumerate_basis(2).expect("weight 2 is within bounds")
}

/// Column labels, e.g. `(x1|-x2)-|x3`.
pub fn basis_labels() -> Vec<String> {
    quadratic_basis().iter().map(|t| t.to_string()).collect()
}

/// Gram matrix of the duality pairing: +1 on left-nested monomials, -1 on
/// right-nested ones.
pub fn inner_product_form<F: Coefficient>(vars: &Arc<VariableSet>) -> PolyMatrix<F> {
    let diag: Vec<F> = (0..8).map(|j| if j < 4 { F::one() } else { -F::one() }).collect();
    PolyMatrix::diagonal(vars, &diag)
}

/// A relation space in the weight-2 basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSpace<F> {
    matrix: PolyMatrix<F>,
}

impl<F: Coefficient> QuadraticSpace<F> {
    pub fn new(matrix: PolyMatrix<F>) -> Result<Self, OperadError> {
        if matrix.ncols() != 8 {
            return Err(OperadError::WrongWidth {
                expected: 8,
                found: matrix.ncols(),
            });
        }
        Ok(QuadraticSpace { matrix })
    }

    /// Canonical form of a constant relation space (RCF, zero rows removed).
    pub fn canonical(matrix: PolyMatrix<F>) -> Result<Self, OperadError> {
        let space = Self::new(matrix)?;
        let (m, _) = rcf_numeric(&space.matrix)?;
        Ok(QuadraticSpace { matrix: m })
    }

    pub fn matrix(&self) -> &PolyMatrix<F> {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn basis_labels(&self) -> Vec<String> {
        basis_labels()
    }

    /// Same row space, decided by comparing canonical forms. Constant
    /// spaces only.
    pub fn same_space(&self, other: &Self) -> Result<bool, OperadError> {
        let (a, _) = rcf_numeric(&self.matrix)?;
        let (b, _) = rcf_numeric(&other.matrix.embed(self.matrix.vars())?)?;
        Ok(a == b)
    }
}

/// Columns negated by the duality pairing: the second half.
fn negated_columns(n: usize) -> Vec<usize> {
    (n / 2..n).collect()
}

/// Steps 1–3 of Loday's algorithm on a matrix in RCF with unit pivots:
/// negate the right-nested columns, restore positive pivots, and read off the
/// nullspace basis. The result is `[R^±]`, not re-canonicalized.
pub fn loday_dual_raw<F: Coefficient>(r: &PolyMatrix<F>) -> Result<PolyMatrix<F>, OperadError> {
    let n = r.ncols();
    if !n.is_multiple_of(2) {
        return Err(OperadError::WrongWidth { expected: 8, found: n });
    }
    let pivots = leading_columns(r)?;
    let r1 = negate_columns(r, &negated_columns(n));
    let r2 = fix_leading_signs(&r1, &pivots)?;
    Ok(structured_nullspace(&r2, &pivots)?)
}

/// Koszul dual relation space. Constant results are put in RCF.
pub fn loday_dual<F: Coefficient>(r: &QuadraticSpace<F>) -> Result<QuadraticSpace<F>, OperadError> {
    let d = loday_dual_raw(r.matrix())?;
    if d.is_constant() {
        QuadraticSpace::canonical(d)
    } else {
        QuadraticSpace::new(d)
    }
}

/// `[T]`: the dual reduced by the leading ones of `R`. `R` is self-dual
/// exactly at the common zeros of the entries of `T`.
pub fn self_dual_obstruction<F: Coefficient>(r: &PolyMatrix<F>) -> Result<PolyMatrix<F>, OperadError> {
    if r.nrows() * 2 != r.ncols() {
        return Err(OperadError::WrongRank(r.nrows()));
    }
    let dual = loday_dual_raw(r)?;
    Ok(stack_reduce(r, &dual)?)
}

/// The square block of `T` in the non-pivot columns of `R`.
pub fn obstruction_block<F: Coefficient>(t: &PolyMatrix<F>, r_pivots: &[usize]) -> PolyMatrix<F> {
    let free: Vec<usize> = (0..t.ncols()).filter(|j| !r_pivots.contains(j)).collect();
    t.select_columns(&free)
}

/// A relation can hold in a unital algebra only if its coefficients sum to 0.
pub fn osborn_unital_check<F: Coefficient>(row: &[F]) -> Result<bool, OperadError> {
    if row.iter().all(|c| c.is_zero()) {
        return Err(OperadError::ZeroRow);
    }
    Ok(row.iter().fold(F::zero(), |a, c| a + c.clone()).is_zero())
}

/// Sum of the entries of a relation row; over a parameter ring this is a
/// polynomial.
pub fn coefficient_sum<F: Coefficient>(row: &[Polynomial<F>]) -> Option<Polynomial<F>> {
    let first = row.first()?;
    Some(row.iter().fold(Polynomial::zero(first.vars()), |a, c| &a + c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{build_parametric_rcf, ParamNaming, PivotPattern};
    use crate::poly::parse_polynomial;
    use crate::scalar::{rat, Rational};

    fn no_vars() -> Arc<VariableSet> {
        VariableSet::new(Vec::<String>::new()).unwrap()
    }

    #[test]
    fn small_dimensions() {
        let d: Vec<u64> = (0..5).map(|w| dimension(w).try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 8, 40, 224]);
    }

    #[test]
    fn pairing_values() {
        let g = inner_product_form::<Rational>(&no_vars());
        assert!(g.get(0, 0).is_one());
        assert_eq!(g.get(5, 5).as_constant(), Some(rat(-1, 1)));
        assert!(g.get(0, 4).is_zero());
    }

    #[test]
    fn dual_of_two_associativities() {
        let v = no_vars();
        let rows: Vec<Vec<Rational>> = [[1, 0, 0, 0, -1, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0, -1]]
            .iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect();
        let a = QuadraticSpace::new(PolyMatrix::from_constants(&v, &rows, 8).unwrap()).unwrap();
        let d = loday_dual(&a).unwrap();
        assert_eq!(d.rank(), 6);
        let dd = loday_dual(&d).unwrap();
        assert!(dd.same_space(&a).unwrap());
    }

    #[test]
    fn trailing_pivots_force_a_constant_in_t() {
        let pat = PivotPattern::from_one_based(&[2, 3, 4, 5]).unwrap();
        let r: PolyMatrix<Rational> = build_parametric_rcf(&pat, 8, ParamNaming::Letters).unwrap();
        let dual = loday_dual_raw(&r).unwrap();
        // first row of the dual is e1
        assert!(dual.get(0, 0).is_one());
        assert!((1..8).all(|j| dual.get(0, j).is_zero()));
        let p = |s: &str| parse_polynomial::<Rational>(s, r.vars()).unwrap();
        assert_eq!(dual.row(1), &[p("0"), p("A"), p("D"), p("G"), p("-J"), p("1"), p("0"), p("0")]);
        let t = self_dual_obstruction(&r).unwrap();
        assert!(t.get(0, 0).is_one());
        assert_eq!(t.get(1, 5), &p("J^2 - G^2 - D^2 - A^2 + 1"));
    }

    #[test]
    fn obstruction_needs_rank_four() {
        let v = no_vars();
        let m = PolyMatrix::<Rational>::from_constants(&v, &[vec![rat(1, 1); 8]], 8).unwrap();
        assert_eq!(self_dual_obstruction(&m), Err(OperadError::WrongRank(1)));
    }

    #[test]
    fn osborn() {
        let assoc = [rat(1, 1), rat(-1, 1)];
        let anti = [rat(1, 1), rat(1, 1)];
        assert!(osborn_unital_check(&assoc).unwrap());
        assert!(!osborn_unital_check(&anti).unwrap());
        let dendri: Vec<Rational> = [1, -1, -1].iter().map(|&x| rat(x, 1)).collect();
        assert!(!osborn_unital_check(&dendri).unwrap());
        assert_eq!(osborn_unital_check(&[rat(0, 1)]), Err(OperadError::ZeroRow));
    }
}
