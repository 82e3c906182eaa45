//! Self-dual operads whose two operations are both associative.

use std::sync::Arc;

use rayon::prelude::*;

use super::{decide, enumerate_subsets, family, relation_matrix, CaseReport, ClassifyError, GbConfig, Pipeline, SubsetChoice};
use crate::linalg::{leading_columns, PolyMatrix};
use crate::poly::{Polynomial, VariableSet};
use crate::scalar::Rational;

type Poly = Polynomial<Rational>;

/// The two associativity relations, `(a|-b)|-c = a|-(b|-c)` and
/// `(a-|b)-|c = a-|(b-|c)`.
pub fn associativity_matrix(vars: &Arc<VariableSet>) -> PolyMatrix<Rational> {
    let q = |x: i64| Rational::from_integer(x.into());
    let rows = vec![
        [1, 0, 0, 0, -1, 0, 0, 0].map(q).to_vec(),
        [0, 0, 0, 1, 0, 0, 0, -1].map(q).to_vec(),
    ];
    PolyMatrix::from_constants(vars, &rows, 8).expect("8 columns")
}

/// The 15 pivot patterns containing columns 1 and 4.
pub fn assoc_subsets() -> Vec<SubsetChoice> {
    enumerate_subsets(4, 8, &[1, 4])
}

/// Parametric relation matrix of each pattern, before the associativity
/// conditions.
pub fn assoc_build_cases() -> Result<Vec<(SubsetChoice, PolyMatrix<Rational>)>, ClassifyError> {
    assoc_subsets()
        .into_iter()
        .map(|s| {
            let m = relation_matrix(&s.columns, &[])?;
            Ok((s, m))
        })
        .collect()
}

/// The conditions and the specialized matrix.
#[derive(Debug, Clone)]
pub struct AssocConditions {
    /// Entries of the reduced associativity rows; all must vanish.
    pub constraints: Vec<Poly>,
    /// Eliminated parameter and its value, in elimination order.
    pub solved: Vec<(String, Poly)>,
    /// The relation matrix after substitution, over the surviving
    /// parameters only.
    pub matrix: PolyMatrix<Rational>,
}

/// Reduces the associativity rows by the pivots of `r`, solves the
/// resulting affine-linear constraints, and substitutes. Each constraint is
/// solved for its greatest parameter in column-major order.
pub fn apply_associativity_conditions(r: &PolyMatrix<Rational>) -> Result<AssocConditions, ClassifyError> {
    let vars = r.vars().clone();
    let pivots = leading_columns(r)?;
    if !pivots.contains(&0) || !pivots.contains(&3) {
        return Err(ClassifyError::UnknownCase("associative cases need pivots in columns 1 and 4".into()));
    }
    let a = associativity_matrix(&vars);
    let mut constraints = Vec::new();
    for k in 0..a.nrows() {
        let mut row: Vec<Poly> = a.row(k).to_vec();
        for (i, &p) in pivots.iter().enumerate() {
            let c = row[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = &*slot - &(&c * r.get(i, j));
            }
        }
        constraints.extend(row.into_iter().filter(|e| !e.is_zero()));
    }

    let n = vars.len();
    let mut images: Vec<Poly> = (0..n).map(|i| Poly::variable(&vars, i)).collect();
    let mut solved: Vec<(usize, Poly)> = Vec::new();
    for c in &constraints {
        let f = c.substitute(&vars, &images)?;
        if f.is_zero() {
            continue;
        }
        if f.total_degree().unwrap_or(0) > 1 {
            return Err(ClassifyError::NonLinear(f.to_string()));
        }
        let Some(&v) = f.support().last() else {
            return Err(ClassifyError::Inconsistent(format!("{c} = 0")));
        };
        let x = Poly::variable(&vars, v);
        let coef = f.coefficient(&crate::poly::Monomial::variable(n, v));
        let rest = &f - &x.scale(&coef);
        let value = rest.scale(&(-coef.recip()));
        let mut step: Vec<Poly> = (0..n).map(|i| Poly::variable(&vars, i)).collect();
        step[v] = value.clone();
        for img in images.iter_mut() {
            *img = img.substitute(&vars, &step)?;
        }
        for (_, s) in solved.iter_mut() {
            *s = s.substitute(&vars, &step)?;
        }
        solved.push((v, value));
    }

    let specialized = r.substitute(&vars, &images)?;
    let used: Vec<usize> = (0..n)
        .filter(|&i| specialized.entries().iter().any(|e| e.support().contains(&i)))
        .collect();
    let survivors = VariableSet::new(used.iter().map(|&i| vars.name(i).to_string()))?;
    let matrix = specialized.embed(&survivors)?;
    leading_columns(&matrix)?;
    Ok(AssocConditions {
        constraints,
        solved: solved
            .into_iter()
            .map(|(v, p)| (vars.name(v).to_string(), p))
            .collect(),
        matrix,
    })
}

/// Classifies associative case `case` (1..15).
pub fn assoc_case(case: usize, cfg: &GbConfig) -> Result<CaseReport, ClassifyError> {
    let s = assoc_subsets()
        .into_iter()
        .find(|s| s.case_number == case)
        .ok_or_else(|| ClassifyError::UnknownCase(case.to_string()))?;
    let r0 = relation_matrix(&s.columns, &[])?;
    let r = apply_associativity_conditions(&r0)?.matrix;
    let (verdict, t, gb) = decide(&r, cfg)?;
    let families = family::families_for(Pipeline::Assoc, case)
        .iter()
        .map(|f| f.check(&r, &t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CaseReport {
        pipeline: Pipeline::Assoc,
        case_id: case,
        all_index: super::all_index(&s.columns).expect("valid subset"),
        pivots: s.columns,
        parameter_count: r.vars().len(),
        verdict,
        relation: r,
        obstruction: t,
        groebner: gb,
        signature: None,
        signature_inferred: false,
        families,
    })
}

/// All 15 associative cases in case order.
pub fn assoc_all(cfg: &GbConfig) -> Result<Vec<CaseReport>, ClassifyError> {
    (1..=15).into_par_iter().map(|c| assoc_case(c, cfg)).collect()
}
