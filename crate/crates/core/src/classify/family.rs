//! Explicit solution families. Algebraic numbers are auxiliary variables
//! constrained by side relations (`iota^2 + 1`, `s^2 + lambda^2 - 1`), so
//! every check is exact reduction to zero.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{data, ClassifyError, Pipeline};
use crate::groebner::{groebner_basis, GroebnerResult, IdealGenerators, Strategy};
use crate::linalg::{leading_columns, PolyMatrix};
use crate::operad::{loday_dual_raw, self_dual_obstruction};
use crate::poly::{parse_polynomial, MonomialOrder, OrderKind, Polynomial, VariableSet};
use crate::scalar::Rational;

type Poly = Polynomial<Rational>;

#[derive(Debug, Clone)]
pub struct SolutionFamily {
    pub name: String,
    pub pipeline: Pipeline,
    pub case_id: usize,
    /// Ring of the auxiliary variables.
    pub auxiliary: Arc<VariableSet>,
    /// Parameter name → value in the auxiliary ring.
    pub assignments: BTreeMap<String, Poly>,
    pub side_relations: IdealGenerators<Rational>,
}

/// Outcome of checking one family against its case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub name: String,
    /// Every entry of `T` vanishes modulo the side relations.
    pub verified: bool,
    /// The specialized relation space equals its own dual modulo the side
    /// relations.
    pub dual_fixed: bool,
}

/// All bundled families.
pub fn solution_families() -> Result<Vec<SolutionFamily>, ClassifyError> {
    data::family_records().iter().map(parse_record).collect()
}

pub(crate) fn families_for(pipeline: Pipeline, case: usize) -> Vec<SolutionFamily> {
    data::family_records()
        .iter()
        .filter(|r| r.pipeline == pipeline && r.case == case)
        .map(|r| parse_record(r).expect("bundled family parses"))
        .collect()
}

fn parse_record(r: &data::FamilyRecord) -> Result<SolutionFamily, ClassifyError> {
    let aux = VariableSet::new(r.auxiliary.iter().map(String::as_str))?;
    let mut assignments = BTreeMap::new();
    for (k, v) in &r.assignments {
        assignments.insert(k.clone(), parse_polynomial::<Rational>(v, &aux)?);
    }
    let side = r
        .side_relations
        .iter()
        .map(|s| parse_polynomial::<Rational>(s, &aux))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SolutionFamily {
        name: r.name.clone(),
        pipeline: r.pipeline,
        case_id: r.case,
        assignments,
        side_relations: IdealGenerators::new(&aux, side)?,
        auxiliary: aux,
    })
}

impl SolutionFamily {
    fn side_basis(&self) -> GroebnerResult<Rational> {
        let ord = MonomialOrder::new(OrderKind::Grevlex, &self.auxiliary);
        groebner_basis(&self.side_relations, &ord, Strategy::Pairs)
    }

    /// Images of the variables of `vars` in the auxiliary ring.
    fn images(&self, vars: &VariableSet) -> Result<Vec<Poly>, ClassifyError> {
        vars.names()
            .iter()
            .map(|n| {
                self.assignments
                    .get(n)
                    .cloned()
                    .ok_or_else(|| ClassifyError::UnassignedParameter(n.clone()))
            })
            .collect()
    }

    /// Substitutes the family into a matrix over the parameter ring.
    pub fn specialize(&self, m: &PolyMatrix<Rational>) -> Result<PolyMatrix<Rational>, ClassifyError> {
        let images = self.images(m.vars())?;
        Ok(m.substitute(&self.auxiliary, &images)?)
    }

    /// Every entry of `t` vanishes after substitution, modulo the side
    /// relations.
    pub fn verify(&self, t: &PolyMatrix<Rational>) -> Result<bool, ClassifyError> {
        let gb = self.side_basis();
        let s = self.specialize(t)?;
        Ok(s.entries().iter().all(|e| gb.contains(e)))
    }

    /// Specializes `r`, dualizes it over the auxiliary ring, and checks that
    /// each space reduces the other to zero modulo the side relations.
    pub fn verify_dual_fixed(&self, r: &PolyMatrix<Rational>) -> Result<bool, ClassifyError> {
        let gb = self.side_basis();
        let rs = self.specialize(r)?;
        let dual = loday_dual_raw(&rs)?;
        let forward = self_dual_obstruction(&rs)?;
        if !forward.entries().iter().all(|e| gb.contains(e)) {
            return Ok(false);
        }
        // dual row k has a unit entry in the k-th free column of R and zeros
        // in the other free columns; use those to clear R's rows
        let pivots = leading_columns(&rs)?;
        let free: Vec<usize> = (0..rs.ncols()).filter(|j| !pivots.contains(j)).collect();
        for i in 0..rs.nrows() {
            let mut row: Vec<Poly> = rs.row(i).to_vec();
            for (k, &f) in free.iter().enumerate() {
                let c = row[f].clone();
                if c.is_zero() {
                    continue;
                }
                for (j, slot) in row.iter_mut().enumerate() {
                    *slot = &*slot - &(&c * dual.get(k, j));
                }
            }
            if !row.iter().all(|e| gb.contains(e)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn check(&self, r: &PolyMatrix<Rational>, t: &PolyMatrix<Rational>) -> Result<FamilyCheck, ClassifyError> {
        Ok(FamilyCheck {
            name: self.name.clone(),
            verified: self.verify(t)?,
            dual_fixed: self.verify_dual_fixed(r)?,
        })
    }
}
