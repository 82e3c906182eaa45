//! Classification drivers: every rank-4 RCF pattern in 8 columns, the
//! associative specializations, and the one-operation warm-up.
//!
//! Three numbering spaces are in use and every report carries its pivot set:
//!
//! * all 70 four-subsets of `{1..8}` in lex order,
//! * the 35 subsets containing column 1 (the usual case numbers),
//! * the 15 subsets containing columns 1 and 4 (associative cases).

pub mod assoc;
mod data;
pub mod family;
pub mod one_op;
mod summary;

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{groebner_basis, GroebnerResult, IdealGenerators, Strategy};
use crate::linalg::{build_parametric_rcf, monic_diagonal_normalize, LinalgError, ParamNaming, PivotPattern, PolyMatrix};
use crate::operad::{obstruction_block, self_dual_obstruction, OperadError};
use crate::poly::{MonomialOrder, OrderKind, PolyError, Polynomial, VariableSet};
use crate::scalar::Rational;

pub use data::{self_dual_cases, SelfDualCase, SignaturePair};
pub use family::{solution_families, FamilyCheck, SolutionFamily};
pub use summary::{CaseSummary, ClassificationSummary, FamilySummary};

type Poly = Polynomial<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("unknown case {0}")]
    UnknownCase(String),
    #[error("case {0} does not define a family of self-dual operads")]
    NotSelfDualCase(usize),
    #[error("parameter `{0}` has no assigned value")]
    UnassignedParameter(String),
    #[error("associativity conditions are inconsistent: {0}")]
    Inconsistent(String),
    #[error("associativity condition is not affine-linear: {0}")]
    NonLinear(String),
    #[error("bundled case data: {0}")]
    Data(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Operad(#[from] OperadError),
}

/// A strictly increasing set of 1-based pivot columns together with its
/// position in the enumeration it came from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubsetChoice {
    pub columns: Vec<usize>,
    pub case_number: usize,
}

/// All `r`-subsets of `{1..n}` containing `must_contain`, in lex order,
/// numbered from 1.
pub fn enumerate_subsets(r: usize, n: usize, must_contain: &[usize]) -> Vec<SubsetChoice> {
    fn rec(start: usize, r: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for j in start..=n {
            cur.push(j);
            rec(j + 1, r, n, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    rec(1, r, n, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|s| must_contain.iter().all(|c| s.contains(c)))
        .enumerate()
        .map(|(k, columns)| SubsetChoice {
            columns,
            case_number: k + 1,
        })
        .collect()
}

/// Free parameters of the RCF pattern with the given 1-based pivots:
/// `Σ (n − j_i) − (r − i)`.
pub fn parameter_count(columns: &[usize], n: usize) -> usize {
    let r = columns.len();
    columns
        .iter()
        .enumerate()
        .map(|(i, &j)| (n - j) - (r - 1 - i))
        .sum()
}

/// Position of a 4-subset among the 35 that contain column 1.
pub fn contains_one_number(columns: &[usize]) -> Option<usize> {
    enumerate_subsets(4, 8, &[1])
        .into_iter()
        .find(|s| s.columns == columns)
        .map(|s| s.case_number)
}

/// Position of a 4-subset among all 70.
pub fn all_index(columns: &[usize]) -> Option<usize> {
    enumerate_subsets(4, 8, &[])
        .into_iter()
        .find(|s| s.columns == columns)
        .map(|s| s.case_number)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// `T` has a nonzero constant entry.
    StructurallyRejected,
    /// The entries of `T` generate the whole ring.
    UnitIdeal,
    /// Proper ideal: a nonempty family of self-dual operads.
    SelfDualFamily,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::StructurallyRejected => "structurally-rejected",
            Verdict::UnitIdeal => "unit-ideal",
            Verdict::SelfDualFamily => "self-dual-family",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pipeline {
    Nonassoc,
    Assoc,
}

/// Variable ranking used to build the monomial order for a parameter ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ranking {
    /// Column-major parameter order with the first parameter greatest
    /// (`W1 ≻ W2 ≻ ⋯ ≻ Z4`).
    ColumnMajorDescending,
    /// Column-major order with the first parameter smallest.
    ColumnMajorAscending,
    /// Explicit ranking, smallest first; unlisted variables are an error.
    Explicit(Vec<String>),
}

/// Monomial order and strategy for every Gröbner computation of a run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbConfig {
    pub kind: OrderKind,
    pub ranking: Ranking,
    pub strategy: Strategy,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            kind: OrderKind::Grevlex,
            ranking: Ranking::ColumnMajorDescending,
            strategy: Strategy::Pairs,
        }
    }
}

impl GbConfig {
    pub fn order(&self, vars: &Arc<VariableSet>) -> Result<MonomialOrder, ClassifyError> {
        Ok(match &self.ranking {
            Ranking::ColumnMajorAscending => MonomialOrder::new(self.kind, vars),
            Ranking::ColumnMajorDescending => MonomialOrder::new(self.kind, vars).reversed(),
            Ranking::Explicit(names) => MonomialOrder::with_names(self.kind, vars, names)?,
        })
    }

    pub fn describe(&self) -> String {
        let ranking = match &self.ranking {
            Ranking::ColumnMajorDescending => "column-major, first parameter greatest".to_string(),
            Ranking::ColumnMajorAscending => "column-major, first parameter smallest".to_string(),
            Ranking::Explicit(v) => format!("explicit {}", v.join("<")),
        };
        format!("{}, {}", self.kind, ranking)
    }
}

/// Verdict and evidence for one case.
#[derive(Debug, Clone)]
pub struct CaseReport {
    pub pipeline: Pipeline,
    /// Number within the pipeline's own numbering (contains-1 for the
    /// nonassociative pipeline when column 1 is a pivot, otherwise the
    /// all-70 index; contains-{1,4} for the associative one).
    pub case_id: usize,
    pub all_index: usize,
    pub pivots: Vec<usize>,
    pub parameter_count: usize,
    pub verdict: Verdict,
    pub relation: PolyMatrix<Rational>,
    pub obstruction: PolyMatrix<Rational>,
    pub groebner: Option<GroebnerResult<Rational>>,
    pub signature: Option<SignatureCheck>,
    pub signature_inferred: bool,
    pub families: Vec<FamilyCheck>,
}

impl CaseReport {
    pub fn signature_verified(&self) -> Option<bool> {
        self.signature.as_ref().map(|s| s.ideal_equal)
    }
}

/// Result of comparing `T` with `PᵗDP − E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureCheck {
    /// Same ideal (equal reduced Gröbner bases).
    pub ideal_equal: bool,
    /// The square block of `T`, rows scaled to monic diagonals, equals
    /// `PᵗDP − E` entry by entry.
    pub entrywise: bool,
}

/// Distinct nonzero entries of a matrix as ideal generators.
pub fn entry_ideal(m: &PolyMatrix<Rational>) -> IdealGenerators<Rational> {
    let mut gens: Vec<Poly> = Vec::new();
    for e in m.entries() {
        if !e.is_zero() && !gens.contains(e) {
            gens.push(e.clone());
        }
    }
    IdealGenerators::new(m.vars(), gens).expect("entries share the matrix ring")
}

/// Verdict, obstruction `T`, and the basis unless structurally rejected.
pub type Decision = (Verdict, PolyMatrix<Rational>, Option<GroebnerResult<Rational>>);

/// Obstruction, verdict and (unless structurally rejected) Gröbner basis.
pub fn decide(
    r: &PolyMatrix<Rational>,
    cfg: &GbConfig,
) -> Result<Decision, ClassifyError> {
    let t = self_dual_obstruction(r)?;
    if !t.nonzero_constants().is_empty() {
        return Ok((Verdict::StructurallyRejected, t, None));
    }
    let ord = cfg.order(r.vars())?;
    let gb = groebner_basis(&entry_ideal(&t), &ord, cfg.strategy);
    let verdict = if gb.is_unit() { Verdict::UnitIdeal } else { Verdict::SelfDualFamily };
    Ok((verdict, t, Some(gb)))
}

/// Parametric RCF with W/X/Y/Z naming for 1-based pivots.
pub fn relation_matrix(pivots: &[usize], zeroed: &[(usize, usize)]) -> Result<PolyMatrix<Rational>, ClassifyError> {
    let base = PivotPattern::from_one_based(pivots)?;
    let zeroed0: Vec<(usize, usize)> = zeroed.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    let pattern = PivotPattern::new(base.pivots().to_vec(), zeroed0)?;
    Ok(build_parametric_rcf(&pattern, 8, ParamNaming::Wxyz)?)
}

/// The 4×4 block of `R` in its non-pivot columns.
pub fn parameter_block(r: &PolyMatrix<Rational>, pivots: &[usize]) -> PolyMatrix<Rational> {
    let zero_based: Vec<usize> = pivots.iter().map(|j| j - 1).collect();
    obstruction_block(r, &zero_based)
}

/// `P` for a case of the self-dual set, with that case's zeroed slots.
pub fn parameter_matrix(case: usize) -> Result<PolyMatrix<Rational>, ClassifyError> {
    let c = data::self_dual_case(case).ok_or(ClassifyError::NotSelfDualCase(case))?;
    let r = relation_matrix(&c.pivots, &c.zeroed_slots)?;
    Ok(parameter_block(&r, &c.pivots))
}

pub fn signature_for(case: usize) -> Result<SignaturePair, ClassifyError> {
    data::self_dual_case(case)
        .map(|c| c.signature.clone())
        .ok_or(ClassifyError::NotSelfDualCase(case))
}

/// `PᵗDP − E` over the ring of `p`.
pub fn signature_form(p: &PolyMatrix<Rational>, sig: &SignaturePair) -> Result<PolyMatrix<Rational>, ClassifyError> {
    let to_q = |v: &[i64]| v.iter().map(|&x| Rational::from_integer(x.into())).collect::<Vec<_>>();
    let d = PolyMatrix::diagonal(p.vars(), &to_q(&sig.d));
    let e = PolyMatrix::diagonal(p.vars(), &to_q(&sig.e));
    Ok(p.transpose().mul(&d)?.mul(p)?.sub(&e)?)
}

fn check_signature(
    r: &PolyMatrix<Rational>,
    pivots: &[usize],
    t: &PolyMatrix<Rational>,
    gb: &GroebnerResult<Rational>,
    sig: &SignaturePair,
    cfg: &GbConfig,
) -> Result<SignatureCheck, ClassifyError> {
    let p = parameter_block(r, pivots);
    let form = signature_form(&p, sig)?;
    let ord = gb.order();
    let other = groebner_basis(&entry_ideal(&form), ord, cfg.strategy);
    let ideal_equal = other.basis() == gb.basis();
    let (normalized, _) = monic_diagonal_normalize(&parameter_block(t, pivots), ord)?;
    Ok(SignatureCheck {
        ideal_equal,
        entrywise: normalized == form,
    })
}

/// `ideal(T) = ideal(PᵗDP − E)` for a case of the self-dual set.
pub fn verify_signature_equivalence(case: usize, cfg: &GbConfig) -> Result<SignatureCheck, ClassifyError> {
    let c = data::self_dual_case(case).ok_or(ClassifyError::NotSelfDualCase(case))?;
    let r = relation_matrix(&c.pivots, &c.zeroed_slots)?;
    let (_, t, gb) = decide(&r, cfg)?;
    let gb = gb.ok_or(ClassifyError::NotSelfDualCase(case))?;
    check_signature(&r, &c.pivots, &t, &gb, &c.signature, cfg)
}

/// Runs the pipeline on the pattern with the given 1-based pivots.
pub fn nonassoc_case_by_pivots(pivots: &[usize], cfg: &GbConfig) -> Result<CaseReport, ClassifyError> {
    let all = all_index(pivots).ok_or_else(|| ClassifyError::UnknownCase(format!("{pivots:?}")))?;
    let number = contains_one_number(pivots);
    let known = number.and_then(data::self_dual_case);
    let zeroed = known.map(|c| c.zeroed_slots.clone()).unwrap_or_default();
    let r = relation_matrix(pivots, &zeroed)?;
    let (verdict, t, gb) = decide(&r, cfg)?;
    let mut signature = None;
    let mut families = Vec::new();
    if let (Some(c), Some(g)) = (known, gb.as_ref()) {
        if verdict == Verdict::SelfDualFamily {
            signature = Some(check_signature(&r, pivots, &t, g, &c.signature, cfg)?);
            for fam in family::families_for(Pipeline::Nonassoc, c.case) {
                families.push(fam.check(&r, &t)?);
            }
        }
    }
    Ok(CaseReport {
        pipeline: Pipeline::Nonassoc,
        case_id: number.unwrap_or(all),
        all_index: all,
        pivots: pivots.to_vec(),
        parameter_count: r.vars().len(),
        verdict,
        relation: r,
        obstruction: t,
        groebner: gb,
        signature,
        signature_inferred: known.is_some_and(|c| c.signature_inferred),
        families,
    })
}

/// Case by its number among the 35 patterns containing column 1.
pub fn nonassoc_case(case: usize, cfg: &GbConfig) -> Result<CaseReport, ClassifyError> {
    let s = enumerate_subsets(4, 8, &[1])
        .into_iter()
        .find(|s| s.case_number == case)
        .ok_or_else(|| ClassifyError::UnknownCase(case.to_string()))?;
    nonassoc_case_by_pivots(&s.columns, cfg)
}

/// All 70 patterns, in all-70 order. Cases run in parallel on the current
/// rayon pool; the output order does not depend on scheduling.
pub fn nonassoc_all(cfg: &GbConfig) -> Result<Vec<CaseReport>, ClassifyError> {
    enumerate_subsets(4, 8, &[])
        .par_iter()
        .map(|s| nonassoc_case_by_pivots(&s.columns, cfg))
        .collect()
}

/// Ideal generated by the entries of `T` for a pattern, with A, B, C, …
/// naming in row-major order.
pub fn letter_obstruction_ideal(pivots: &[usize]) -> Result<IdealGenerators<Rational>, ClassifyError> {
    let pattern = PivotPattern::from_one_based(pivots)?;
    let r = build_parametric_rcf(&pattern, 8, ParamNaming::Letters)?;
    let t = self_dual_obstruction(&r)?;
    Ok(entry_ideal(&t))
}
