//! Machine-readable summaries. Serialized through `serde_json::Value`, whose
//! maps keep keys sorted, so output is byte-stable.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{CaseReport, FamilyCheck, GbConfig, Pipeline, Verdict};
use crate::poly::format_polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilySummary {
    pub name: String,
    pub verified: bool,
    pub dual_fixed: bool,
}

impl From<&FamilyCheck> for FamilySummary {
    fn from(f: &FamilyCheck) -> Self {
        FamilySummary {
            name: f.name.clone(),
            verified: f.verified,
            dual_fixed: f.dual_fixed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseSummary {
    pub case_id: usize,
    pub all_index: usize,
    pub pivots: Vec<usize>,
    pub verdict: Verdict,
    pub parameter_count: usize,
    pub gb_size: Option<usize>,
    /// Last basis element under the computation order.
    pub gb_greatest: Option<String>,
    /// Last basis element when the basis is sorted lexicographically.
    pub gb_greatest_lex: Option<String>,
    pub signature_verified: Option<bool>,
    pub signature_inferred: bool,
    pub families: Vec<FamilySummary>,
}

impl From<&CaseReport> for CaseSummary {
    fn from(r: &CaseReport) -> Self {
        let gb = r.groebner.as_ref();
        let fmt = |p: &crate::Poly| format_polynomial(p, gb.expect("basis present").order());
        CaseSummary {
            case_id: r.case_id,
            all_index: r.all_index,
            pivots: r.pivots.clone(),
            verdict: r.verdict,
            parameter_count: r.parameter_count,
            gb_size: gb.map(|g| g.len()),
            gb_greatest: gb.and_then(|g| g.greatest()).map(fmt),
            gb_greatest_lex: gb.and_then(|g| g.greatest_lex()).map(|p| fmt(&p)),
            signature_verified: r.signature_verified(),
            signature_inferred: r.signature_inferred,
            families: r.families.iter().map(FamilySummary::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassificationSummary {
    pub pipeline: Pipeline,
    pub configuration: String,
    pub counts: BTreeMap<Verdict, usize>,
    pub cases: Vec<CaseSummary>,
}

impl ClassificationSummary {
    pub fn new(pipeline: Pipeline, cfg: &GbConfig, reports: &[CaseReport]) -> Self {
        let mut counts = BTreeMap::new();
        for r in reports {
            *counts.entry(r.verdict).or_insert(0) += 1;
        }
        ClassificationSummary {
            pipeline,
            configuration: cfg.describe(),
            counts,
            cases: reports.iter().map(CaseSummary::from).collect(),
        }
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("summary serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}
