//! The bundled case tables.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

const CASES_JSON: &str = include_str!("../../data/cases.json");

/// Diagonal ±1 matrices `D` (rows of `P`) and `E` (columns of `P`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignaturePair {
    pub d: Vec<i64>,
    pub e: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SelfDualCase {
    pub case: usize,
    pub pivots: Vec<usize>,
    /// Extra zero slots `(row, col)`, 1-based, beyond the RCF shape.
    pub zeroed_slots: Vec<(usize, usize)>,
    pub signature: SignaturePair,
    /// Signature borrowed from a case with the same sign pattern rather
    /// than listed directly.
    #[serde(default)]
    pub signature_inferred: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub(crate) struct FamilyRecord {
    pub name: String,
    pub pipeline: super::Pipeline,
    pub case: usize,
    pub auxiliary: Vec<String>,
    pub side_relations: Vec<String>,
    pub assignments: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase")]
struct CaseTables {
    self_dual_cases: Vec<SelfDualCase>,
    families: Vec<FamilyRecord>,
}

fn tables() -> &'static CaseTables {
    static TABLES: OnceLock<CaseTables> = OnceLock::new();
    TABLES.get_or_init(|| serde_json::from_str(CASES_JSON).expect("bundled case data is valid JSON"))
}

/// The cases whose obstruction ideal is proper, in case order.
pub fn self_dual_cases() -> &'static [SelfDualCase] {
    &tables().self_dual_cases
}

pub(crate) fn self_dual_case(case: usize) -> Option<&'static SelfDualCase> {
    self_dual_cases().iter().find(|c| c.case == case)
}

pub(crate) fn family_records() -> &'static [FamilyRecord] {
    &tables().families
}
