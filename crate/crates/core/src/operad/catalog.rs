//! Named relation spaces. Rows are integer vectors in the column order of
//! the weight-2 basis:
//!
//! ```text
//! 1 (a|-b)|-c   2 (a|-b)-|c   3 (a-|b)|-c   4 (a-|b)-|c
//! 5 a|-(b|-c)   6 a|-(b-|c)   7 a-|(b|-c)   8 a-|(b-|c)
//! ```

use thiserror::Error;

use super::{loday_dual, OperadError, QuadraticSpace};
use crate::linalg::PolyMatrix;
use crate::poly::VariableSet;
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown operad `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Operad(#[from] OperadError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedOperadEntry<F> {
    pub name: &'static str,
    /// Canonical (RCF) relation space.
    pub relations: QuadraticSpace<F>,
    pub expected_dual: Option<&'static str>,
}

type Row = [i64; 8];

const ASSOC_LEFT: Row = [1, 0, 0, 0, -1, 0, 0, 0];
const ASSOC_RIGHT: Row = [0, 0, 0, 1, 0, 0, 0, -1];
const INNER: Row = [0, 1, 0, 0, 0, -1, 0, 0];
const MIXED: Row = [0, 0, 1, 0, 0, 0, -1, 0];
const COMPAT: Row = [0, 1, 1, 0, 0, -1, -1, 0];

fn unit(j: usize) -> Row {
    let mut r = [0; 8];
    r[j - 1] = 1;
    r
}

fn rows_of(name: &str) -> Option<(&'static str, Vec<Row>, &'static str)> {
    let entry = match name {
        "two-associative" => ("two-associative", vec![ASSOC_LEFT, ASSOC_RIGHT], "dual-two-associative"),
        "dual-two-associative" => (
            "dual-two-associative",
            vec![ASSOC_LEFT, ASSOC_RIGHT, unit(2), unit(3), unit(6), unit(7)],
            "two-associative",
        ),
        "duplicial" => ("duplicial", vec![ASSOC_LEFT, ASSOC_RIGHT, INNER], "dual-duplicial"),
        "dual-duplicial" => (
            "dual-duplicial",
            vec![ASSOC_LEFT, ASSOC_RIGHT, INNER, unit(3), unit(7)],
            "duplicial",
        ),
        "completely-associative" => (
            "completely-associative",
            vec![ASSOC_LEFT, INNER, MIXED, ASSOC_RIGHT],
            "completely-associative",
        ),
        "two-compatible" => ("two-compatible", vec![ASSOC_LEFT, ASSOC_RIGHT, COMPAT], "dual-two-compatible"),
        // completely associative plus (a|-b)-|c = (a-|b)|-c; the compatibility
        // row alone already lies in the completely associative span
        "dual-two-compatible" => (
            "dual-two-compatible",
            vec![ASSOC_LEFT, INNER, MIXED, ASSOC_RIGHT, [0, 1, -1, 0, 0, 0, 0, 0]],
            "two-compatible",
        ),
        "diassociative" => (
            "diassociative",
            vec![
                ASSOC_LEFT,
                ASSOC_RIGHT,
                INNER,
                [1, 0, -1, 0, 0, 0, 0, 0],
                [0, 0, 0, 0, 0, 0, 1, -1],
            ],
            "dendriform",
        ),
        "dendriform" => (
            "dendriform",
            vec![INNER, [0, 0, 0, 1, 0, 0, -1, -1], [-1, 0, -1, 0, 1, 0, 0, 0]],
            "diassociative",
        ),
        _ => return None,
    };
    Some(entry)
}

pub fn catalog_names() -> &'static [&'static str] {
    &[
        "two-associative",
        "dual-two-associative",
        "duplicial",
        "dual-duplicial",
        "completely-associative",
        "two-compatible",
        "dual-two-compatible",
        "diassociative",
        "dendriform",
    ]
}

pub fn catalog<F: Coefficient>(name: &str) -> Result<NamedOperadEntry<F>, CatalogError> {
    let (name, rows, dual) = rows_of(name).ok_or_else(|| CatalogError::Unknown(name.to_string()))?;
    let vars = VariableSet::new(Vec::<String>::new()).expect("empty variable set");
    let consts: Vec<Vec<F>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| F::from_i64(x).expect("small integer")).collect())
        .collect();
    let m = PolyMatrix::from_constants(&vars, &consts, 8).map_err(OperadError::from)?;
    Ok(NamedOperadEntry {
        name,
        relations: QuadraticSpace::canonical(m)?,
        expected_dual: Some(dual),
    })
}

/// Whether the dual of `a` is `b`, as row spaces.
pub fn check_dual_pair<F: Coefficient>(a: &str, b: &str) -> Result<bool, CatalogError> {
    let ea = catalog::<F>(a)?;
    let eb = catalog::<F>(b)?;
    let d = loday_dual(&ea.relations)?;
    Ok(d.same_space(&eb.relations)?)
}
