//! Matrix files.
//!
//! JSON: `{"cols": 8, "rows": [["1", "0", "W1", ...], ...]}` with an optional
//! `"variables"` list; without it the variables are the identifiers in order
//! of first appearance. Text: one row per line, entries separated by commas;
//! blank lines and lines starting with `#` are skipped.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{LinalgError, PolyMatrix};
use crate::poly::{format_polynomial, parse_polynomial, MonomialOrder, OrderKind, PolyError, VariableSet};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub cols: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    pub rows: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix<F: Coefficient>(m: &PolyMatrix<F>) -> Self {
        let ord = display_order(m.vars());
        MatrixFile {
            cols: m.ncols(),
            variables: Some(m.vars().names().to_vec()),
            rows: (0..m.nrows())
                .map(|i| m.row(i).iter().map(|e| format_polynomial(e, &ord)).collect())
                .collect(),
        }
    }

    pub fn to_matrix<F: Coefficient>(&self) -> Result<PolyMatrix<F>, LinalgError> {
        let vars = match &self.variables {
            Some(v) => VariableSet::new(v.iter().map(String::as_str))?,
            None => VariableSet::new(identifiers(self.rows.iter().flatten().map(String::as_str)))?,
        };
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse_polynomial(s, &vars)).collect::<Result<Vec<_>, PolyError>>())
            .collect::<Result<Vec<_>, _>>()?;
        PolyMatrix::from_rows(&vars, rows, self.cols)
    }
}

fn display_order(vars: &Arc<VariableSet>) -> MonomialOrder {
    MonomialOrder::new(OrderKind::Grlex, vars).reversed()
}

fn identifiers<'a>(texts: impl Iterator<Item = &'a str>) -> Vec<String> {
    let mut seen: Vec<String> = Vec::new();
    for t in texts {
        let b = t.as_bytes();
        let mut i = 0;
        while i < b.len() {
            if b[i].is_ascii_alphabetic() {
                let start = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                let id = &t[start..i];
                if !seen.iter().any(|s| s == id) {
                    seen.push(id.to_string());
                }
            } else if b[i].is_ascii_digit() {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
            } else {
                i += 1;
            }
        }
    }
    seen
}

pub fn parse_matrix_json<F: Coefficient>(text: &str) -> Result<PolyMatrix<F>, LinalgError> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| PolyError::Syntax {
        pos: 0,
        msg: format!("matrix JSON: {e}"),
    })?;
    file.to_matrix()
}

pub fn parse_matrix_text<F: Coefficient>(text: &str) -> Result<PolyMatrix<F>, LinalgError> {
    let rows: Vec<Vec<String>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(|e| e.trim().to_string()).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    MatrixFile {
        cols,
        variables: None,
        rows,
    }
    .to_matrix()
}

pub fn format_matrix_text<F: Coefficient>(m: &PolyMatrix<F>) -> String {
    let file = MatrixFile::from_matrix(m);
    let mut out = String::new();
    for r in file.rows {
        out.push_str(&r.join(", "));
        out.push('\n');
    }
    out
}
