//! Ideal files: `{"variables": [...], "order": "grevlex", "ranking": [...],
//! "generators": [...]}`. The ranking lists variables smallest first and
//! defaults to the variable order. Reports use the same schema with the
//! reduced basis as `generators` plus the stage `trace`.

use serde::{Deserialize, Serialize};

use super::{GroebnerResult, IdealGenerators, StageRecord};
use crate::poly::{format_polynomial, parse_polynomial, MonomialOrder, OrderKind, PolyError, VariableSet};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub order: OrderKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranking: Option<Vec<String>>,
    pub generators: Vec<String>,
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        serde_json::from_str(text).map_err(|e| PolyError::Syntax {
            pos: 0,
            msg: format!("ideal JSON: {e}"),
        })
    }

    pub fn order(&self) -> Result<MonomialOrder, PolyError> {
        let vars = VariableSet::new(self.variables.iter().map(String::as_str))?;
        match &self.ranking {
            Some(r) => MonomialOrder::with_names(self.order, &vars, r),
            None => Ok(MonomialOrder::new(self.order, &vars)),
        }
    }

    pub fn ideal<F: Coefficient>(&self) -> Result<IdealGenerators<F>, PolyError> {
        let vars = VariableSet::new(self.variables.iter().map(String::as_str))?;
        let gens = self
            .generators
            .iter()
            .map(|g| parse_polynomial(g, &vars))
            .collect::<Result<Vec<_>, _>>()?;
        IdealGenerators::new(&vars, gens)
    }
}

/// A computed basis in the ideal-file schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerReport {
    #[serde(flatten)]
    pub ideal: IdealFile,
    pub trace: Vec<StageRecord>,
}

impl GroebnerReport {
    pub fn new<F: Coefficient>(gb: &GroebnerResult<F>) -> Self {
        let ord = gb.order();
        GroebnerReport {
            ideal: IdealFile {
                variables: gb.vars().names().to_vec(),
                order: ord.kind(),
                ranking: Some(ord.ranking_names(gb.vars())),
                generators: gb.basis().iter().map(|p| format_polynomial(p, ord)).collect(),
            },
            trace: gb.trace().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger_staged, IdealGenerators};
    use crate::scalar::Rational;

    #[test]
    fn round_trip() {
        let src = r#"{"variables": ["A", "B"], "order": "lex", "ranking": ["B", "A"], "generators": ["A^2 - B", "A*B - 1"]}"#;
        let f = IdealFile::parse(src).unwrap();
        let ord = f.order().unwrap();
        assert_eq!(ord.ranking(), [1, 0]);
        let ideal: IdealGenerators<Rational> = f.ideal().unwrap();
        let gb = buchberger_staged(&ideal, &ord);
        let report = GroebnerReport::new(&gb);
        let json = serde_json::to_string(&report).unwrap();
        let back: GroebnerReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(report.ideal.ranking.as_deref(), Some(&["B".to_string(), "A".to_string()][..]));
        assert!(!report.trace.is_empty());
    }

    #[test]
    fn bad_input() {
        assert!(IdealFile::parse("{\"variables\": []}").is_err());
        let f = IdealFile::parse(r#"{"variables": ["A"], "order": "lex", "ranking": ["Q"], "generators": []}"#).unwrap();
        assert!(f.order().is_err());
    }
}
