use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Monomial, PolyError, VariableSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Grlex,
    Grevlex,
}

impl FromStr for OrderKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::Grlex),
            "grevlex" => Ok(OrderKind::Grevlex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
            OrderKind::Grevlex => "grevlex",
        })
    }
}

/// A monomial order: a kind plus a ranking of the variables.
///
/// The ranking lists variable indices from the smallest to the greatest
/// variable, so `A ≺ B ≺ C` is the ranking `[A, B, C]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    ascending: Vec<usize>,
    descending: Vec<usize>,
}

impl MonomialOrder {
    /// Ranking follows the variable-set order: the first variable is smallest.
    pub fn new(kind: OrderKind, vars: &Arc<VariableSet>) -> Self {
        Self::from_ranking(kind, (0..vars.len()).collect()).expect("identity ranking")
    }

    pub fn from_ranking(kind: OrderKind, ascending: Vec<usize>) -> Result<Self, PolyError> {
        let mut seen = vec![false; ascending.len()];
        for &i in &ascending {
            if i >= seen.len() || seen[i] {
                return Err(PolyError::BadRanking);
            }
            seen[i] = true;
        }
        let descending = ascending.iter().rev().copied().collect();
        Ok(MonomialOrder {
            kind,
            ascending,
            descending,
        })
    }

    /// Ranking by variable names, smallest first.
    pub fn with_names(kind: OrderKind, vars: &Arc<VariableSet>, ascending: &[impl AsRef<str>]) -> Result<Self, PolyError> {
        if ascending.len() != vars.len() {
            return Err(PolyError::BadRanking);
        }
        let idx = ascending
            .iter()
            .map(|n| {
                vars.index_of(n.as_ref())
                    .ok_or_else(|| PolyError::UnknownVariable(n.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_ranking(kind, idx)
    }

    /// Same kind with the ranking turned upside down.
    pub fn reversed(&self) -> Self {
        MonomialOrder {
            kind: self.kind,
            ascending: self.descending.clone(),
            descending: self.ascending.clone(),
        }
    }

    pub fn with_kind(&self, kind: OrderKind) -> Self {
        MonomialOrder {
            kind,
            ..self.clone()
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Variable indices from smallest to greatest.
    pub fn ranking(&self) -> &[usize] {
        &self.ascending
    }

    pub fn nvars(&self) -> usize {
        self.ascending.len()
    }

    pub fn ranking_names(&self, vars: &VariableSet) -> Vec<String> {
        self.ascending.iter().map(|&i| vars.name(i).to_string()).collect()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        debug_assert_eq!(ea.len(), self.ascending.len());
        match self.kind {
            OrderKind::Lex => self.lex(ea, eb),
            OrderKind::Grlex => a.degree().cmp(&b.degree()).then_with(|| self.lex(ea, eb)),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in &self.ascending {
                    if ea[v] != eb[v] {
                        // the smaller power of the smallest variable wins
                        return eb[v].cmp(&ea[v]);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Checked comparison that rejects monomials of the wrong arity.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.nvars() != self.nvars() || b.nvars() != self.nvars() {
            return Err(PolyError::VariableMismatch);
        }
        Ok(self.compare(a, b))
    }

    fn lex(&self, ea: &[u32], eb: &[u32]) -> Ordering {
        for &v in &self.descending {
            match ea[v].cmp(&eb[v]) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    /// Textbook grevlex on exponent vectors listed greatest variable first:
    /// higher degree wins; on a tie the rightmost nonzero entry of a - b is
    /// negative iff a > b.
    fn textbook_grevlex(a: &[u32], b: &[u32]) -> Ordering {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        if da != db {
            return da.cmp(&db);
        }
        for i in (0..a.len()).rev() {
            let d = a[i] as i64 - b[i] as i64;
            if d != 0 {
                return if d < 0 { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }

    #[test]
    fn grevlex_matches_textbook_on_all_degree_two_monomials() {
        // variables A ≺ B, stored as [A, B]; textbook vectors are [B, A]
        let ord = MonomialOrder::from_ranking(OrderKind::Grevlex, vec![0, 1]).unwrap();
        let all: Vec<[u32; 2]> = vec![[2, 0], [1, 1], [0, 2], [1, 0], [0, 1], [0, 0]];
        for a in &all {
            for b in &all {
                let ours = ord.compare(&m(a), &m(b));
                let theirs = textbook_grevlex(&[a[1], a[0]], &[b[1], b[0]]);
                assert_eq!(ours, theirs, "{a:?} vs {b:?}");
            }
        }
        // with B the greater variable: A^2 ≺ AB ≺ B^2
        assert_eq!(ord.compare(&m(&[1, 1]), &m(&[2, 0])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[1, 1]), &m(&[0, 2])), Ordering::Less);
    }

    #[test]
    fn grevlex_and_grlex_differ_in_three_variables() {
        // x ≻ y ≻ z: grlex looks at x first, so x z^2 ≻ y^3; grevlex looks
        // at z first and penalises it, so y^3 ≻ x z^2
        let ord = MonomialOrder::from_ranking(OrderKind::Grevlex, vec![2, 1, 0]).unwrap();
        let xz2 = m(&[1, 0, 2]);
        let y3 = m(&[0, 3, 0]);
        assert_eq!(ord.compare(&y3, &xz2), Ordering::Greater);
        assert_eq!(ord.with_kind(OrderKind::Grlex).compare(&y3, &xz2), Ordering::Less);
    }

    #[test]
    fn unit_is_minimal() {
        for kind in [OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex] {
            let ord = MonomialOrder::from_ranking(kind, vec![1, 0, 2]).unwrap();
            for e in [[1, 0, 0], [0, 0, 1], [2, 1, 0]] {
                assert_eq!(ord.compare(&m(&[0, 0, 0]), &m(&e)), Ordering::Less);
            }
        }
    }

    #[test]
    fn lex_variable_dominates_powers() {
        let ord = MonomialOrder::from_ranking(OrderKind::Lex, vec![0, 1]).unwrap();
        assert_eq!(ord.compare(&m(&[2, 0]), &m(&[0, 1])), Ordering::Less);
        assert_eq!(ord.compare(&m(&[9, 0]), &m(&[0, 1])), Ordering::Less);
    }

    #[test]
    fn bad_rankings() {
        assert!(MonomialOrder::from_ranking(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(MonomialOrder::from_ranking(OrderKind::Lex, vec![0, 2]).is_err());
        let ord = MonomialOrder::from_ranking(OrderKind::Lex, vec![0, 1]).unwrap();
        assert!(ord.try_compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn kind_round_trips_through_strings() {
        for k in [OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex] {
            assert_eq!(k.to_string().parse::<OrderKind>().unwrap(), k);
        }
        assert!("deglex".parse::<OrderKind>().is_err());
    }
}
