//! Text form of polynomials.
//!
//! ```text
//! expr   := term (('+' | '-') term)*        leading '-' allowed
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := IDENT ('^' UINT)?
//! coeff  := INT ('/' UINT)?
//! ```

use std::sync::Arc;

use super::{Monomial, MonomialOrder, PolyError, Polynomial, VariableSet};
use crate::scalar::Coefficient;

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if f(c) {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
        &self.src[start..self.pos]
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }
}

pub fn parse_polynomial<F: Coefficient>(text: &str, vars: &Arc<VariableSet>) -> Result<Polynomial<F>, PolyError> {
    let mut lx = Lexer { src: text, pos: 0 };
    let mut terms = Vec::new();
    let mut negate = false;
    if lx.peek() == Some('-') {
        lx.bump();
        negate = true;
    }
    loop {
        let (m, c) = parse_term::<F>(&mut lx, vars)?;
        terms.push((m, if negate { -c } else { c }));
        match lx.peek() {
            None => break,
            Some('+') => {
                lx.bump();
                negate = false;
            }
            Some('-') => {
                lx.bump();
                negate = true;
            }
            Some(c) => return lx.err(format!("unexpected `{c}`")),
        }
    }
    Ok(Polynomial::from_terms(vars, terms))
}

fn parse_term<F: Coefficient>(lx: &mut Lexer<'_>, vars: &Arc<VariableSet>) -> Result<(Monomial, F), PolyError> {
    let mut exps = vec![0u32; vars.len()];
    let mut coeff = F::one();
    match lx.peek() {
        Some(c) if c.is_ascii_digit() => {
            let num = lx.take_while(|c| c.is_ascii_digit());
            let den = if lx.peek() == Some('/') {
                lx.bump();
                lx.skip_ws();
                let d = lx.take_while(|c| c.is_ascii_digit());
                if d.is_empty() {
                    return lx.err("expected denominator");
                }
                Some(d)
            } else {
                None
            };
            coeff = match F::from_decimal_ratio(num, den) {
                Some(c) => c,
                None => return lx.err("zero denominator"),
            };
            if lx.peek() != Some('*') {
                return Ok((Monomial::from_exponents(exps), coeff));
            }
            lx.bump();
            parse_factor(lx, vars, &mut exps)?;
        }
        Some(c) if c.is_ascii_alphabetic() => parse_factor(lx, vars, &mut exps)?,
        Some(c) => return lx.err(format!("expected a term, found `{c}`")),
        None => return lx.err("expected a term, found end of input"),
    }
    while lx.peek() == Some('*') {
        lx.bump();
        parse_factor(lx, vars, &mut exps)?;
    }
    Ok((Monomial::from_exponents(exps), coeff))
}

fn parse_factor(lx: &mut Lexer<'_>, vars: &Arc<VariableSet>, exps: &mut [u32]) -> Result<(), PolyError> {
    lx.skip_ws();
    let start = lx.pos;
    let first_ok = matches!(lx.src[lx.pos..].chars().next(), Some(c) if c.is_ascii_alphabetic());
    if !first_ok {
        return lx.err("expected a variable");
    }
    let name = lx.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
    let idx = match vars.index_of(name) {
        Some(i) => i,
        None => {
            lx.pos = start;
            return Err(PolyError::UnknownVariable(name.to_string()));
        }
    };
    let mut e = 1u32;
    if lx.peek() == Some('^') {
        lx.bump();
        lx.skip_ws();
        let digits = lx.take_while(|c| c.is_ascii_digit());
        e = match digits.parse() {
            Ok(v) => v,
            Err(_) => return lx.err("expected an exponent"),
        };
    }
    exps[idx] += e;
    Ok(())
}

/// Canonical text: terms in descending `ord`, factors in variable-set order.
pub fn format_polynomial<F: Coefficient>(f: &Polynomial<F>, ord: &MonomialOrder) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<&(Monomial, F)> = f.terms().iter().collect();
    terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let mono = format_monomial(m, f.vars());
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

fn format_monomial(m: &Monomial, vars: &VariableSet) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}
