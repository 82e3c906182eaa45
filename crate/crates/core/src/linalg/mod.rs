//! Matrices with polynomial entries and the division-free row operations used
//! by Loday's dual algorithm.
//!
//! Rows and columns are 0-based in the API. Reports and file formats number
//! them from 1, matching the column order of the quadratic basis.

mod io;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::poly::{leading_term, MonomialOrder, PolyError, Polynomial, VariableSet};
use crate::scalar::Coefficient;

pub use io::{format_matrix_text, parse_matrix_json, parse_matrix_text, MatrixFile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("rows have different lengths")]
    Ragged,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("entry ({row}, {col}) is not constant")]
    NonConstant { row: usize, col: usize },
    #[error("row {row}: pivot structure violated ({reason})")]
    BadPivot { row: usize, reason: String },
    #[error("invalid pivot pattern: {0}")]
    InvalidPattern(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A dense `rows × cols` matrix of polynomials over one variable set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix<F> {
    vars: Arc<VariableSet>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Coefficient> PolyMatrix<F> {
    pub fn from_rows(vars: &Arc<VariableSet>, rows: Vec<Vec<Polynomial<F>>>, cols: usize) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::Ragged);
            }
            for e in row {
                if e.vars().as_ref() != vars.as_ref() {
                    return Err(PolyError::VariableMismatch.into());
                }
                entries.push(e);
            }
        }
        Ok(PolyMatrix {
            vars: vars.clone(),
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn zeros(vars: &Arc<VariableSet>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(vars); rows * cols],
        }
    }

    pub fn identity(vars: &Arc<VariableSet>, n: usize) -> Self {
        let mut m = Self::zeros(vars, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(vars));
        }
        m
    }

    pub fn from_constants(vars: &Arc<VariableSet>, rows: &[Vec<F>], cols: usize) -> Result<Self, LinalgError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| Polynomial::constant(vars, c.clone())).collect())
            .collect();
        Self::from_rows(vars, rows, cols)
    }

    /// Diagonal matrix with the given constants.
    pub fn diagonal(vars: &Arc<VariableSet>, diag: &[F]) -> Self {
        let mut m = Self::zeros(vars, diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m.set(i, i, Polynomial::constant(vars, d.clone()));
        }
        m
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        assert!(p.vars().as_ref() == self.vars.as_ref(), "entry over a different ring");
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial<F>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Polynomial<F>>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|e| e.is_constant())
    }

    /// Entries as field elements; fails at the first non-constant one.
    pub fn to_constants(&self) -> Result<Vec<Vec<F>>, LinalgError> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).as_constant().ok_or(LinalgError::NonConstant { row: i, col: j }))
                    .collect()
            })
            .collect()
    }

    pub fn map(&self, f: impl Fn(&Polynomial<F>) -> Polynomial<F>) -> Self {
        PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.vars, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.check_ring(other)?;
        let mut out = Self::zeros(&self.vars, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.vars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(LinalgError::DimensionMismatch("subtraction".into()));
        }
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, o) in out.entries.iter_mut().zip(&other.entries) {
            *e = &*e - o;
        }
        Ok(out)
    }

    fn check_ring(&self, other: &Self) -> Result<(), LinalgError> {
        if self.vars.as_ref() != other.vars.as_ref() {
            return Err(PolyError::VariableMismatch.into());
        }
        Ok(())
    }

    pub fn scale_row(&mut self, i: usize, c: &F) {
        for j in 0..self.cols {
            let v = self.get(i, j).scale(c);
            self.set(i, j, v);
        }
    }

    /// Rows `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch("stacking needs equal column counts".into()));
        }
        self.check_ring(other)?;
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Keeps the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(&self.vars, self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out.set(i, k, self.get(i, j).clone());
            }
        }
        out
    }

    /// Applies a ring map entrywise (see [`Polynomial::substitute`]).
    pub fn substitute(&self, target: &Arc<VariableSet>, images: &[Polynomial<F>]) -> Result<Self, LinalgError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.substitute(target, images))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix {
            vars: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Moves every entry to another variable set by name.
    pub fn embed(&self, target: &Arc<VariableSet>) -> Result<Self, LinalgError> {
        let entries = self.entries.iter().map(|e| e.embed(target)).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix {
            vars: target.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Nonzero entries that are constants, as `(row, col, value)`.
    pub fn nonzero_constants(&self) -> Vec<(usize, usize, F)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() {
                    if let Some(c) = e.as_constant() {
                        out.push((i, j, c));
                    }
                }
            }
        }
        out
    }
}

impl<F: Coefficient> fmt::Display for PolyMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[ {} ]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Pivot columns of an RCF pattern plus extra slots forced to zero.
/// Both are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotPattern {
    pivots: Vec<usize>,
    zeroed: BTreeSet<(usize, usize)>,
}

impl PivotPattern {
    pub fn new(pivots: Vec<usize>, zeroed: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, LinalgError> {
        if pivots.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LinalgError::InvalidPattern("pivot columns must increase".into()));
        }
        let zeroed: BTreeSet<_> = zeroed.into_iter().collect();
        for &(r, c) in &zeroed {
            if r >= pivots.len() {
                return Err(LinalgError::InvalidPattern(format!("zeroed slot row {} out of range", r + 1)));
            }
            if pivots.contains(&c) {
                return Err(LinalgError::InvalidPattern(format!("zeroed slot in pivot column {}", c + 1)));
            }
        }
        Ok(PivotPattern { pivots, zeroed })
    }

    /// Pattern from 1-based pivot columns with no extra zeros.
    pub fn from_one_based(pivots: &[usize]) -> Result<Self, LinalgError> {
        if pivots.contains(&0) {
            return Err(LinalgError::InvalidPattern("columns are numbered from 1".into()));
        }
        Self::new(pivots.iter().map(|j| j - 1).collect(), [])
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn zeroed(&self) -> &BTreeSet<(usize, usize)> {
        &self.zeroed
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Slots right of the row's pivot and outside every pivot column.
    pub fn free_slots(&self, n: usize) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for (i, &p) in self.pivots.iter().enumerate() {
            for j in p + 1..n {
                if !self.pivots.contains(&j) && !self.zeroed.contains(&(i, j)) {
                    v.push((i, j));
                }
            }
        }
        v
    }
}

/// How fresh parameters are named by [`build_parametric_rcf`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamNaming {
    /// Non-pivot columns get the letters W, X, Y, Z in order; the row number
    /// is the subscript (`X2`). At most four non-pivot columns.
    Wxyz,
    /// A, B, C, … in row-major order of the free slots. At most 26.
    Letters,
    /// `p{row}_{col}`, 1-based.
    Indexed,
}

/// The RCF-shaped matrix with a fresh variable in every free slot. The
/// variable set lists parameters in naming order (column-major for
/// [`ParamNaming::Wxyz`], row-major otherwise).
pub fn build_parametric_rcf<F: Coefficient>(
    pattern: &PivotPattern,
    n: usize,
    naming: ParamNaming,
) -> Result<PolyMatrix<F>, LinalgError> {
    let r = pattern.rank();
    if r > n || pattern.pivots.iter().any(|&p| p >= n) {
        return Err(LinalgError::InvalidPattern(format!("rank {r} pattern does not fit {n} columns")));
    }
    let mut slots = pattern.free_slots(n);
    let nonpivot: Vec<usize> = (0..n).filter(|j| !pattern.pivots.contains(j)).collect();
    let names: Vec<String> = match naming {
        ParamNaming::Wxyz => {
            if nonpivot.len() > 4 {
                return Err(LinalgError::InvalidPattern("W/X/Y/Z naming needs at most 4 non-pivot columns".into()));
            }
            slots.sort_by_key(|&(i, j)| (j, i));
            slots
                .iter()
                .map(|&(i, j)| {
                    let k = nonpivot.iter().position(|&c| c == j).expect("free slot in non-pivot column");
                    format!("{}{}", ['W', 'X', 'Y', 'Z'][k], i + 1)
                })
                .collect()
        }
        ParamNaming::Letters => {
            if slots.len() > 26 {
                return Err(LinalgError::InvalidPattern("more than 26 parameters for letter naming".into()));
            }
            slots
                .iter()
                .enumerate()
                .map(|(k, _)| ((b'A' + k as u8) as char).to_string())
                .collect()
        }
        ParamNaming::Indexed => slots.iter().map(|&(i, j)| format!("p{}_{}", i + 1, j + 1)).collect(),
    };
    let vars = VariableSet::new(names.iter().map(String::as_str))?;
    let mut m = PolyMatrix::zeros(&vars, r, n);
    for (i, &p) in pattern.pivots.iter().enumerate() {
        m.set(i, p, Polynomial::one(&vars));
    }
    for (k, &(i, j)) in slots.iter().enumerate() {
        m.set(i, j, Polynomial::variable(&vars, k));
    }
    Ok(m)
}

/// Exact reduced row echelon form of a constant matrix. Zero rows are
/// dropped, so the row count of the result is the rank. Returns the pivot
/// columns alongside.
pub fn rcf_numeric<F: Coefficient>(m: &PolyMatrix<F>) -> Result<(PolyMatrix<F>, Vec<usize>), LinalgError> {
    let (rows, pivots) = rref(m.to_constants()?, m.ncols());
    Ok((PolyMatrix::from_constants(m.vars(), &rows, m.ncols())?, pivots))
}

/// Reduced row echelon form on plain field rows.
pub fn rref<F: Coefficient>(mut a: Vec<Vec<F>>, cols: usize) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv();
        for x in a[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - y.clone() * f.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn negate_columns<F: Coefficient>(m: &PolyMatrix<F>, cols: &[usize]) -> PolyMatrix<F> {
    let mut out = m.clone();
    for i in 0..m.nrows() {
        for &j in cols {
            out.set(i, j, -m.get(i, j));
        }
    }
    out
}

/// Leading column of every row, requiring each leading entry to be the
/// constant 1 or -1, strictly increasing columns, and zeros elsewhere in
/// each leading column.
pub fn leading_columns<F: Coefficient>(m: &PolyMatrix<F>) -> Result<Vec<usize>, LinalgError> {
    let mut piv = Vec::with_capacity(m.nrows());
    for i in 0..m.nrows() {
        let j = (0..m.ncols())
            .find(|&j| !m.get(i, j).is_zero())
            .ok_or_else(|| LinalgError::BadPivot {
                row: i,
                reason: "zero row".into(),
            })?;
        let ok = m.get(i, j).as_constant().is_some_and(|c| c.is_unit_sign());
        if !ok {
            return Err(LinalgError::BadPivot {
                row: i,
                reason: format!("leading entry in column {} is not ±1", j + 1),
            });
        }
        if piv.last().is_some_and(|&p| p >= j) {
            return Err(LinalgError::BadPivot {
                row: i,
                reason: "leading columns do not increase".into(),
            });
        }
        piv.push(j);
    }
    for (i, &j) in piv.iter().enumerate() {
        if (0..m.nrows()).any(|k| k != i && !m.get(k, j).is_zero()) {
            return Err(LinalgError::BadPivot {
                row: i,
                reason: format!("pivot column {} has other nonzero entries", j + 1),
            });
        }
    }
    Ok(piv)
}

/// Negates every row whose pivot entry is -1.
pub fn fix_leading_signs<F: Coefficient>(m: &PolyMatrix<F>, pivots: &[usize]) -> Result<PolyMatrix<F>, LinalgError> {
    let mut out = m.clone();
    for (i, &j) in pivots.iter().enumerate() {
        match m.get(i, j).as_constant() {
            Some(c) if c.is_one() => {}
            Some(c) if (-c.clone()).is_one() => out.scale_row(i, &-F::one()),
            _ => {
                return Err(LinalgError::BadPivot {
                    row: i,
                    reason: format!("pivot entry in column {} is not ±1", j + 1),
                })
            }
        }
    }
    Ok(out)
}

fn check_unit_pivots<F: Coefficient>(m: &PolyMatrix<F>, pivots: &[usize]) -> Result<(), LinalgError> {
    if pivots.len() != m.nrows() {
        return Err(LinalgError::DimensionMismatch("one pivot per row".into()));
    }
    for (i, &j) in pivots.iter().enumerate() {
        if j >= m.ncols() || !m.get(i, j).is_one() {
            return Err(LinalgError::BadPivot {
                row: i,
                reason: format!("entry in column {} is not 1", j + 1),
            });
        }
        if (0..m.nrows()).any(|k| k != i && !m.get(k, j).is_zero()) {
            return Err(LinalgError::BadPivot {
                row: i,
                reason: format!("pivot column {} has other nonzero entries", j + 1),
            });
        }
    }
    Ok(())
}

/// Basis of the solutions of `M·x = 0`: one row per free column `f` (in
/// increasing order) with 1 at `f` and `-M[i][f]` at pivot column `pivots[i]`.
pub fn structured_nullspace<F: Coefficient>(m: &PolyMatrix<F>, pivots: &[usize]) -> Result<PolyMatrix<F>, LinalgError> {
    check_unit_pivots(m, pivots)?;
    let n = m.ncols();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let mut out = PolyMatrix::zeros(m.vars(), free.len(), n);
    for (k, &f) in free.iter().enumerate() {
        out.set(k, f, Polynomial::one(m.vars()));
        for (i, &p) in pivots.iter().enumerate() {
            out.set(k, p, -m.get(i, f));
        }
    }
    Ok(out)
}

/// Clears the pivot columns of `upper` out of `lower` by subtracting
/// multiples of `upper`'s rows. Returns the reduced lower block.
pub fn stack_reduce<F: Coefficient>(upper: &PolyMatrix<F>, lower: &PolyMatrix<F>) -> Result<PolyMatrix<F>, LinalgError> {
    if upper.ncols() != lower.ncols() {
        return Err(LinalgError::DimensionMismatch("stacked blocks need equal column counts".into()));
    }
    upper.check_ring(lower)?;
    let pivots = leading_columns(upper)?;
    check_unit_pivots(upper, &pivots)?;
    let mut out = lower.clone();
    for r in 0..out.nrows() {
        for (i, &p) in pivots.iter().enumerate() {
            let c = out.get(r, p).clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..out.ncols() {
                let u = upper.get(i, j);
                if !u.is_zero() {
                    let v = out.get(r, j) - &(&c * u);
                    out.set(r, j, v);
                }
            }
        }
    }
    Ok(out)
}

/// Scales each row so its diagonal entry is monic under `ord`. Rows with a
/// zero diagonal entry are left alone and reported.
pub fn monic_diagonal_normalize<F: Coefficient>(
    t: &PolyMatrix<F>,
    ord: &MonomialOrder,
) -> Result<(PolyMatrix<F>, Vec<usize>), LinalgError> {
    if t.nrows() != t.ncols() {
        return Err(LinalgError::DimensionMismatch("square matrix required".into()));
    }
    let mut out = t.clone();
    let mut skipped = Vec::new();
    for i in 0..t.nrows() {
        let d = t.get(i, i);
        if d.is_zero() {
            skipped.push(i);
            continue;
        }
        let (_, lc) = leading_term(d, ord)?;
        let scale = lc.inv();
        out.scale_row(i, &scale);
    }
    Ok((out, skipped))
}
