//! Integer matrices and their Smith normal form.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{NumAssignOps, Signed};
use thiserror::Error;

/// Signed integer entry of an [`IntMatrix`].
pub trait Entry:
    Clone + Ord + Hash + Debug + Display + Integer + Signed + NumAssignOps + Send + Sync + 'static
{
}

impl<T> Entry for T where
    T: Clone + Ord + Hash + Debug + Display + Integer + Signed + NumAssignOps + Send + Sync + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} has {got} entries, expected {expected}")]
    Ragged { row: usize, got: usize, expected: usize },
    #[error("{kind} labels: expected {expected}, got {got}")]
    LabelCount { kind: &'static str, expected: usize, got: usize },
    #[error("duplicate {kind} label {label:?}")]
    DuplicateLabel { kind: &'static str, label: String },
}

/// Dense row-major integer matrix with optional row and column labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix<S: Entry = i64> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
    row_labels: Option<Vec<String>>,
    col_labels: Option<Vec<String>>,
}

impl<S: Entry> Debug for IntMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

fn check_unique(kind: &'static str, labels: &[String]) -> Result<(), MatrixError> {
    let mut seen = std::collections::HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(MatrixError::DuplicateLabel { kind, label: l.clone() });
        }
    }
    Ok(())
}

impl<S: Entry> IntMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![S::zero(); rows * cols], row_labels: None, col_labels: None }
    }

    /// Builds from rows; an empty row list needs `cols` to fix the width.
    pub fn from_rows(rows: Vec<Vec<S>>, cols: Option<usize>) -> Result<Self, MatrixError> {
        let width = cols.or_else(|| rows.first().map(Vec::len)).unwrap_or(0);
        let mut data = Vec::with_capacity(rows.len() * width);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != width {
                return Err(MatrixError::Ragged { row: i, got: r.len(), expected: width });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Self { rows: rows.len(), cols: width, data, row_labels: None, col_labels: None })
    }

    pub fn with_row_labels(mut self, labels: Vec<String>) -> Result<Self, MatrixError> {
        if labels.len() != self.rows {
            return Err(MatrixError::LabelCount { kind: "row", expected: self.rows, got: labels.len() });
        }
        check_unique("row", &labels)?;
        self.row_labels = Some(labels);
        Ok(self)
    }

    pub fn with_col_labels(mut self, labels: Vec<String>) -> Result<Self, MatrixError> {
        if labels.len() != self.cols {
            return Err(MatrixError::LabelCount { kind: "column", expected: self.cols, got: labels.len() });
        }
        check_unique("column", &labels)?;
        self.col_labels = Some(labels);
        Ok(self)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn col_labels(&self) -> Option<&[String]> {
        self.col_labels.as_deref()
    }

    /// `B x` for a column vector `x`.
    pub fn apply(&self, x: &[S]) -> Vec<S> {
        (0..self.rows)
            .map(|r| {
                let mut acc = S::zero();
                for (a, b) in self.row(r).iter().zip(x) {
                    acc += a.clone() * b.clone();
                }
                acc
            })
            .collect()
    }

    /// Keeps the listed columns, in the given order, with their labels.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            data,
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.as_ref().map(|l| cols.iter().map(|&c| l[c].clone()).collect()),
        }
    }

    /// Keeps the listed rows, in the given order, with their labels.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend(self.row(r).iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols: self.cols,
            data,
            row_labels: self.row_labels.as_ref().map(|l| rows.iter().map(|&r| l[r].clone()).collect()),
            col_labels: self.col_labels.clone(),
        }
    }

    /// Same entries with labels dropped.
    pub fn unlabeled(&self) -> Self {
        Self { row_labels: None, col_labels: None, ..self.clone() }
    }

    /// Diagonal `d_1 | d_2 | … | d_r` of the Smith normal form, all positive.
    pub fn smith_diagonal(&self) -> Vec<S> {
        let mut a: Vec<Vec<S>> = self.rows();
        let (m, n) = (self.rows, self.cols);
        let mut diag = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            // smallest nonzero entry of the trailing block as pivot
            let mut pivot: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, x) in row.iter().enumerate().skip(t) {
                    if !x.is_zero() && pivot.is_none_or(|(pi, pj)| x.abs() < a[pi][pj].abs()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            loop {
                let p = a[t][t].clone();
                let mut clean = true;
                for i in t + 1..m {
                    if !a[i][t].is_zero() {
                        let q = a[i][t].div_floor(&p);
                        let pivot_row = a[t][t..].to_vec();
                        for (x, v) in a[i][t..].iter_mut().zip(pivot_row) {
                            *x -= v * q.clone();
                        }
                        if !a[i][t].is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..n {
                    if !a[t][j].is_zero() {
                        let q = a[t][j].div_floor(&p);
                        for row in a.iter_mut().skip(t) {
                            let v = row[t].clone() * q.clone();
                            row[j] -= v;
                        }
                        if !a[t][j].is_zero() {
                            clean = false;
                        }
                    }
                }
                if clean {
                    // the pivot must divide the whole trailing block
                    let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&p)));
                    match bad {
                        Some(i) => {
                            let src = a[i][t..].to_vec();
                            for (x, v) in a[t][t..].iter_mut().zip(src) {
                                *x += v;
                            }
                        }
                        None => break,
                    }
                }
                // move the smallest nonzero of row t / column t into the pivot
                let mut best = (t, t);
                for i in t..m {
                    if !a[i][t].is_zero() && (a[best.0][best.1].is_zero() || a[i][t].abs() < a[best.0][best.1].abs()) {
                        best = (i, t);
                    }
                }
                for j in t..n {
                    if !a[t][j].is_zero() && (a[best.0][best.1].is_zero() || a[t][j].abs() < a[best.0][best.1].abs()) {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                }
                if best.1 != t {
                    for row in a.iter_mut() {
                        row.swap(t, best.1);
                    }
                }
            }
            diag.push(a[t][t].abs());
            t += 1;
        }
        diag
    }

    /// Rank over the rationals, read off the Smith normal form.
    pub fn rank(&self) -> usize {
        self.smith_diagonal().len()
    }
}
