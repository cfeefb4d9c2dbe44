//! Diophantine monoids `ker(B) ∩ N_0^n`, their Hilbert bases, and the
//! transfer homomorphism that merges duplicate columns.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::engine::{self, AtomTable, AtomicMonoid, FactorizationList, LengthMemo};
use crate::factorization::LengthSet;
pub use crate::linalg::{Entry, IntMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiophantineError {
    #[error("vector has {got} coordinates, the matrix has {expected} columns")]
    Dimension { expected: usize, got: usize },
    #[error("vector is not in the monoid")]
    NotAMember,
    #[error("Hilbert basis is incomplete at coordinate bound {cap}")]
    IncompleteBasis { cap: u64 },
    #[error("factorization does not sum to the transferred element")]
    BadFactorization,
    #[error("factor {0} is not an atom of the target monoid")]
    NotAnAtom(usize),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Default coordinate bound for Hilbert basis searches.
pub const DEFAULT_BASIS_CAP: u64 = 64;

/// Minimal generating set, sorted, with a completeness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub elements: Vec<Vec<u64>>,
    pub complete: bool,
}

/// `ker(B) ∩ N_0^n` together with its Hilbert basis.
#[derive(Clone, Debug)]
pub struct DiophantineMonoid {
    matrix: IntMatrix<i64>,
    basis: HilbertBasis,
    table: AtomTable<u64>,
    cap: u64,
}

fn image(matrix: &IntMatrix<i64>, x: &[u64]) -> Vec<i64> {
    let xi: Vec<i64> = x.iter().map(|&v| v as i64).collect();
    matrix.apply(&xi)
}

/// Contejean–Devie completion: grow vectors one unit at a time in directions
/// `e_j` with `<Bx, Be_j> < 0`, keep solutions, prune dominated vectors.
pub fn hilbert_basis(matrix: &IntMatrix<i64>, cap: u64) -> HilbertBasis {
    let n = matrix.ncols();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| matrix.column(j)).collect();
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut complete = true;
    let mut frontier: BTreeSet<Vec<u64>> = (0..n)
        .map(|j| {
            let mut e = vec![0u64; n];
            e[j] = 1;
            e
        })
        .collect();
    let dominates = |x: &[u64], b: &[u64]| x.iter().zip(b).all(|(a, c)| a >= c);
    while !frontier.is_empty() {
        let mut open = Vec::new();
        for x in frontier {
            if image(matrix, &x).iter().all(|&v| v == 0) {
                basis.push(x);
            } else {
                open.push(x);
            }
        }
        let mut next = BTreeSet::new();
        for x in open {
            let bx = image(matrix, &x);
            for (j, col) in cols.iter().enumerate() {
                if dot(&bx, col) >= 0 {
                    continue;
                }
                if x[j] >= cap {
                    complete = false;
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                if !basis.iter().any(|b| dominates(&y, b)) {
                    next.insert(y);
                }
            }
        }
        frontier = next;
    }
    basis.sort();
    HilbertBasis { elements: basis, complete }
}

impl DiophantineMonoid {
    pub fn new(matrix: IntMatrix<i64>) -> Self {
        Self::with_cap(matrix, DEFAULT_BASIS_CAP)
    }

    pub fn with_cap(matrix: IntMatrix<i64>, cap: u64) -> Self {
        let basis = hilbert_basis(&matrix, cap);
        let table = AtomTable::from_dense(matrix.ncols(), &basis.elements);
        Self { matrix, basis, table, cap }
    }

    pub fn matrix(&self) -> &IntMatrix<i64> {
        &self.matrix
    }

    pub fn hilbert_basis(&self) -> &HilbertBasis {
        &self.basis
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// `x ≥ 0` and `Bx = 0`.
    pub fn membership(&self, x: &[i64]) -> Result<bool, DiophantineError> {
        self.check_dim(x.len())?;
        Ok(x.iter().all(|&v| v >= 0) && self.matrix.apply(x).iter().all(|&v| v == 0))
    }

    fn check_dim(&self, got: usize) -> Result<(), DiophantineError> {
        let expected = self.matrix.ncols();
        if got != expected {
            return Err(DiophantineError::Dimension { expected, got });
        }
        Ok(())
    }

    fn check_member(&self, x: &[u64]) -> Result<(), DiophantineError> {
        self.check_dim(x.len())?;
        if !self.is_member(x) {
            return Err(DiophantineError::NotAMember);
        }
        Ok(())
    }

    /// Index of `x` in the Hilbert basis.
    pub fn atom_index(&self, x: &[u64]) -> Option<usize> {
        self.basis.elements.binary_search_by(|b| b.as_slice().cmp(x)).ok()
    }

    /// `L(x)` over the Hilbert basis.
    pub fn length_set(&self, x: &[u64], memo: &mut LengthMemo<u64>) -> Result<LengthSet, DiophantineError> {
        self.check_member(x)?;
        if !self.basis.complete {
            return Err(DiophantineError::IncompleteBasis { cap: self.cap });
        }
        Ok(LengthSet::new(engine::length_set(self, x, memo)))
    }

    /// Factorizations of `x` as sorted multisets of basis indices.
    pub fn factorizations(&self, x: &[u64], cap: Option<usize>) -> Result<FactorizationList, DiophantineError> {
        self.check_member(x)?;
        Ok(engine::factorizations(self, x, cap))
    }
}

impl AtomicMonoid for DiophantineMonoid {
    type W = u64;

    fn dim(&self) -> usize {
        self.matrix.ncols()
    }

    fn atom_count(&self) -> usize {
        self.table.len()
    }

    fn atom(&self, i: usize) -> &[(usize, u64)] {
        self.table.atom(i)
    }

    fn covering(&self, c: usize) -> &[usize] {
        self.table.covering(c)
    }

    fn is_member(&self, x: &[u64]) -> bool {
        image(&self.matrix, x).iter().all(|&v| v == 0)
    }

    // saturated: a member minus a member is a member whenever it is nonnegative
    fn divides(&self, i: usize, x: &[u64]) -> bool {
        self.table.atom(i).iter().all(|(c, w)| x[*c] >= *w)
    }

    fn divides_element(&self, b: &[u64], x: &[u64]) -> bool {
        b.iter().zip(x).all(|(p, q)| p <= q)
    }
}

/// `L(x)` for a member `x` of `ker(B) ∩ N_0^n`.
pub fn length_set_dm(m: &DiophantineMonoid, x: &[u64]) -> Result<LengthSet, DiophantineError> {
    m.length_set(x, &mut LengthMemo::default())
}

/// `θ: H → H'` summing the coordinates within each group of identical columns.
#[derive(Clone, Debug)]
pub struct TransferMap {
    source: DiophantineMonoid,
    target: DiophantineMonoid,
    groups: Vec<Vec<usize>>,
    group_of: Vec<usize>,
}

/// Groups of identical columns, ordered by their first column.
pub fn duplicate_column_groups(b: &IntMatrix<i64>) -> Vec<Vec<usize>> {
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    for j in 0..b.ncols() {
        let g = *seen.entry(b.column(j)).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(j);
    }
    groups
}

/// `b` restricted to the first column of each group; labels are kept.
pub fn dedup_columns(b: &IntMatrix<i64>) -> (IntMatrix<i64>, Vec<Vec<usize>>) {
    let groups = duplicate_column_groups(b);
    let firsts: Vec<usize> = groups.iter().map(|g| g[0]).collect();
    (b.select_columns(&firsts), groups)
}

/// Groups identical columns of `m`'s matrix and builds the collapsed target.
///
/// Groups are ordered by their first column; the target keeps that column's label.
pub fn dedup_transfer(m: &DiophantineMonoid) -> TransferMap {
    let (collapsed, groups) = dedup_columns(m.matrix());
    let mut group_of = vec![0; m.matrix().ncols()];
    for (g, cols) in groups.iter().enumerate() {
        for &c in cols {
            group_of[c] = g;
        }
    }
    let target = DiophantineMonoid::with_cap(collapsed, m.cap);
    TransferMap { source: m.clone(), target, groups, group_of }
}

impl TransferMap {
    pub fn source(&self) -> &DiophantineMonoid {
        &self.source
    }

    pub fn target(&self) -> &DiophantineMonoid {
        &self.target
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn is_identity(&self) -> bool {
        self.groups.iter().all(|g| g.len() == 1)
    }

    pub fn theta(&self, x: &[u64]) -> Vec<u64> {
        let mut y = vec![0u64; self.groups.len()];
        for (j, &v) in x.iter().enumerate() {
            y[self.group_of[j]] += v;
        }
        y
    }

    /// The section `y ↦ x` that puts each group total on the group's first column.
    pub fn section(&self, y: &[u64]) -> Vec<u64> {
        let mut x = vec![0u64; self.group_of.len()];
        for (g, cols) in self.groups.iter().enumerate() {
            x[cols[0]] = y[g];
        }
        x
    }

    /// Lifts a factorization of `θ(x)` into target elements to one of `x`.
    ///
    /// Each group's total in `x` is handed out to the factors in order,
    /// filling the group's columns greedily from the left.
    pub fn lift_factorization(&self, x: &[u64], factors: &[Vec<u64>]) -> Result<Vec<Vec<u64>>, DiophantineError> {
        self.source.check_member(x)?;
        let tx = self.theta(x);
        let mut total = vec![0u64; tx.len()];
        for f in factors {
            self.target.check_member(f)?;
            for (t, v) in total.iter_mut().zip(f) {
                *t += v;
            }
        }
        if total != tx {
            return Err(DiophantineError::BadFactorization);
        }
        let mut remaining = x.to_vec();
        let mut out = Vec::with_capacity(factors.len());
        for f in factors {
            let mut v = vec![0u64; x.len()];
            for (g, cols) in self.groups.iter().enumerate() {
                let mut need = f[g];
                for &c in cols {
                    let take = need.min(remaining[c]);
                    v[c] += take;
                    remaining[c] -= take;
                    need -= take;
                }
                debug_assert_eq!(need, 0);
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Lifts a factorization given as target basis indices to source basis indices.
    pub fn lift_indices(&self, x: &[u64], factors: &[usize]) -> Result<Vec<usize>, DiophantineError> {
        let dense: Vec<Vec<u64>> = factors
            .iter()
            .map(|&i| self.target.hilbert_basis().elements.get(i).cloned().ok_or(DiophantineError::NotAnAtom(i)))
            .collect::<Result<_, _>>()?;
        let lifted = self.lift_factorization(x, &dense)?;
        let mut idx = lifted
            .iter()
            .enumerate()
            .map(|(k, v)| self.source.atom_index(v).ok_or(DiophantineError::NotAnAtom(factors[k])))
            .collect::<Result<Vec<_>, _>>()?;
        idx.sort_unstable();
        Ok(idx)
    }
}

/// Calls `f` on every nonnegative vector with coordinates at most `bound`.
pub fn for_each_in_box(dim: usize, bound: u64, mut f: impl FnMut(&[u64])) {
    let mut x = vec![0u64; dim];
    loop {
        f(&x);
        let mut i = 0;
        loop {
            if i == dim {
                return;
            }
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}
