//! Factorization machinery for reduced atomic monoids embedded in `N_0^n`.
//!
//! Both `A(G)` and the Diophantine monoids present their elements as dense
//! nonnegative vectors and their atoms as sparse vectors. Everything here works
//! through [`AtomicMonoid`] and never looks at where the atoms came from.
//!
//! Recursions branch on the first nonzero coordinate of the remainder (the
//! pivot): every factorization must use an atom covering the pivot, so only
//! those atoms are tried.

use std::collections::{HashMap, HashSet};

use num_traits::{CheckedSub, Zero};

use crate::multigraph::UnionFind;
use crate::scalar::Weight;

/// Sparse atom: `(coordinate, positive value)` pairs in increasing coordinate order.
pub type SparseAtom<W> = Vec<(usize, W)>;

/// A reduced monoid given by a finite atom list inside `N_0^dim`.
pub trait AtomicMonoid {
    type W: Weight;

    fn dim(&self) -> usize;

    fn atom_count(&self) -> usize;

    fn atom(&self, i: usize) -> &[(usize, Self::W)];

    /// Atom indices with a nonzero entry at coordinate `c`, ascending.
    fn covering(&self, c: usize) -> &[usize];

    /// True when the nonnegative vector `x` lies in the monoid.
    fn is_member(&self, x: &[Self::W]) -> bool;

    /// True when atom `i` divides the member `x`.
    fn divides(&self, i: usize, x: &[Self::W]) -> bool {
        match subtract_atom(self, x, i) {
            Some(r) => self.is_member(&r),
            None => false,
        }
    }

    /// True when the member `b` divides the member `x`.
    fn divides_element(&self, b: &[Self::W], x: &[Self::W]) -> bool {
        let mut r = Vec::with_capacity(x.len());
        for (xi, bi) in x.iter().zip(b) {
            match xi.checked_sub(bi) {
                Some(d) => r.push(d),
                None => return false,
            }
        }
        self.is_member(&r)
    }
}

/// Atom list with its coverage index, shared by the concrete monoids.
#[derive(Clone, Debug)]
pub struct AtomTable<W> {
    dim: usize,
    atoms: Vec<SparseAtom<W>>,
    covering: Vec<Vec<usize>>,
}

impl<W: Weight> AtomTable<W> {
    pub fn new(dim: usize, atoms: Vec<SparseAtom<W>>) -> Self {
        let mut covering = vec![Vec::new(); dim];
        for (i, a) in atoms.iter().enumerate() {
            for (c, _) in a {
                covering[*c].push(i);
            }
        }
        Self { dim, atoms, covering }
    }

    /// Builds from dense atom vectors.
    pub fn from_dense(dim: usize, atoms: &[Vec<W>]) -> Self {
        let sparse = atoms
            .iter()
            .map(|a| a.iter().enumerate().filter(|(_, w)| !w.is_zero()).map(|(c, w)| (c, w.clone())).collect())
            .collect();
        Self::new(dim, sparse)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn atom(&self, i: usize) -> &[(usize, W)] {
        &self.atoms[i]
    }

    pub fn covering(&self, c: usize) -> &[usize] {
        &self.covering[c]
    }

    pub fn dense(&self, i: usize) -> Vec<W> {
        let mut v = vec![W::zero(); self.dim];
        for (c, w) in &self.atoms[i] {
            v[*c] = w.clone();
        }
        v
    }
}

/// `x - atom_i` when it is nonnegative.
pub fn subtract_atom<M: AtomicMonoid + ?Sized>(m: &M, x: &[M::W], i: usize) -> Option<Vec<M::W>> {
    let mut r = x.to_vec();
    for (c, w) in m.atom(i) {
        r[*c] = r[*c].checked_sub(w)?;
    }
    Some(r)
}

fn subtract_unchecked<M: AtomicMonoid + ?Sized>(m: &M, x: &[M::W], i: usize) -> Vec<M::W> {
    let mut r = x.to_vec();
    for (c, w) in m.atom(i) {
        r[*c] -= w.clone();
    }
    r
}

fn pivot<W: Weight>(x: &[W]) -> Option<usize> {
    x.iter().position(|w| !w.is_zero())
}

/// Dense sum of a multiset of atom indices.
pub fn sum_atoms<M: AtomicMonoid + ?Sized>(m: &M, atoms: &[usize]) -> Vec<M::W> {
    let mut x = vec![M::W::zero(); m.dim()];
    for &i in atoms {
        for (c, w) in m.atom(i) {
            x[*c] += w.clone();
        }
    }
    x
}

/// Memo of length sets keyed on the remainder; reusable across elements of one monoid.
#[derive(Debug)]
pub struct LengthMemo<W> {
    map: HashMap<Vec<W>, Vec<usize>>,
}

impl<W: Weight> Default for LengthMemo<W> {
    fn default() -> Self {
        Self { map: HashMap::new() }
    }
}

impl<W: Weight> LengthMemo<W> {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Sorted set of lengths of `x`; empty when `x` has no factorization.
///
/// `L(0) = {0}`.
pub fn length_set<M: AtomicMonoid + ?Sized>(m: &M, x: &[M::W], memo: &mut LengthMemo<M::W>) -> Vec<usize> {
    let Some(c) = pivot(x) else {
        return vec![0];
    };
    if let Some(l) = memo.map.get(x) {
        return l.clone();
    }
    let mut out: Vec<usize> = Vec::new();
    for &i in m.covering(c) {
        if !m.divides(i, x) {
            continue;
        }
        let r = subtract_unchecked(m, x, i);
        for l in length_set(m, &r, memo) {
            out.push(l + 1);
        }
    }
    out.sort_unstable();
    out.dedup();
    memo.map.insert(x.to_vec(), out.clone());
    out
}

/// Memo of `(min, max)` factorization lengths keyed on the remainder.
#[derive(Debug)]
pub struct ExtremesMemo<W> {
    map: HashMap<Vec<W>, Option<(usize, usize)>>,
}

impl<W: Weight> Default for ExtremesMemo<W> {
    fn default() -> Self {
        Self { map: HashMap::new() }
    }
}

impl<W: Weight> ExtremesMemo<W> {
    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn clear(&mut self) {
        self.map.clear();
    }
}

/// Shortest and longest factorization lengths of `x`.
pub fn extremes<M: AtomicMonoid + ?Sized>(m: &M, x: &[M::W], memo: &mut ExtremesMemo<M::W>) -> Option<(usize, usize)> {
    let Some(c) = pivot(x) else {
        return Some((0, 0));
    };
    if let Some(r) = memo.map.get(x) {
        return *r;
    }
    let mut best: Option<(usize, usize)> = None;
    for &i in m.covering(c) {
        if !m.divides(i, x) {
            continue;
        }
        let r = subtract_unchecked(m, x, i);
        if let Some((lo, hi)) = extremes(m, &r, memo) {
            best = Some(match best {
                None => (lo + 1, hi + 1),
                Some((a, b)) => (a.min(lo + 1), b.max(hi + 1)),
            });
        }
    }
    memo.map.insert(x.to_vec(), best);
    best
}

/// Factorizations as sorted atom-index multisets, with a completeness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationList {
    pub items: Vec<Vec<usize>>,
    pub complete: bool,
}

/// All factorizations of `x`, stopping after `cap` of them.
///
/// Each multiset is produced once: the atoms covering the current pivot are
/// taken in nondecreasing index order, and the bound resets when the pivot
/// moves. States that cannot be completed are memoised. The output is sorted.
pub fn factorizations<M: AtomicMonoid + ?Sized>(m: &M, x: &[M::W], cap: Option<usize>) -> FactorizationList {
    struct Search<'a, M: AtomicMonoid + ?Sized> {
        m: &'a M,
        cap: usize,
        dead: HashSet<(Vec<M::W>, usize)>,
        stack: Vec<usize>,
        out: Vec<Vec<usize>>,
        truncated: bool,
    }

    impl<M: AtomicMonoid + ?Sized> Search<'_, M> {
        fn go(&mut self, x: &[M::W], last_pivot: Option<usize>, min: usize) -> bool {
            let Some(c) = pivot(x) else {
                if self.out.len() == self.cap {
                    self.truncated = true;
                    return true;
                }
                let mut z = self.stack.clone();
                z.sort_unstable();
                self.out.push(z);
                return true;
            };
            let lo = if last_pivot == Some(c) { min } else { 0 };
            if self.dead.contains(&(x.to_vec(), lo)) {
                return false;
            }
            let mut found = false;
            for &i in self.m.covering(c) {
                if i < lo || !self.m.divides(i, x) {
                    continue;
                }
                let r = subtract_unchecked(self.m, x, i);
                self.stack.push(i);
                found |= self.go(&r, Some(c), i);
                self.stack.pop();
                if self.truncated {
                    return true;
                }
            }
            if !found {
                self.dead.insert((x.to_vec(), lo));
            }
            found
        }
    }

    let mut s = Search {
        m,
        cap: cap.unwrap_or(usize::MAX),
        dead: HashSet::new(),
        stack: Vec::new(),
        out: Vec::new(),
        truncated: false,
    };
    s.go(x, None, 0);
    let mut items = s.out;
    items.sort();
    FactorizationList { items, complete: !s.truncated }
}

/// Number of atoms in the largest residual once the common part is removed.
///
/// Both arguments are sorted atom-index multisets.
pub fn distance(z: &[usize], w: &[usize]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < z.len() && j < w.len() {
        match z[i].cmp(&w[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    (z.len() - common).max(w.len() - common)
}

/// Smallest `N` such that the factorizations are linked by steps of distance at most `N`.
///
/// This is the bottleneck of a minimum spanning tree on the complete distance graph.
pub fn catenary_degree(zs: &[Vec<usize>]) -> usize {
    let n = zs.len();
    if n <= 1 {
        return 0;
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((distance(&zs[i], &zs[j]), i, j));
        }
    }
    edges.sort_unstable();
    let mut uf = UnionFind::new(n);
    let mut joined = 1;
    for (d, i, j) in edges {
        if uf.union(i, j) {
            joined += 1;
            if joined == n {
                return d;
            }
        }
    }
    unreachable!("complete graph is connected")
}

/// Successive differences of a sorted length set.
pub fn delta(lengths: &[usize]) -> Vec<usize> {
    let mut d: Vec<usize> = lengths.windows(2).map(|w| w[1] - w[0]).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// `ω(x, b)`: the worst case, over factorizations of `x`, of the fewest atoms
/// whose sum `b` divides.
///
/// Returns `Some(0)` when `b` does not divide `x`, and `None` when the
/// factorizations of `x` exceed `cap`.
pub fn omega_at<M: AtomicMonoid + ?Sized>(m: &M, x: &[M::W], b: &[M::W], cap: Option<usize>) -> Option<usize> {
    if b.iter().all(|w| w.is_zero()) || !m.divides_element(b, x) {
        return Some(0);
    }
    let zs = factorizations(m, x, cap);
    if !zs.complete {
        return None;
    }
    let mut worst = 0;
    for z in &zs.items {
        let need = smallest_dividing_subsum(m, z, b).expect("the whole factorization sums to a multiple of b");
        worst = worst.max(need);
    }
    Some(worst)
}

/// Fewest atoms of the multiset `z` whose sum `b` divides.
fn smallest_dividing_subsum<M: AtomicMonoid + ?Sized>(m: &M, z: &[usize], b: &[M::W]) -> Option<usize> {
    // distinct atoms with multiplicities
    let mut kinds: Vec<(usize, usize)> = Vec::new();
    for &i in z {
        match kinds.last_mut() {
            Some((k, n)) if *k == i => *n += 1,
            _ => kinds.push((i, 1)),
        }
    }
    fn pick<M: AtomicMonoid + ?Sized>(
        m: &M,
        kinds: &[(usize, usize)],
        k: usize,
        left: usize,
        acc: &mut Vec<M::W>,
        b: &[M::W],
    ) -> bool {
        if left == 0 {
            return m.divides_element(b, acc);
        }
        if k == kinds.len() {
            return false;
        }
        let (atom, mult) = kinds[k];
        for used in (0..=mult.min(left)).rev() {
            let saved = acc.clone();
            for _ in 0..used {
                for (c, w) in m.atom(atom) {
                    acc[*c] += w.clone();
                }
            }
            let ok = pick(m, kinds, k + 1, left - used, acc, b);
            *acc = saved;
            if ok {
                return true;
            }
        }
        false
    }
    (1..=z.len()).find(|&size| {
        let mut acc = vec![M::W::zero(); m.dim()];
        pick(m, &kinds, 0, size, &mut acc, b)
    })
}
