//! Combinatorial spectra of Bass rings and their Diophantine descriptions.
//!
//! A spectrum lists the minimal primes and the singular maximal ideals, each
//! with the one or two minimal primes it contains and its number of
//! indecomposable lattices. Nonsingular maximal ideals are not represented:
//! the monoid `T(R)` transfers to a monoid that only sees `Sing(R)` and the
//! minimal primes.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::agglomeration::{atoms, Agglomeration};
use crate::diophantine::{DiophantineMonoid, IntMatrix};
use crate::factorization::for_each_bounded;
use crate::multigraph::{Multigraph, UnionFind};

/// A singular maximal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularIdeal {
    pub id: String,
    pub primes: Vec<String>,
    pub indecomposables: u64,
}

/// Minimal primes and singular maximal ideals of a Bass ring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BassRingSpec {
    pub minimal_primes: Vec<String>,
    pub singular_maximal_ideals: Vec<SingularIdeal>,
}

/// One violated rule.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Diagnostic {
    #[error("identifier {0:?} is used more than once")]
    DuplicateId(String),
    #[error("ideal {ideal:?} cites unknown prime {prime:?}")]
    UnknownPrime { ideal: String, prime: String },
    #[error("ideal {ideal:?} contains {count} minimal primes, expected 1 or 2")]
    PrimeCount { ideal: String, count: usize },
    #[error("ideal {ideal:?} lists prime {prime:?} twice")]
    RepeatedPrime { ideal: String, prime: String },
    #[error("ideal {ideal:?} has {got} indecomposables, needs at least {min}")]
    TooFewIndecomposables { ideal: String, got: u64, min: u64 },
}

/// All diagnostics of an invalid spec.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct SpecError {
    pub diagnostics: Vec<Diagnostic>,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diagnostics.iter().map(ToString::to_string).collect();
        write!(f, "invalid ring spec: {}", parts.join("; "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BassError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("invalid family parameters: {0}")]
    Family(String),
    #[error("isomorphism check failed: {reason} at {vector:?}")]
    Verification { reason: String, vector: Vec<u64> },
    #[error("Hilbert basis incomplete at coordinate bound {0}")]
    IncompleteBasis(u64),
}

impl BassRingSpec {
    pub fn new(minimal_primes: Vec<String>, singular_maximal_ideals: Vec<SingularIdeal>) -> Self {
        Self { minimal_primes, singular_maximal_ideals }
    }

    /// Checks identifier uniqueness, prime counts, and indecomposable counts.
    pub fn validate(&self) -> Result<(), SpecError> {
        let mut diagnostics = Vec::new();
        let mut ids = HashSet::new();
        for id in self.minimal_primes.iter().chain(self.singular_maximal_ideals.iter().map(|m| &m.id)) {
            if !ids.insert(id.as_str()) {
                diagnostics.push(Diagnostic::DuplicateId(id.clone()));
            }
        }
        let primes: HashSet<&str> = self.minimal_primes.iter().map(String::as_str).collect();
        for m in &self.singular_maximal_ideals {
            let count = m.primes.len();
            if !(1..=2).contains(&count) {
                diagnostics.push(Diagnostic::PrimeCount { ideal: m.id.clone(), count });
            }
            for p in &m.primes {
                if !primes.contains(p.as_str()) {
                    diagnostics.push(Diagnostic::UnknownPrime { ideal: m.id.clone(), prime: p.clone() });
                }
            }
            if count == 2 && m.primes[0] == m.primes[1] {
                diagnostics.push(Diagnostic::RepeatedPrime { ideal: m.id.clone(), prime: m.primes[0].clone() });
            }
            let min = if count == 2 { 3 } else { 1 };
            if m.indecomposables < min {
                diagnostics.push(Diagnostic::TooFewIndecomposables {
                    ideal: m.id.clone(),
                    got: m.indecomposables,
                    min,
                });
            }
        }
        if diagnostics.is_empty() {
            Ok(())
        } else {
            Err(SpecError { diagnostics })
        }
    }

    fn one_prime(&self) -> impl Iterator<Item = &SingularIdeal> {
        self.singular_maximal_ideals.iter().filter(|m| m.primes.len() == 1)
    }

    fn two_prime(&self) -> impl Iterator<Item = &SingularIdeal> {
        self.singular_maximal_ideals.iter().filter(|m| m.primes.len() == 2)
    }

    fn prime_index(&self) -> HashMap<&str, usize> {
        self.minimal_primes.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect()
    }
}

/// `G_R`: one vertex per minimal prime, one edge per two-prime singular ideal.
pub fn intersection_graph(spec: &BassRingSpec) -> Result<Multigraph, SpecError> {
    spec.validate()?;
    let edges = spec.two_prime().map(|m| (m.id.clone(), m.primes[0].clone(), m.primes[1].clone()));
    Ok(Multigraph::new(spec.minimal_primes.iter().cloned(), edges).expect("validated spec gives a graph"))
}

/// The matrix `B` whose kernel is the image of `T(R)`.
///
/// Rows: one per one-prime ideal `m` (label `m|p`), then two per two-prime
/// ideal (labels `m|p`, `m|q`). Columns: the primes, then the indecomposables
/// of each ideal in the same order. A one-prime ideal's columns are `m:1..m:t`;
/// a two-prime ideal's are `m:p`, `m:q` of ranks `(1,0)` and `(0,1)`, then
/// `m:3..m:t` of rank `(1,1)`.
pub fn matrix_b(spec: &BassRingSpec) -> Result<IntMatrix<i64>, SpecError> {
    spec.validate()?;
    let k = spec.minimal_primes.len();
    let pidx = spec.prime_index();
    let ideals: Vec<&SingularIdeal> = spec.one_prime().chain(spec.two_prime()).collect();
    let mut col_labels: Vec<String> = spec.minimal_primes.clone();
    let mut row_labels = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let width = k + ideals.iter().map(|m| m.indecomposables as usize).sum::<usize>();
    for m in &ideals {
        let start = col_labels.len();
        let t = m.indecomposables as usize;
        if m.primes.len() == 1 {
            let mut row = vec![0i64; width];
            row[pidx[m.primes[0].as_str()]] = 1;
            for j in 0..t {
                row[start + j] = -1;
                col_labels.push(format!("{}:{}", m.id, j + 1));
            }
            rows.push(row);
            row_labels.push(format!("{}|{}", m.id, m.primes[0]));
        } else {
            let (p, q) = (&m.primes[0], &m.primes[1]);
            let mut rp = vec![0i64; width];
            let mut rq = vec![0i64; width];
            rp[pidx[p.as_str()]] = 1;
            rq[pidx[q.as_str()]] = 1;
            rp[start] = -1;
            rq[start + 1] = -1;
            for j in 2..t {
                rp[start + j] = -1;
                rq[start + j] = -1;
            }
            col_labels.push(format!("{}:{}", m.id, p));
            col_labels.push(format!("{}:{}", m.id, q));
            col_labels.extend((3..=t).map(|j| format!("{}:{}", m.id, j)));
            rows.push(rp);
            rows.push(rq);
            row_labels.push(format!("{}|{}", m.id, p));
            row_labels.push(format!("{}|{}", m.id, q));
        }
    }
    Ok(labeled(rows, width, row_labels, col_labels))
}

fn labeled(rows: Vec<Vec<i64>>, width: usize, row_labels: Vec<String>, col_labels: Vec<String>) -> IntMatrix<i64> {
    IntMatrix::from_rows(rows, Some(width))
        .and_then(|m| m.with_row_labels(row_labels))
        .and_then(|m| m.with_col_labels(col_labels))
        .expect("identifiers are unique in a validated spec")
}

/// The deduplicated matrix `C`: rows `e_p − e_m − e_{m:p}` per incidence.
///
/// Columns: the primes, then `m:p`, `m:q`, `m` for each two-prime ideal.
pub fn matrix_c(spec: &BassRingSpec) -> Result<IntMatrix<i64>, SpecError> {
    spec.validate()?;
    let k = spec.minimal_primes.len();
    let pidx = spec.prime_index();
    let edges: Vec<&SingularIdeal> = spec.two_prime().collect();
    let width = k + 3 * edges.len();
    let mut col_labels = spec.minimal_primes.clone();
    let mut rows = Vec::new();
    let mut row_labels = Vec::new();
    for (i, m) in edges.iter().enumerate() {
        let base = k + 3 * i;
        for (s, p) in m.primes.iter().enumerate() {
            let mut row = vec![0i64; width];
            row[pidx[p.as_str()]] = 1;
            row[base + s] = -1;
            row[base + 2] = -1;
            rows.push(row);
            row_labels.push(format!("{}|{}", m.id, p));
            col_labels.push(format!("{}:{}", m.id, p));
        }
        col_labels.push(m.id.clone());
    }
    Ok(labeled(rows, width, row_labels, col_labels))
}

/// `C` as a Diophantine monoid.
pub fn monoid_c(spec: &BassRingSpec) -> Result<DiophantineMonoid, SpecError> {
    Ok(DiophantineMonoid::new(matrix_c(spec)?))
}

/// Drops the rows of one-prime ideals and the columns of their indecomposables.
///
/// Works on `B` and on any column selection of `B` that keeps its labels.
pub fn erase_one_prime(spec: &BassRingSpec, m: &IntMatrix<i64>) -> IntMatrix<i64> {
    let ids: HashSet<&str> = spec.one_prime().map(|i| i.id.as_str()).collect();
    let owner = |label: &str, sep: char| label.rsplit_once(sep).is_some_and(|(id, _)| ids.contains(id));
    let rows: Vec<usize> = match m.row_labels() {
        Some(l) => (0..m.nrows()).filter(|&r| !owner(&l[r], '|')).collect(),
        None => (0..m.nrows()).collect(),
    };
    let cols: Vec<usize> = match m.col_labels() {
        Some(l) => (0..m.ncols()).filter(|&c| !owner(&l[c], ':')).collect(),
        None => (0..m.ncols()).collect(),
    };
    m.select_rows(&rows).select_columns(&cols)
}

/// `C` derived from `B`: erase one-prime ideals, keep one `(1,1)` column per two-prime ideal.
pub fn derive_c_from_b(spec: &BassRingSpec) -> Result<IntMatrix<i64>, SpecError> {
    let b = erase_one_prime(spec, &matrix_b(spec)?);
    let k = spec.minimal_primes.len();
    let mut keep: Vec<usize> = (0..k).collect();
    let mut col = k;
    for m in spec.two_prime() {
        keep.extend([col, col + 1, col + 2]);
        col += m.indecomposables as usize;
    }
    Ok(b.select_columns(&keep))
}

/// `x ↦ a` with `a(p) = x_p` and `a(m) = x_m`.
pub fn to_agglomeration(spec: &BassRingSpec, graph: &Arc<Multigraph>, x: &[u64]) -> Option<Agglomeration<u64>> {
    let k = spec.minimal_primes.len();
    let mut w: Vec<u64> = x[..k].to_vec();
    w.extend((0..graph.size()).map(|i| x[k + 3 * i + 2]));
    Agglomeration::new(graph.clone(), w).ok()
}

/// `a ↦ x` with `x_{m:p} = a(p) − a(m)`.
pub fn from_agglomeration(a: &Agglomeration<u64>) -> Vec<u64> {
    let g = a.graph();
    let mut x: Vec<u64> = (0..g.order()).map(|v| *a.vertex_weight(v)).collect();
    for e in 0..g.size() {
        let (p, q) = g.ends(e);
        let m = *a.edge_weight(e);
        x.extend([a.vertex_weight(p) - m, a.vertex_weight(q) - m, m]);
    }
    x
}

/// Outcome of the isomorphism check `ker(C) ∩ N_0^n ≅ A(G_R)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub basis_size: usize,
    pub atom_count: usize,
    /// Largest weight of the checked box.
    pub bound: usize,
    pub box_elements: usize,
    pub verified: bool,
}

/// Verifies that the map to agglomerations is an isomorphism on the weight box
/// and carries the Hilbert basis of `C` onto the atoms of `A(G_R)`.
pub fn iso_to_agglomerations(spec: &BassRingSpec, bound: usize) -> Result<IsoReport, BassError> {
    let graph = Arc::new(intersection_graph(spec)?);
    let monoid = monoid_c(spec)?;
    let basis = monoid.hilbert_basis();
    if !basis.complete {
        return Err(BassError::IncompleteBasis(monoid.cap()));
    }
    let fail = |reason: &str, v: &[u64]| BassError::Verification { reason: reason.to_string(), vector: v.to_vec() };
    let mut images = HashSet::new();
    for x in &basis.elements {
        let a = to_agglomeration(spec, &graph, x).ok_or_else(|| fail("basis element maps outside A(G)", x))?;
        if !a.is_atom() {
            return Err(fail("basis element maps to a non-atom", x));
        }
        if from_agglomeration(&a) != *x {
            return Err(fail("inverse does not recover basis element", x));
        }
        images.insert(a.into_weights());
    }
    let atom_list = atoms::<u64>(&graph).map_err(|e| BassError::Family(e.to_string()))?;
    if images.len() != atom_list.len() || atom_list.iter().any(|a| !images.contains(a.weights())) {
        return Err(fail("basis and atoms differ", &[]));
    }
    let mut count = 0;
    let mut err = None;
    for_each_bounded::<u64>(&graph, bound, |w| {
        if err.is_some() {
            return;
        }
        count += 1;
        let a = Agglomeration::new(graph.clone(), w.to_vec()).expect("box elements are agglomerations");
        let x = from_agglomeration(&a);
        if !crate::engine::AtomicMonoid::is_member(&monoid, &x) {
            err = Some(fail("image is not in ker(C)", &x));
        } else if to_agglomeration(spec, &graph, &x).as_ref() != Some(&a) {
            err = Some(fail("round trip differs", &x));
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(IsoReport {
        basis_size: basis.elements.len(),
        atom_count: atom_list.len(),
        bound,
        box_elements: count,
        verified: true,
    })
}

/// True iff `Pic(R)` is trivial and every connected component of the
/// spectrum contains at most one singular maximal ideal.
pub fn krsa_check(spec: &BassRingSpec, pic_trivial: bool) -> Result<bool, SpecError> {
    spec.validate()?;
    if !pic_trivial {
        return Ok(false);
    }
    let pidx = spec.prime_index();
    let mut uf = UnionFind::new(spec.minimal_primes.len());
    for m in spec.two_prime() {
        uf.union(pidx[m.primes[0].as_str()], pidx[m.primes[1].as_str()]);
    }
    let mut per_component: HashMap<usize, usize> = HashMap::new();
    for m in &spec.singular_maximal_ideals {
        *per_component.entry(uf.find(pidx[m.primes[0].as_str()])).or_default() += 1;
    }
    Ok(per_component.values().all(|&c| c <= 1))
}

/// A spectrum with `G_R = g`: one prime per vertex, one ideal with three
/// indecomposables per edge, identifiers kept.
pub fn realize(g: &Multigraph) -> BassRingSpec {
    let ideals = (0..g.size())
        .map(|e| {
            let (a, b) = g.ends(e);
            SingularIdeal {
                id: g.edge_name(e).to_string(),
                primes: vec![g.vertex_name(a).to_string(), g.vertex_name(b).to_string()],
                indecomposables: 3,
            }
        })
        .collect();
    BassRingSpec::new(g.vertex_names().to_vec(), ideals)
}

/// Named spectrum families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// One prime and `ideals` one-prime singular ideals with `indecomposables` each.
    Domain { ideals: usize, indecomposables: u64 },
    /// Coordinate ring of a regular `m`-gon: `G_R = C_m`.
    Ngon { m: usize },
    /// Two primes and `k` ideals containing both: `G_R = B_k`.
    Banana { k: usize },
    /// One ideal per pair of `n` primes: `G_R = K_n`.
    Complete { n: usize },
}

fn two_prime_ideal(id: String, p: usize, q: usize) -> SingularIdeal {
    SingularIdeal { id, primes: vec![format!("p{p}"), format!("p{q}")], indecomposables: 3 }
}

pub fn family(f: Family) -> Result<BassRingSpec, BassError> {
    let primes = |n: usize| (1..=n).map(|i| format!("p{i}")).collect::<Vec<_>>();
    let spec = match f {
        Family::Domain { ideals, indecomposables } => {
            if indecomposables < 1 {
                return Err(BassError::Family("domain ideals need at least 1 indecomposable".into()));
            }
            let ms = (1..=ideals)
                .map(|i| SingularIdeal { id: format!("m{i}"), primes: vec!["p".into()], indecomposables })
                .collect();
            BassRingSpec::new(vec!["p".into()], ms)
        }
        Family::Ngon { m } => {
            if m < 3 {
                return Err(BassError::Family(format!("ngon needs m >= 3, got {m}")));
            }
            let ms = (1..=m).map(|i| two_prime_ideal(format!("m{i}"), i, i % m + 1)).collect();
            BassRingSpec::new(primes(m), ms)
        }
        Family::Banana { k } => {
            if k < 2 {
                return Err(BassError::Family(format!("banana needs k >= 2, got {k}")));
            }
            let ms = (1..=k).map(|i| two_prime_ideal(format!("m{i}"), 1, 2)).collect();
            BassRingSpec::new(primes(2), ms)
        }
        Family::Complete { n } => {
            if n < 2 {
                return Err(BassError::Family(format!("complete needs n >= 2, got {n}")));
            }
            let mut ms = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    ms.push(two_prime_ideal(format!("m{i}_{j}"), i, j));
                }
            }
            BassRingSpec::new(primes(n), ms)
        }
    };
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diophantine::dedup_transfer;

    fn domain() -> BassRingSpec {
        family(Family::Domain { ideals: 1, indecomposables: 2 }).unwrap()
    }

    fn one_edge() -> BassRingSpec {
        realize(&Multigraph::path(2))
    }

    #[test]
    fn validation() {
        assert!(domain().validate().is_ok());
        let mut s = one_edge();
        s.singular_maximal_ideals[0].indecomposables = 2;
        assert!(matches!(
            s.validate().unwrap_err().diagnostics[..],
            [Diagnostic::TooFewIndecomposables { min: 3, got: 2, .. }]
        ));
        let mut s = one_edge();
        s.singular_maximal_ideals[0].primes[1] = "zz".into();
        assert!(
            matches!(&s.validate().unwrap_err().diagnostics[..], [Diagnostic::UnknownPrime { prime, .. }] if prime == "zz")
        );
        let mut s = one_edge();
        s.singular_maximal_ideals[0].id = "v1".into();
        assert!(s.validate().is_err());
        let mut s = one_edge();
        s.singular_maximal_ideals[0].primes.push("v1".into());
        assert!(s.validate().is_err());
    }

    #[test]
    fn graphs() {
        let g = intersection_graph(&family(Family::Ngon { m: 5 }).unwrap()).unwrap();
        assert_eq!((g.order(), g.size()), (5, 5));
        assert!(g.degrees().iter().all(|&d| d == 2) && g.is_connected());
        let g = intersection_graph(&domain()).unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        let g = intersection_graph(&family(Family::Banana { k: 2 }).unwrap()).unwrap();
        assert_eq!((g.order(), g.size(), g.is_simple()), (2, 2, false));
    }

    #[test]
    fn domain_matrix_b() {
        let s = family(Family::Domain { ideals: 2, indecomposables: 2 }).unwrap();
        let b = matrix_b(&s).unwrap();
        assert_eq!(b.rows(), vec![vec![1, -1, -1, 0, 0], vec![1, 0, 0, -1, -1]]);
        assert_eq!(matrix_c(&s).unwrap().ncols(), 1);
        assert_eq!(matrix_c(&s).unwrap().nrows(), 0);
    }

    #[test]
    fn single_edge_matrices() {
        let b = matrix_b(&one_edge()).unwrap();
        assert_eq!(b.rows(), vec![vec![1, 0, -1, 0, -1], vec![0, 1, 0, -1, -1]]);
        assert_eq!(b.row_labels().unwrap(), &["e1|v1".to_string(), "e1|v2".to_string()]);
        let c = matrix_c(&one_edge()).unwrap();
        assert_eq!(c.rows(), b.rows());
        assert_eq!(monoid_c(&one_edge()).unwrap().hilbert_basis().elements.len(), 3);
    }

    #[test]
    fn ngon_b_after_dedup_is_banded() {
        let s = family(Family::Ngon { m: 4 }).unwrap();
        let c = matrix_c(&s).unwrap();
        assert_eq!((c.nrows(), c.ncols()), (8, 16));
        assert_eq!(c.row(0), &[1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(c.row(1), &[0, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(c.row(7), &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, -1]);
    }

    #[test]
    fn pipeline_coherence() {
        for spec in [
            domain(),
            family(Family::Domain { ideals: 3, indecomposables: 4 }).unwrap(),
            family(Family::Ngon { m: 3 }).unwrap(),
            family(Family::Banana { k: 2 }).unwrap(),
        ] {
            let mut wide = spec.clone();
            for m in wide.singular_maximal_ideals.iter_mut().filter(|m| m.primes.len() == 2) {
                m.indecomposables = 5;
            }
            let b = DiophantineMonoid::new(matrix_b(&wide).unwrap());
            let t = dedup_transfer(&b);
            let merged = erase_one_prime(&wide, t.target().matrix());
            assert_eq!(merged.unlabeled(), matrix_c(&wide).unwrap().unlabeled());
            assert_eq!(derive_c_from_b(&wide).unwrap().unlabeled(), matrix_c(&wide).unwrap().unlabeled());
        }
    }

    #[test]
    fn isomorphisms() {
        let r = iso_to_agglomerations(&domain(), 3).unwrap();
        assert_eq!((r.basis_size, r.atom_count), (1, 1));
        let r = iso_to_agglomerations(&one_edge(), 2).unwrap();
        assert_eq!((r.basis_size, r.atom_count), (3, 3));
        let r = iso_to_agglomerations(&family(Family::Ngon { m: 3 }).unwrap(), 1).unwrap();
        assert_eq!((r.basis_size, r.atom_count), (10, 10));
    }

    #[test]
    fn krsa() {
        assert!(krsa_check(&domain(), true).unwrap());
        assert!(!krsa_check(&domain(), false).unwrap());
        assert!(!krsa_check(&family(Family::Ngon { m: 4 }).unwrap(), true).unwrap());
        assert!(!krsa_check(&family(Family::Domain { ideals: 2, indecomposables: 2 }).unwrap(), true).unwrap());
        assert!(krsa_check(&one_edge(), true).unwrap());
    }

    #[test]
    fn realization() {
        let g = Multigraph::cycle(4);
        let s = realize(&g);
        assert_eq!((s.minimal_primes.len(), s.singular_maximal_ideals.len()), (4, 4));
        assert_eq!(intersection_graph(&s).unwrap(), g);
        assert_eq!(realize(&Multigraph::null()), BassRingSpec::default());
        assert_eq!(realize(&Multigraph::complete(4)).singular_maximal_ideals.len(), 6);
    }

    #[test]
    fn families_reject_bad_parameters() {
        assert!(family(Family::Ngon { m: 2 }).is_err());
        assert!(family(Family::Banana { k: 1 }).is_err());
        assert!(family(Family::Complete { n: 1 }).is_err());
        assert_eq!(intersection_graph(&family(Family::Complete { n: 4 }).unwrap()).unwrap().size(), 6);
    }
}
