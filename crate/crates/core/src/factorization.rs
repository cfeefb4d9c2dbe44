//! Factorizations in `A(G)` and the arithmetical invariants built on them.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::agglomeration::{Agglomeration, AgglomerationError};
use crate::engine::{self, AtomTable, AtomicMonoid, ExtremesMemo, LengthMemo};
use crate::multigraph::{
    connected_components, enumerate_connected_subgraphs, is_acyclic, simple_cycles, GraphError, Multigraph, Subgraph,
};
use crate::scalar::{Rational, Weight};

pub use crate::elasticity::{elasticity, rho_k, ElasticityReport, RhoK};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error("factorizations belong to different elements")]
    DifferentElements,
    #[error("k must be at least 2, got {0}")]
    BadK(usize),
    #[error(transparent)]
    Agglomeration(#[from] AgglomerationError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `A(G)` with its atoms enumerated once, ready for repeated queries.
#[derive(Clone, Debug)]
pub struct AggMonoid<W: Weight = u64> {
    graph: Arc<Multigraph>,
    subgraphs: Vec<Subgraph>,
    table: AtomTable<W>,
    // (vertex in the atom, incident edge outside it)
    boundary: Vec<Vec<(usize, usize)>>,
}

impl<W: Weight> AggMonoid<W> {
    pub fn new(graph: Arc<Multigraph>) -> Result<Self, GraphError> {
        let subgraphs = enumerate_connected_subgraphs(&graph)?;
        Ok(Self::with_atoms(graph, subgraphs))
    }

    /// Restricts the atom list to the given connected subgraphs.
    ///
    /// Useful when every element of interest lives on a fixed support.
    pub fn with_atoms(graph: Arc<Multigraph>, subgraphs: Vec<Subgraph>) -> Self {
        let n = graph.order();
        let sparse = subgraphs
            .iter()
            .map(|s| s.vertices.iter().copied().chain(s.edges.iter().map(|&e| n + e)).map(|c| (c, W::one())).collect())
            .collect();
        let boundary = subgraphs
            .iter()
            .map(|s| {
                let mut b = Vec::new();
                for &v in &s.vertices {
                    for e in graph.incident_edges(v) {
                        if !s.contains_edge(e) {
                            b.push((v, e));
                        }
                    }
                }
                b
            })
            .collect();
        let table = AtomTable::new(n + graph.size(), sparse);
        Self { graph, subgraphs, table, boundary }
    }

    pub fn graph(&self) -> &Arc<Multigraph> {
        &self.graph
    }

    pub fn subgraphs(&self) -> &[Subgraph] {
        &self.subgraphs
    }

    pub fn atom_element(&self, i: usize) -> Agglomeration<W> {
        Agglomeration::indicator(self.graph.clone(), &self.subgraphs[i]).expect("atom subgraph")
    }

    /// Position of a connected subgraph in the atom list.
    pub fn index_of(&self, s: &Subgraph) -> Option<usize> {
        self.subgraphs.binary_search(s).ok()
    }

    fn check(&self, a: &Agglomeration<W>) -> Result<(), AgglomerationError> {
        if **a.graph_arc() == *self.graph {
            Ok(())
        } else {
            Err(AgglomerationError::MismatchedGraphs)
        }
    }

    fn wrap(&self, a: &Agglomeration<W>, zs: Vec<Vec<usize>>) -> Vec<Factorization<W>> {
        zs.into_iter()
            .map(|z| Factorization {
                element: a.clone(),
                atoms: z.into_iter().map(|i| self.subgraphs[i].clone()).collect(),
            })
            .collect()
    }

    pub fn factorizations(
        &self,
        a: &Agglomeration<W>,
        cap: Option<usize>,
    ) -> Result<Factorizations<W>, AgglomerationError> {
        self.check(a)?;
        let list = engine::factorizations(self, a.weights(), cap);
        Ok(Factorizations { items: self.wrap(a, list.items), complete: list.complete, cap })
    }

    /// Factorizations as atom-index multisets.
    pub fn factorization_indices(&self, a: &Agglomeration<W>, cap: Option<usize>) -> engine::FactorizationList {
        engine::factorizations(self, a.weights(), cap)
    }

    pub fn length_set(&self, a: &Agglomeration<W>, memo: &mut LengthMemo<W>) -> Result<LengthSet, AgglomerationError> {
        self.check(a)?;
        Ok(LengthSet::new(engine::length_set(self, a.weights(), memo)))
    }

    pub fn extremes(&self, a: &[W], memo: &mut ExtremesMemo<W>) -> Option<(usize, usize)> {
        engine::extremes(self, a, memo)
    }
}

impl<W: Weight> AtomicMonoid for AggMonoid<W> {
    type W = W;

    fn dim(&self) -> usize {
        self.table.dim()
    }

    fn atom_count(&self) -> usize {
        self.table.len()
    }

    fn atom(&self, i: usize) -> &[(usize, W)] {
        self.table.atom(i)
    }

    fn covering(&self, c: usize) -> &[usize] {
        self.table.covering(c)
    }

    fn is_member(&self, x: &[W]) -> bool {
        let n = self.graph.order();
        (0..self.graph.size()).all(|e| {
            let (a, b) = self.graph.ends(e);
            x[a] >= x[n + e] && x[b] >= x[n + e]
        })
    }

    fn divides(&self, i: usize, x: &[W]) -> bool {
        let n = self.graph.order();
        self.table.atom(i).iter().all(|(c, _)| !x[*c].is_zero())
            && self.boundary[i].iter().all(|&(v, e)| x[v] > x[n + e])
    }
}

/// A multiset of atoms, canonically sorted, together with the element it sums to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<W: Weight = u64> {
    pub element: Agglomeration<W>,
    pub atoms: Vec<Subgraph>,
}

impl<W: Weight> Factorization<W> {
    /// Validates that each member is an atom and that they sum to `element`.
    pub fn new(element: Agglomeration<W>, mut atoms: Vec<Subgraph>) -> Result<Self, AgglomerationError> {
        atoms.sort();
        let graph = element.graph_arc().clone();
        let mut sum = Agglomeration::zero(graph.clone());
        for s in &atoms {
            let a = Agglomeration::indicator(graph.clone(), s)?;
            if !a.is_atom() {
                return Err(AgglomerationError::NotAnAtom);
            }
            sum = sum.add(&a)?;
        }
        if sum != element {
            return Err(AgglomerationError::MismatchedGraphs);
        }
        Ok(Self { element, atoms })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }
}

/// Enumerated factorizations; `complete` is false when `cap` cut the search short.
#[derive(Clone, Debug)]
pub struct Factorizations<W: Weight = u64> {
    pub items: Vec<Factorization<W>>,
    pub complete: bool,
    pub cap: Option<usize>,
}

/// A set of factorization lengths, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LengthSet {
    lengths: Vec<usize>,
}

impl LengthSet {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable();
        lengths.dedup();
        Self { lengths }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.lengths
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn contains(&self, l: usize) -> bool {
        self.lengths.binary_search(&l).is_ok()
    }

    pub fn min(&self) -> Option<usize> {
        self.lengths.first().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.lengths.last().copied()
    }

    pub fn is_singleton(&self) -> bool {
        self.lengths.len() == 1
    }

    /// `Δ(L)`: the distinct gaps between consecutive lengths.
    pub fn delta(&self) -> Vec<usize> {
        engine::delta(&self.lengths)
    }

    /// `max L / min L`, with `ρ({0}) = 1`.
    pub fn elasticity(&self) -> Rational {
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) if lo > 0 => Rational::new(hi as i64, lo as i64),
            _ => Rational::one(),
        }
    }
}

/// All factorizations of `a`, at most `cap` of them.
pub fn factorizations<W: Weight>(
    a: &Agglomeration<W>,
    cap: Option<usize>,
) -> Result<Factorizations<W>, FactorizationError> {
    let m = AggMonoid::<W>::new(a.graph_arc().clone())?;
    Ok(m.factorizations(a, cap)?)
}

/// `L(a)`.
pub fn length_set<W: Weight>(a: &Agglomeration<W>) -> Result<LengthSet, FactorizationError> {
    let m = AggMonoid::<W>::new(a.graph_arc().clone())?;
    Ok(m.length_set(a, &mut LengthMemo::default())?)
}

/// `d(z, z')` between two factorizations of the same element.
pub fn distance<W: Weight>(z: &Factorization<W>, w: &Factorization<W>) -> Result<usize, FactorizationError> {
    if z.element != w.element {
        return Err(FactorizationError::DifferentElements);
    }
    // subgraph multisets are sorted, so the merge in the engine applies after
    // ranking the distinct subgraphs
    let mut all: Vec<&Subgraph> = z.atoms.iter().chain(&w.atoms).collect();
    all.sort();
    all.dedup();
    let rank = |s: &Subgraph| all.binary_search(&s).expect("present");
    let zi: Vec<usize> = z.atoms.iter().map(rank).collect();
    let wi: Vec<usize> = w.atoms.iter().map(rank).collect();
    Ok(engine::distance(&zi, &wi))
}

/// Catenary degree, or the fact that the enumeration cap was hit first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Catenary {
    Exact(usize),
    Unknown { cap: usize },
}

pub fn catenary_degree<W: Weight>(a: &Agglomeration<W>, cap: Option<usize>) -> Result<Catenary, FactorizationError> {
    let m = AggMonoid::<W>::new(a.graph_arc().clone())?;
    let list = m.factorization_indices(a, cap);
    if !list.complete {
        return Ok(Catenary::Unknown { cap: cap.unwrap_or(usize::MAX) });
    }
    Ok(Catenary::Exact(engine::catenary_degree(&list.items)))
}

/// Calls `f` on every agglomeration of `g` whose weights are all at most `bound`.
///
/// Vertices are enumerated first; each edge then ranges up to the smaller of
/// its end weights.
pub fn for_each_bounded<W: Weight>(g: &Multigraph, bound: usize, mut f: impl FnMut(&[W])) {
    let n = g.order();
    let mut x = vec![W::zero(); n + g.size()];
    fn edges<W: Weight>(g: &Multigraph, e: usize, x: &mut Vec<W>, f: &mut dyn FnMut(&[W])) {
        let n = g.order();
        if e == g.size() {
            f(x);
            return;
        }
        let (a, b) = g.ends(e);
        let top = x[a].clone().min(x[b].clone()).to_count();
        for w in 0..=top {
            x[n + e] = W::from_count(w);
            edges(g, e + 1, x, f);
        }
        x[n + e] = W::zero();
    }
    fn vertices<W: Weight>(g: &Multigraph, v: usize, bound: usize, x: &mut Vec<W>, f: &mut dyn FnMut(&[W])) {
        if v == g.order() {
            edges(g, 0, x, f);
            return;
        }
        for w in 0..=bound {
            x[v] = W::from_count(w);
            vertices(g, v + 1, bound, x, f);
        }
    }
    vertices(g, 0, bound, &mut x, &mut f);
}

/// `ω` of an atom, restricted to elements with weights at most `bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaBound {
    /// Largest `ω(a, b)` seen; a lower bound for `ω(A(G), b)`.
    pub value: usize,
    pub bound: usize,
    /// False when some element had more than `cap` factorizations and was skipped.
    pub complete: bool,
}

pub fn omega_bounded<W: Weight>(
    b: &Agglomeration<W>,
    bound: usize,
    cap: Option<usize>,
) -> Result<OmegaBound, FactorizationError> {
    if !b.is_atom() {
        return Err(AgglomerationError::NotAnAtom.into());
    }
    let m = AggMonoid::<W>::new(b.graph_arc().clone())?;
    let mut value = 0;
    let mut complete = true;
    for_each_bounded::<W>(b.graph(), bound, |x| match engine::omega_at(&m, x, b.weights(), cap) {
        Some(w) => value = value.max(w),
        None => complete = false,
    });
    Ok(OmegaBound { value, bound, complete })
}

/// Evidence that `A(G)` is not half-factorial.
#[derive(Clone, Debug)]
pub struct HalfFactorialWitness<W: Weight = u64> {
    pub element: Agglomeration<W>,
    /// Two verified factorizations of different lengths.
    pub short: Factorization<W>,
    pub long: Factorization<W>,
    /// Full set of lengths, computed when the cycle is short.
    pub lengths: Option<LengthSet>,
}

#[derive(Clone, Debug)]
pub struct HalfFactorial<W: Weight = u64> {
    pub half_factorial: bool,
    pub witness: Option<HalfFactorialWitness<W>>,
}

/// Longest cycle for which the witness carries its full set of lengths.
pub const WITNESS_LENGTH_SET_MAX_CYCLE: usize = 4;

/// Decides half-factoriality; a cyclic graph comes with a witness element.
///
/// The witness lives on a shortest cycle. Two parallel edges `e, e'` between
/// `u, v` give `1_{u,v,e} + 1_{u,v,e'} = 1_{u,v,e,e'} + 1_u + 1_v`; an
/// `n`-cycle `C` gives the sum of its `n` spanning paths, which also equals
/// `(n-1)·1_C + Σ_v 1_v`.
pub fn is_half_factorial<W: Weight>(graph: &Arc<Multigraph>) -> Result<HalfFactorial<W>, FactorizationError> {
    if is_acyclic(graph) {
        return Ok(HalfFactorial { half_factorial: true, witness: None });
    }
    let cycle =
        simple_cycles(graph).into_iter().min_by_key(|c| (c.len(), c.edges.clone())).expect("cyclic graph has a cycle");
    let c = cycle.subgraph();
    let (short, long): (Vec<Subgraph>, Vec<Subgraph>) = if cycle.len() == 2 {
        let (e, f) = (c.edges[0], c.edges[1]);
        let ends = c.vertices.clone();
        (
            vec![Subgraph::new(ends.clone(), vec![e]), Subgraph::new(ends.clone(), vec![f])],
            vec![c.clone(), Subgraph::vertex(ends[0]), Subgraph::vertex(ends[1])],
        )
    } else {
        let paths = c
            .edges
            .iter()
            .map(|&e| Subgraph::new(c.vertices.clone(), c.edges.iter().copied().filter(|&f| f != e).collect()))
            .collect();
        let mut long = vec![c.clone(); cycle.len() - 1];
        long.extend(c.vertices.iter().map(|&v| Subgraph::vertex(v)));
        (paths, long)
    };
    let mut element = Agglomeration::zero(graph.clone());
    for s in &short {
        element = element.add(&Agglomeration::indicator(graph.clone(), s)?)?;
    }
    let short = Factorization::new(element.clone(), short)?;
    let long = Factorization::new(element.clone(), long)?;
    let lengths = if cycle.len() <= WITNESS_LENGTH_SET_MAX_CYCLE {
        let m = AggMonoid::<W>::new(graph.clone())?;
        Some(m.length_set(&element, &mut LengthMemo::default())?)
    } else {
        None
    };
    Ok(HalfFactorial { half_factorial: false, witness: Some(HalfFactorialWitness { element, short, long, lengths }) })
}

/// Factorial exactly when every component has at most one edge.
pub fn is_factorial(g: &Multigraph) -> bool {
    connected_components(g).iter().all(|c| c.size() <= 1)
}

/// `max L / min L` for an element, `1` for zero.
pub fn element_elasticity<W: Weight>(a: &Agglomeration<W>) -> Result<Rational, FactorizationError> {
    let l = length_set(a)?;
    Ok(if l.is_empty() { Rational::zero() } else { l.elasticity() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: Multigraph) -> Arc<Multigraph> {
        Arc::new(g)
    }

    fn k2n_element(n: usize) -> Agg {
        let g = arc(Multigraph::complete_bipartite_2n(n));
        let ws: Vec<usize> = (0..n).map(|j| 2 + j).collect();
        let star = |i: usize| {
            let edges = (0..n).map(|j| i * n + j).collect();
            let mut vs = ws.clone();
            vs.push(i);
            Agglomeration::indicator(g.clone(), &Subgraph::new(vs, edges)).unwrap()
        };
        star(0).add(&star(1)).unwrap()
    }

    type Agg = Agglomeration<u64>;

    #[test]
    fn atoms_factor_uniquely() {
        let g = arc(Multigraph::cycle(3));
        let m = AggMonoid::<u64>::new(g).unwrap();
        for i in 0..m.atom_count() {
            let a = m.atom_element(i);
            let zs = m.factorizations(&a, None).unwrap();
            assert_eq!(zs.items.len(), 1);
            assert_eq!(zs.items[0].len(), 1);
        }
    }

    #[test]
    fn k2n_has_two_factorizations() {
        for n in 2..=4 {
            let a = k2n_element(n);
            let zs = factorizations(&a, None).unwrap();
            assert!(zs.complete);
            let mut lens: Vec<usize> = zs.items.iter().map(Factorization::len).collect();
            lens.sort_unstable();
            assert_eq!(lens, vec![2, n + 1]);
            assert_eq!(length_set(&a).unwrap().as_slice(), &[2, n + 1]);
            assert_eq!(distance(&zs.items[0], &zs.items[1]).unwrap(), n + 1);
            assert_eq!(catenary_degree(&a, None).unwrap(), Catenary::Exact(n + 1));
        }
    }

    #[test]
    fn twice_a_spanning_tree() {
        let g = arc(Multigraph::cycle(3));
        let t = Agglomeration::<u64>::indicator(g, &Subgraph::new(vec![0, 1, 2], vec![0, 1])).unwrap();
        let zs = factorizations(&t.scale(2), None).unwrap();
        assert_eq!(zs.items.len(), 1);
        assert_eq!(zs.items[0].len(), 2);
        assert_eq!(catenary_degree(&t.scale(2), None).unwrap(), Catenary::Exact(0));
    }

    #[test]
    fn zero_has_the_empty_factorization() {
        let g = arc(Multigraph::path(3));
        let z = Agglomeration::<u64>::zero(g);
        let zs = factorizations(&z, None).unwrap();
        assert_eq!(zs.items.len(), 1);
        assert!(zs.items[0].is_empty());
        assert_eq!(length_set(&z).unwrap().as_slice(), &[0]);
        assert_eq!(length_set(&z).unwrap().elasticity(), Rational::one());
    }

    #[test]
    fn acyclic_support_lengths() {
        let g = arc(Multigraph::path(4));
        let a = Agglomeration::<u64>::new(g, vec![2, 3, 3, 1, 1, 2, 1]).unwrap();
        // Σ a(v) − Σ a(e) = 9 − 4
        assert_eq!(length_set(&a).unwrap().as_slice(), &[5]);
    }

    #[test]
    fn length_set_helpers() {
        let l = LengthSet::new(vec![4, 2]);
        assert_eq!(l.delta(), vec![2]);
        assert_eq!(l.elasticity(), Rational::from_integer(2));
        assert_eq!(LengthSet::new(vec![4, 7]).elasticity(), Rational::new(7, 4));
        let s = LengthSet::new(vec![5]);
        assert!(s.delta().is_empty());
        assert_eq!(s.elasticity(), Rational::one());
    }

    #[test]
    fn distance_between_factorizations() {
        let a = k2n_element(3);
        let zs = factorizations(&a, None).unwrap();
        let z = &zs.items[0];
        assert_eq!(distance(z, z).unwrap(), 0);
        let other = Agglomeration::<u64>::all_ones(a.graph_arc().clone());
        let w = &factorizations(&other, None).unwrap().items[0];
        assert_eq!(distance(z, w), Err(FactorizationError::DifferentElements));
        // common part {a}, residuals {b, c} and {d}
        assert_eq!(engine::distance(&[0, 1, 2], &[0, 3]), 2);
    }

    #[test]
    fn omega_values() {
        let p2 = arc(Multigraph::path(2));
        let whole = Agglomeration::<u64>::all_ones(p2);
        assert_eq!(omega_bounded(&whole, 2, None).unwrap().value, 1);
        let iso = arc(Multigraph::trivial());
        let v = Agglomeration::<u64>::all_ones(iso);
        assert_eq!(omega_bounded(&v, 3, None).unwrap().value, 1);
        let c3 = arc(Multigraph::cycle(3));
        let v = Agglomeration::<u64>::indicator(c3.clone(), &Subgraph::vertex(0)).unwrap();
        let w = omega_bounded(&v, 2, None).unwrap();
        assert!(w.complete && w.value >= 2);
        assert!(omega_bounded(&Agglomeration::<u64>::all_ones(c3).scale(2), 1, None).is_err());
    }

    #[test]
    fn half_factorial_decisions() {
        let tree = arc(Multigraph::path(4));
        assert!(is_half_factorial::<u64>(&tree).unwrap().half_factorial);
        let c4 = arc(Multigraph::cycle(4));
        let hf = is_half_factorial::<u64>(&c4).unwrap();
        assert!(!hf.half_factorial);
        let w = hf.witness.unwrap();
        let l = w.lengths.unwrap();
        assert!(l.contains(4) && l.contains(7));
        let b2 = arc(Multigraph::banana(2));
        let w = is_half_factorial::<u64>(&b2).unwrap().witness.unwrap();
        assert_eq!(w.lengths.unwrap().as_slice(), &[2, 3]);
        let c6 = arc(Multigraph::cycle(6));
        let w = is_half_factorial::<u64>(&c6).unwrap().witness.unwrap();
        assert_eq!((w.short.len(), w.long.len()), (6, 11));
        assert!(w.lengths.is_none());
    }

    #[test]
    fn factorial_decisions() {
        let g = Multigraph::path(2)
            .disjoint_union(&Multigraph::new(["x"], Vec::<(&str, &str, &str)>::new()).unwrap())
            .unwrap();
        assert!(is_factorial(&g));
        assert!(!is_factorial(&Multigraph::banana(2)));
        let p3 = Multigraph::path(3);
        assert!(!is_factorial(&p3));
        assert!(is_half_factorial::<u64>(&arc(p3)).unwrap().half_factorial);
    }

    #[test]
    fn bounded_box_counts() {
        // P2 with weights ≤ 1: (v1, v2) ∈ {0,1}², edge ≤ min
        let mut count = 0;
        for_each_bounded::<u64>(&Multigraph::path(2), 1, |_| count += 1);
        assert_eq!(count, 5);
    }
}
