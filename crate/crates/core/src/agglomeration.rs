//! Agglomerations of a multigraph and the monoid `A(G)` they form.
//!
//! An agglomeration is a weight on every vertex and edge such that each vertex
//! weighs at least as much as every edge incident with it. Weights are stored
//! densely: the vertices in declaration order, followed by the edges.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::multigraph::{
    connected_components, enumerate_connected_subgraphs, Element, GraphError, Multigraph, Subgraph,
};
use crate::scalar::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AgglomerationError {
    #[error("agglomerations live on different graphs")]
    MismatchedGraphs,
    #[error("edge {edge:?} outweighs its end {vertex:?}")]
    Invariant { edge: String, vertex: String },
    #[error("expected {expected} weights, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("operation needs a nonzero agglomeration")]
    Zero,
    #[error("not an atom")]
    NotAnAtom,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A weight `a: V ∪ E → N_0` with `a(v) >= a(e)` whenever `e` is incident with `v`.
#[derive(Clone)]
pub struct Agglomeration<W: Weight = u64> {
    graph: Arc<Multigraph>,
    weights: Vec<W>,
}

impl<W: Weight> PartialEq for Agglomeration<W> {
    fn eq(&self, other: &Self) -> bool {
        same_graph(&self.graph, &other.graph) && self.weights == other.weights
    }
}

impl<W: Weight> Eq for Agglomeration<W> {}

impl<W: Weight> fmt::Debug for Agglomeration<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.named_weights().filter(|(_, w)| !w.is_zero())).finish()
    }
}

fn same_graph(a: &Arc<Multigraph>, b: &Arc<Multigraph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Index of the first violated `(edge, end)` pair, if any.
fn first_violation<W: Weight>(g: &Multigraph, weights: &[W]) -> Option<(usize, usize)> {
    let n = g.order();
    (0..g.size()).find_map(|e| {
        let (a, b) = g.ends(e);
        let we = &weights[n + e];
        [a, b].into_iter().find(|&v| weights[v] < *we).map(|v| (e, v))
    })
}

impl<W: Weight> Agglomeration<W> {
    /// Validates and wraps a dense weight vector (vertices, then edges).
    pub fn new(graph: Arc<Multigraph>, weights: Vec<W>) -> Result<Self, AgglomerationError> {
        let expected = graph.order() + graph.size();
        if weights.len() != expected {
            return Err(AgglomerationError::WrongLength { expected, got: weights.len() });
        }
        if let Some((e, v)) = first_violation(&graph, &weights) {
            return Err(AgglomerationError::Invariant {
                edge: graph.edge_name(e).to_string(),
                vertex: graph.vertex_name(v).to_string(),
            });
        }
        Ok(Self { graph, weights })
    }

    /// Builds from `(identifier, weight)` pairs; omitted identifiers weigh 0.
    pub fn from_named<'a>(
        graph: Arc<Multigraph>,
        pairs: impl IntoIterator<Item = (&'a str, W)>,
    ) -> Result<Self, AgglomerationError> {
        let n = graph.order();
        let mut weights = vec![W::zero(); n + graph.size()];
        for (id, w) in pairs {
            let slot = match graph.lookup(id) {
                Some(Element::Vertex(v)) => v,
                Some(Element::Edge(e)) => n + e,
                None => return Err(GraphError::UnknownId(id.to_string()).into()),
            };
            weights[slot] = w;
        }
        Self::new(graph, weights)
    }

    pub fn zero(graph: Arc<Multigraph>) -> Self {
        let len = graph.order() + graph.size();
        Self { graph, weights: vec![W::zero(); len] }
    }

    /// The indicator `1_{G'}` of a subgraph.
    pub fn indicator(graph: Arc<Multigraph>, s: &Subgraph) -> Result<Self, AgglomerationError> {
        graph.check_subgraph(s)?;
        let n = graph.order();
        let mut weights = vec![W::zero(); n + graph.size()];
        for &v in &s.vertices {
            weights[v] = W::one();
        }
        for &e in &s.edges {
            weights[n + e] = W::one();
        }
        Ok(Self { graph, weights })
    }

    /// Weight 1 on every vertex and every edge.
    pub fn all_ones(graph: Arc<Multigraph>) -> Self {
        let len = graph.order() + graph.size();
        Self { graph, weights: vec![W::one(); len] }
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Multigraph> {
        &self.graph
    }

    /// Dense weights: vertices in order, then edges in order.
    pub fn weights(&self) -> &[W] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<W> {
        self.weights
    }

    pub fn vertex_weight(&self, v: usize) -> &W {
        &self.weights[v]
    }

    pub fn edge_weight(&self, e: usize) -> &W {
        &self.weights[self.graph.order() + e]
    }

    /// `(identifier, weight)` for every vertex and edge in canonical order.
    pub fn named_weights(&self) -> impl Iterator<Item = (&str, &W)> + '_ {
        let g = &*self.graph;
        g.vertex_names().iter().chain(g.edge_names()).map(String::as_str).zip(&self.weights)
    }

    /// Nonzero weights keyed by identifier.
    pub fn to_map(&self) -> BTreeMap<String, W> {
        self.named_weights().filter(|(_, w)| !w.is_zero()).map(|(k, w)| (k.to_string(), w.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(W::is_zero)
    }

    pub fn max_weight(&self) -> W {
        self.weights.iter().max().cloned().unwrap_or_else(W::zero)
    }

    fn check_same(&self, other: &Self) -> Result<(), AgglomerationError> {
        if same_graph(&self.graph, &other.graph) {
            Ok(())
        } else {
            Err(AgglomerationError::MismatchedGraphs)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AgglomerationError> {
        self.check_same(other)?;
        let weights = self.weights.iter().zip(&other.weights).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { graph: self.graph.clone(), weights })
    }

    /// `n · a`.
    pub fn scale(&self, n: usize) -> Self {
        let k = W::from_count(n);
        let weights = self.weights.iter().map(|w| w.clone() * k.clone()).collect();
        Self { graph: self.graph.clone(), weights }
    }

    /// The `c` with `other + c = self`, when it exists in `A(G)`.
    pub fn try_subtract(&self, other: &Self) -> Result<Option<Self>, AgglomerationError> {
        self.check_same(other)?;
        let mut weights = Vec::with_capacity(self.weights.len());
        for (a, b) in self.weights.iter().zip(&other.weights) {
            match a.checked_sub(b) {
                Some(c) => weights.push(c),
                None => return Ok(None),
            }
        }
        if first_violation(&self.graph, &weights).is_some() {
            return Ok(None);
        }
        Ok(Some(Self { graph: self.graph.clone(), weights }))
    }

    /// `other` divides `self` in `A(G)`.
    pub fn divides(&self, other: &Self) -> Result<bool, AgglomerationError> {
        Ok(other.try_subtract(self)?.is_some())
    }

    /// Vertices and edges of positive weight.
    pub fn support(&self) -> Subgraph {
        let n = self.graph.order();
        let vertices = (0..n).filter(|&v| !self.weights[v].is_zero()).collect();
        let edges = (0..self.graph.size()).filter(|&e| !self.weights[n + e].is_zero()).collect();
        Subgraph { vertices, edges }
    }

    fn split_by(&self, keep: impl Fn(&W) -> bool) -> (Self, Self) {
        let mut b = Vec::with_capacity(self.weights.len());
        let mut rest = Vec::with_capacity(self.weights.len());
        for w in &self.weights {
            if keep(w) {
                b.push(W::one());
                rest.push(w.clone() - W::one());
            } else {
                b.push(W::zero());
                rest.push(w.clone());
            }
        }
        (Self { graph: self.graph.clone(), weights: b }, Self { graph: self.graph.clone(), weights: rest })
    }

    /// `(1_{G_m}, a - 1_{G_m})` where `G_m` is where `a` attains its maximum.
    pub fn split_max(&self) -> Result<(Self, Self), AgglomerationError> {
        if self.is_zero() {
            return Err(AgglomerationError::Zero);
        }
        let m = self.max_weight();
        Ok(self.split_by(|w| *w == m))
    }

    /// `(1_{supp a}, a - 1_{supp a})`.
    pub fn split_support(&self) -> Result<(Self, Self), AgglomerationError> {
        if self.is_zero() {
            return Err(AgglomerationError::Zero);
        }
        Ok(self.split_by(|w| !w.is_zero()))
    }

    /// Peels supports off until nothing is left; one atom per step.
    pub fn support_factorization(&self) -> Vec<Self> {
        let mut out = Vec::new();
        let mut rest = self.clone();
        while let Ok((b, r)) = rest.split_support() {
            out.push(b);
            rest = r;
        }
        out
    }

    /// Indicator of a non-null connected subgraph.
    pub fn is_atom(&self) -> bool {
        self.weights.iter().all(|w| w.is_zero() || w.is_one()) && self.support().is_connected_in(&self.graph)
    }

    /// Atom whose support vertices all have ambient degree at most one.
    pub fn is_prime_atom(&self) -> Result<bool, AgglomerationError> {
        if !self.is_atom() {
            return Err(AgglomerationError::NotAnAtom);
        }
        Ok(self.support().vertices.iter().all(|&v| self.graph.degree_of(v) <= 1))
    }

    /// `ℓ(a) = Σ_v deg(v)·a(v) − Σ_e a(e)`.
    pub fn sequence_length(&self) -> W {
        let g = &*self.graph;
        let n = g.order();
        let mut total = W::zero();
        for (v, d) in g.degrees().into_iter().enumerate() {
            total += self.weights[v].clone() * W::from_count(d);
        }
        for e in 0..g.size() {
            total -= self.weights[n + e].clone();
        }
        total
    }
}

/// Indicators of all non-null connected subgraphs, in canonical order.
pub fn atoms<W: Weight>(graph: &Arc<Multigraph>) -> Result<Vec<Agglomeration<W>>, GraphError> {
    Ok(enumerate_connected_subgraphs(graph)?
        .iter()
        .map(|s| Agglomeration::indicator(graph.clone(), s).expect("enumerated subgraph"))
        .collect())
}

/// Largest sequence length of an atom.
///
/// On a connected non-trivial graph this is `2|E| − |V| + 1`; a trivial
/// component contributes `0`, and disconnected graphs take the maximum over
/// their components.
pub fn davenport(g: &Multigraph) -> Result<usize, GraphError> {
    if g.is_null() {
        return Err(GraphError::Null);
    }
    Ok(connected_components(g)
        .iter()
        .map(|c| if c.order() == 1 { 0 } else { 2 * c.size() + 1 - c.order() })
        .max()
        .unwrap_or(0))
}

/// All atoms of maximal sequence length on a connected non-trivial graph.
///
/// When every vertex has degree at least two these are exactly the spanning
/// tree indicators.
pub fn max_length_atoms<W: Weight>(graph: &Arc<Multigraph>) -> Result<Vec<Agglomeration<W>>, GraphError> {
    if graph.is_null() {
        return Err(GraphError::Null);
    }
    if !graph.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if graph.order() == 1 {
        return Err(GraphError::Trivial);
    }
    let d = W::from_count(davenport(graph)?);
    Ok(atoms::<W>(graph)?.into_iter().filter(|a| a.sequence_length() == d).collect())
}
