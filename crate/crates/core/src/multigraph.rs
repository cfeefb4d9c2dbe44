//! Finite loopless multigraphs and the graph routines the monoid code relies on.
//!
//! Vertices and edges are addressed by their position in declaration order.
//! That order is the canonical order used everywhere else: subgraphs compare
//! lexicographically by (sorted vertex indices, sorted edge indices).

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Largest order for which [`tree_packing_number`] enumerates vertex partitions.
pub const MAX_PARTITION_ORDER: usize = 10;

/// Largest order accepted by the exhaustive subgraph enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate identifier {0:?}")]
    DuplicateId(String),
    #[error("edge {0:?} is a loop")]
    Loop(String),
    #[error("edge {edge:?} references unknown vertex {vertex:?}")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown vertex or edge {0:?}")]
    UnknownId(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is null")]
    Null,
    #[error("graph is trivial (a single vertex)")]
    Trivial,
    #[error("graph with {order} vertices exceeds the limit of {limit} for this operation")]
    TooLarge { order: usize, limit: usize },
    #[error("subgraph is not a subgraph of this graph")]
    NotASubgraph,
    #[error("malformed graph document: {0}")]
    Parse(String),
}

/// A finite multigraph `(V, E, r)`: parallel edges allowed, loops forbidden.
#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<String>,
    ends: Vec<(usize, usize)>,
    index: HashMap<String, Element>,
}

/// A vertex or an edge of a [`Multigraph`], by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Vertex(usize),
    Edge(usize),
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges
            .iter()
            .zip(&self.ends)
            .map(|(e, &(u, v))| format!("{e}:{}-{}", self.vertices[u], self.vertices[v]))
            .collect();
        f.debug_struct("Multigraph").field("vertices", &self.vertices).field("edges", &edges).finish()
    }
}

impl Multigraph {
    /// Builds a graph from named vertices and `(edge, end, end)` triples.
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (S, S, S)>,
    ) -> Result<Self, GraphError> {
        let mut index = HashMap::new();
        let mut vs = Vec::new();
        for v in vertices {
            let v = v.into();
            if index.insert(v.clone(), Element::Vertex(vs.len())).is_some() {
                return Err(GraphError::DuplicateId(v));
            }
            vs.push(v);
        }
        let mut es = Vec::new();
        let mut ends = Vec::new();
        for (e, a, b) in edges {
            let (e, a, b) = (e.into(), a.into(), b.into());
            let lookup = |x: &String| match index.get(x) {
                Some(Element::Vertex(i)) => Ok(*i),
                _ => Err(GraphError::UnknownEndpoint { edge: e.clone(), vertex: x.clone() }),
            };
            let (u, v) = (lookup(&a)?, lookup(&b)?);
            if u == v {
                return Err(GraphError::Loop(e));
            }
            if index.insert(e.clone(), Element::Edge(es.len())).is_some() {
                return Err(GraphError::DuplicateId(e));
            }
            es.push(e);
            ends.push((u, v));
        }
        Ok(Self { vertices: vs, edges: es, ends, index })
    }

    /// Builds a graph on `n` vertices `v1..vn` with edges `e1..` given by index pairs.
    ///
    /// Panics on a loop or an out-of-range index.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let es: Vec<(String, String, String)> = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (format!("e{}", i + 1), vs[u].clone(), vs[v].clone()))
            .collect();
        Self::new(vs, es).expect("invalid edge list")
    }

    pub fn null() -> Self {
        Self::from_pairs(0, &[])
    }

    pub fn trivial() -> Self {
        Self::from_pairs(1, &[])
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_pairs(n, &[])
    }

    /// Path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// Cycle `C_n`, edge `e_i` joining `v_i` and `v_{i+1}`. Needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_pairs(n, &pairs)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        Self::from_pairs(n, &pairs)
    }

    /// `B_k`: two vertices joined by `k` parallel edges.
    pub fn banana(k: usize) -> Self {
        Self::from_pairs(2, &vec![(0, 1); k])
    }

    /// `K_{2,n}` with vertices `v1, v2, w1..wn` and edges `v_i w_j`.
    pub fn complete_bipartite_2n(n: usize) -> Self {
        let mut vs = vec!["v1".to_string(), "v2".to_string()];
        vs.extend((1..=n).map(|j| format!("w{j}")));
        let mut es = Vec::new();
        for i in 1..=2 {
            for j in 1..=n {
                es.push((format!("v{i}w{j}"), format!("v{i}"), format!("w{j}")));
            }
        }
        Self::new(vs, es).expect("valid bipartite graph")
    }

    /// Disjoint union; identifiers of `other` must not clash with ours.
    pub fn disjoint_union(&self, other: &Multigraph) -> Result<Self, GraphError> {
        let vs = self.vertices.iter().chain(&other.vertices).cloned();
        let es = self.edge_triples().chain(other.edge_triples()).collect::<Vec<_>>();
        Self::new(vs, es)
    }

    /// Copy with every identifier prefixed, for building disjoint unions.
    pub fn prefixed(&self, prefix: &str) -> Multigraph {
        let vs = self.vertices.iter().map(|v| format!("{prefix}{v}"));
        let es: Vec<_> = self
            .edge_triples()
            .map(|(e, a, b)| (format!("{prefix}{e}"), format!("{prefix}{a}"), format!("{prefix}{b}")))
            .collect();
        Multigraph::new(vs, es).expect("prefixing keeps identifiers distinct")
    }

    fn edge_triples(&self) -> impl Iterator<Item = (String, String, String)> + '_ {
        self.edges
            .iter()
            .zip(&self.ends)
            .map(|(e, &(u, v))| (e.clone(), self.vertices[u].clone(), self.vertices[v].clone()))
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_null(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edges[e]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn edge_names(&self) -> &[String] {
        &self.edges
    }

    /// The two endpoints of edge `e`, in declaration order.
    pub fn ends(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    pub fn lookup(&self, id: &str) -> Option<Element> {
        self.index.get(id).copied()
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize, GraphError> {
        match self.index.get(id) {
            Some(Element::Vertex(i)) => Ok(*i),
            _ => Err(GraphError::UnknownVertex(id.to_string())),
        }
    }

    /// Edges incident with `v`, in canonical order.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.ends.iter().enumerate().filter(move |(_, &(a, b))| a == v || b == v).map(|(e, _)| e)
    }

    /// Number of edges incident with `v`; parallel edges each count.
    pub fn degree_of(&self, v: usize) -> usize {
        self.ends.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order()];
        for &(a, b) in &self.ends {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, &d)| d == 0).map(|(v, _)| v).collect()
    }

    /// True when no two edges share both endpoints.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.ends.iter().all(|&(a, b)| seen.insert((a.min(b), a.max(b))))
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || connected_components(self).len() == 1
    }

    /// Neighbours of `v` without repetition, in canonical order.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut n: Vec<usize> = self
            .incident_edges(v)
            .map(|e| {
                let (a, b) = self.ends[e];
                if a == v {
                    b
                } else {
                    a
                }
            })
            .collect();
        n.sort_unstable();
        n.dedup();
        n
    }

    /// The whole graph as a subgraph of itself.
    pub fn full(&self) -> Subgraph {
        Subgraph { vertices: (0..self.order()).collect(), edges: (0..self.size()).collect() }
    }

    /// The subgraph as a standalone graph, keeping identifiers.
    pub fn extract(&self, s: &Subgraph) -> Multigraph {
        let vs = s.vertices.iter().map(|&v| self.vertices[v].clone());
        let es: Vec<_> = s
            .edges
            .iter()
            .map(|&e| {
                let (a, b) = self.ends[e];
                (self.edges[e].clone(), self.vertices[a].clone(), self.vertices[b].clone())
            })
            .collect();
        Multigraph::new(vs, es).expect("subgraph of a valid graph")
    }

    /// Checks that `s` is a well-formed subgraph of this graph.
    pub fn check_subgraph(&self, s: &Subgraph) -> Result<(), GraphError> {
        let in_range = s.vertices.iter().all(|&v| v < self.order()) && s.edges.iter().all(|&e| e < self.size());
        let sorted = s.vertices.windows(2).all(|w| w[0] < w[1]) && s.edges.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !sorted {
            return Err(GraphError::NotASubgraph);
        }
        for &e in &s.edges {
            let (a, b) = self.ends[e];
            if s.vertices.binary_search(&a).is_err() || s.vertices.binary_search(&b).is_err() {
                return Err(GraphError::NotASubgraph);
            }
        }
        Ok(())
    }
}

/// A subgraph `(V', E')` by sorted vertex and edge indices of its ambient graph.
///
/// The derived ordering is the canonical one: lexicographic by vertex list,
/// then by edge list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Subgraph {
    /// Sorts and deduplicates the given indices.
    pub fn new(mut vertices: Vec<usize>, mut edges: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        edges.sort_unstable();
        edges.dedup();
        Self { vertices, edges }
    }

    pub fn vertex(v: usize) -> Self {
        Self { vertices: vec![v], edges: vec![] }
    }

    /// The edge `e` together with its two endpoints.
    pub fn edge(g: &Multigraph, e: usize) -> Self {
        let (a, b) = g.ends(e);
        Self::new(vec![a, b], vec![e])
    }

    pub fn is_null(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// True when the subgraph is non-null and connected.
    pub fn is_connected_in(&self, g: &Multigraph) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(g.order());
        let mut pieces = self.vertices.len();
        for &e in &self.edges {
            let (a, b) = g.ends(e);
            if uf.union(a, b) {
                pieces -= 1;
            }
        }
        pieces == 1
    }

    /// Human-readable `{v1,v2|e1}` form using the ambient graph's identifiers.
    pub fn describe(&self, g: &Multigraph) -> String {
        let vs: Vec<&str> = self.vertices.iter().map(|&v| g.vertex_name(v)).collect();
        let es: Vec<&str> = self.edges.iter().map(|&e| g.edge_name(e)).collect();
        format!("{{{}|{}}}", vs.join(","), es.join(","))
    }
}

/// Disjoint-set forest over `0..n`.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Connected components, ordered by their smallest vertex.
pub fn connected_components(g: &Multigraph) -> Vec<Subgraph> {
    let mut uf = UnionFind::new(g.order());
    for e in 0..g.size() {
        let (a, b) = g.ends(e);
        uf.union(a, b);
    }
    let mut slot: HashMap<usize, usize> = HashMap::new();
    let mut comps: Vec<Subgraph> = Vec::new();
    for v in 0..g.order() {
        let root = uf.find(v);
        let i = *slot.entry(root).or_insert_with(|| {
            comps.push(Subgraph::default());
            comps.len() - 1
        });
        comps[i].vertices.push(v);
    }
    for e in 0..g.size() {
        let root = uf.find(g.ends(e).0);
        comps[slot[&root]].edges.push(e);
    }
    comps
}

/// True iff `g` has no cycle; a pair of parallel edges is a cycle.
pub fn is_acyclic(g: &Multigraph) -> bool {
    let mut uf = UnionFind::new(g.order());
    (0..g.size()).all(|e| {
        let (a, b) = g.ends(e);
        uf.union(a, b)
    })
}

/// Number of edges incident with the named vertex.
pub fn degree(g: &Multigraph, v: &str) -> Result<usize, GraphError> {
    Ok(g.degree_of(g.vertex_index(v)?))
}

fn require_connected_nonnull(g: &Multigraph) -> Result<(), GraphError> {
    if g.is_null() {
        Err(GraphError::Null)
    } else if !g.is_connected() {
        Err(GraphError::Disconnected)
    } else {
        Ok(())
    }
}

/// All non-null connected subgraphs in canonical order.
///
/// For each vertex set that induces a connected subgraph, every edge subset of
/// the induced edges that keeps it connected is emitted. The count equals the
/// number of atoms of the agglomeration monoid.
pub fn enumerate_connected_subgraphs(g: &Multigraph) -> Result<Vec<Subgraph>, GraphError> {
    let n = g.order();
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::TooLarge { order: n, limit: MAX_ENUMERATION_ORDER });
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        let vertices: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let induced: Vec<usize> = (0..g.size())
            .filter(|&e| {
                let (a, b) = g.ends(e);
                mask >> a & 1 == 1 && mask >> b & 1 == 1
            })
            .collect();
        if vertices.len() == 1 {
            out.push(Subgraph { vertices, edges: vec![] });
            continue;
        }
        if !(Subgraph { vertices: vertices.clone(), edges: induced.clone() }).is_connected_in(g) {
            continue;
        }
        collect_connected_edge_sets(g, &vertices, &induced, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Pushes every connected `(vertices, F)` with `F` a subset of `induced`.
///
/// Branches on edges in order, pruning as soon as the edges still available
/// can no longer connect the vertex set.
fn collect_connected_edge_sets(g: &Multigraph, vertices: &[usize], induced: &[usize], out: &mut Vec<Subgraph>) {
    fn can_connect(g: &Multigraph, vertices: &[usize], chosen: &[usize], rest: &[usize]) -> bool {
        let mut uf = UnionFind::new(g.order());
        let mut pieces = vertices.len();
        for &e in chosen.iter().chain(rest) {
            let (a, b) = g.ends(e);
            if uf.union(a, b) {
                pieces -= 1;
            }
        }
        pieces == 1
    }
    fn go(
        g: &Multigraph,
        vertices: &[usize],
        induced: &[usize],
        i: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Subgraph>,
    ) {
        if !can_connect(g, vertices, chosen, &induced[i..]) {
            return;
        }
        if i == induced.len() {
            out.push(Subgraph { vertices: vertices.to_vec(), edges: chosen.clone() });
            return;
        }
        chosen.push(induced[i]);
        go(g, vertices, induced, i + 1, chosen, out);
        chosen.pop();
        go(g, vertices, induced, i + 1, chosen, out);
    }
    go(g, vertices, induced, 0, &mut Vec::new(), out);
}

/// All spanning trees of a connected non-null graph, in canonical order.
///
/// Parallel edges yield distinct trees.
pub fn spanning_trees(g: &Multigraph) -> Result<Vec<Subgraph>, GraphError> {
    require_connected_nonnull(g)?;
    let n = g.order();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n - 1);
    fn go(g: &Multigraph, start: usize, need: usize, chosen: &mut Vec<usize>, out: &mut Vec<Subgraph>) {
        if chosen.len() == need {
            let mut uf = UnionFind::new(g.order());
            if chosen.iter().all(|&e| {
                let (a, b) = g.ends(e);
                uf.union(a, b)
            }) {
                out.push(Subgraph { vertices: (0..g.order()).collect(), edges: chosen.clone() });
            }
            return;
        }
        let remaining = need - chosen.len();
        for e in start..=g.size().saturating_sub(remaining) {
            if e >= g.size() {
                break;
            }
            chosen.push(e);
            go(g, e + 1, need, chosen, out);
            chosen.pop();
        }
    }
    go(g, 0, n - 1, &mut chosen, &mut out);
    Ok(out)
}

/// Calls `f` on every set partition of `0..n`, given as a block label per element.
///
/// Labels form restricted growth strings, so each partition is visited once.
pub fn for_each_set_partition(n: usize, mut f: impl FnMut(&[usize], usize)) {
    fn go(labels: &mut Vec<usize>, n: usize, blocks: usize, f: &mut dyn FnMut(&[usize], usize)) {
        if labels.len() == n {
            f(labels, blocks);
            return;
        }
        for b in 0..=blocks {
            labels.push(b);
            go(labels, n, blocks.max(b + 1), f);
            labels.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, &mut f);
}

/// Spanning tree packing number `τ(G)` by the Nash-Williams/Tutte formula.
///
/// `τ(G) = min over partitions P of V with |P| >= 2 of ⌊cross(P) / (|P| - 1)⌋`.
/// The trivial graph packs arbitrarily many (empty) trees and is rejected.
pub fn tree_packing_number(g: &Multigraph) -> Result<usize, GraphError> {
    require_connected_nonnull(g)?;
    let n = g.order();
    if n == 1 {
        return Err(GraphError::Trivial);
    }
    if n > MAX_PARTITION_ORDER {
        return Err(GraphError::TooLarge { order: n, limit: MAX_PARTITION_ORDER });
    }
    let mut best = usize::MAX;
    for_each_set_partition(n, |labels, blocks| {
        if blocks < 2 {
            return;
        }
        let cross = (0..g.size())
            .filter(|&e| {
                let (a, b) = g.ends(e);
                labels[a] != labels[b]
            })
            .count();
        best = best.min(cross / (blocks - 1));
    });
    Ok(best)
}

/// Simple cycles as edge lists, each reported once.
///
/// A pair of parallel edges is reported as a cycle of length two. Intended
/// for desk-scale graphs; the count grows exponentially.
pub fn simple_cycles(g: &Multigraph) -> Vec<Cycle> {
    let mut out = Vec::new();
    for start in 0..g.order() {
        let mut on_path = vec![false; g.order()];
        on_path[start] = true;
        let mut vpath = vec![start];
        let mut epath = Vec::new();
        cycle_dfs(g, start, start, &mut on_path, &mut vpath, &mut epath, &mut out);
    }
    out
}

/// A closed walk `v_0 e_0 v_1 e_1 ... v_{n-1} e_{n-1} v_0` without repeated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn subgraph(&self) -> Subgraph {
        Subgraph::new(self.vertices.clone(), self.edges.clone())
    }
}

fn cycle_dfs(
    g: &Multigraph,
    start: usize,
    at: usize,
    on_path: &mut [bool],
    vpath: &mut Vec<usize>,
    epath: &mut Vec<usize>,
    out: &mut Vec<Cycle>,
) {
    for e in g.incident_edges(at).collect::<Vec<_>>() {
        if epath.contains(&e) {
            continue;
        }
        let (a, b) = g.ends(e);
        let next = if a == at { b } else { a };
        if next == start {
            // close the cycle; report it once: smallest vertex is start, and
            // for length >= 3 the first edge is smaller than the last
            let closed_len = epath.len() + 1;
            let keep = if closed_len == 2 { epath[0] < e } else { epath.first().is_some_and(|&f| f < e) };
            if keep {
                let mut edges = epath.clone();
                edges.push(e);
                out.push(Cycle { vertices: vpath.clone(), edges });
            }
            continue;
        }
        if next < start || on_path[next] {
            continue;
        }
        on_path[next] = true;
        vpath.push(next);
        epath.push(e);
        cycle_dfs(g, start, next, on_path, vpath, epath, out);
        epath.pop();
        vpath.pop();
        on_path[next] = false;
    }
}

/// Parses a graph from its JSON document or the line-oriented text format.
pub fn parse_graph(text: &str) -> Result<Multigraph, GraphError> {
    if text.trim_start().starts_with('{') {
        crate::io::graph_from_json(text)
    } else {
        parse_graph_text(text)
    }
}

/// Parses `v <name>` / `e <name> <v1> <v2>` lines; `#` starts a comment.
pub fn parse_graph_text(text: &str) -> Result<Multigraph, GraphError> {
    let mut vs = Vec::new();
    let mut es = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["v", name] => vs.push(name.to_string()),
            ["e", name, a, b] => es.push((name.to_string(), a.to_string(), b.to_string())),
            _ => {
                return Err(GraphError::Parse(format!("line {}: {raw:?}", lineno + 1)));
            }
        }
    }
    Multigraph::new(vs, es)
}
