//! Elasticity `ρ(A(G))` and refined elasticities `ρ_k(A(G))`.
//!
//! Upper bounds come from the semi-length functions
//! `σ_r(a) = r·Σ a(v) − Σ a(e)`, valid for `r > D/2` with `D` the maximal
//! degree: `ρ <= M*(r)/m*(r)` where `M*`, `m*` are the largest and smallest
//! values of `σ_r` on atoms. On an atom `σ_r` is the line `r|V_a| − |E_a|`,
//! so both envelopes are piecewise linear and the ratio is minimised at a
//! breakpoint or in a limit. Lower bounds are ratios of lengths of explicit
//! verified factorizations, plus a bounded search over sums of atoms.

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::agglomeration::Agglomeration;
use crate::engine::{self, AtomicMonoid, ExtremesMemo};
use crate::factorization::{AggMonoid, Factorization, FactorizationError};
use crate::multigraph::{
    connected_components, simple_cycles, tree_packing_number, GraphError, Multigraph, Subgraph, UnionFind,
};
use crate::scalar::{serde_rational, Rational};

/// Default number of atoms summed by the lower-bound search.
pub const DEFAULT_SEARCH_DEPTH: usize = 8;

/// Default number of distinct elements the lower-bound search may examine.
pub const DEFAULT_ELEMENT_BUDGET: usize = 4_000;

/// Memo entries kept by the search before the memo is cleared.
const MEMO_LIMIT: usize = 2_000_000;

/// Search limits for the lower bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub depth: usize,
    pub element_budget: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { depth: DEFAULT_SEARCH_DEPTH, element_budget: DEFAULT_ELEMENT_BUDGET }
    }
}

impl SearchOptions {
    pub fn with_depth(depth: usize) -> Self {
        Self { depth, ..Self::default() }
    }
}

/// Where the semi-length ratio was minimised.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "at", content = "r", rename_all = "snake_case")]
pub enum SemiLengthPoint {
    Value(#[serde(with = "serde_rational")] Rational),
    /// Limit as `r` decreases to the given value.
    LimitFromAbove(#[serde(with = "serde_rational")] Rational),
    Infinity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum UpperCertificate {
    /// Only trivial components: the monoid is free.
    Trivial,
    /// `m − (m − 1)/D`.
    GenericBound,
    /// `m − 2 + 2/m` for simple graphs.
    SimpleBound,
    SemiLength {
        point: SemiLengthPoint,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Trivial,
    Cycle,
    Banana,
    Star,
    Search,
}

/// An element with two factorizations whose length ratio is the lower bound.
#[derive(Clone, Debug)]
pub struct LowerWitness {
    pub kind: WitnessKind,
    pub element: Agglomeration<u64>,
    pub short: usize,
    pub long: usize,
}

#[derive(Clone, Debug)]
pub struct ElasticityReport {
    pub lower: Rational,
    pub upper: Rational,
    pub exact: bool,
    pub witness: Option<LowerWitness>,
    pub certificate: UpperCertificate,
    /// Largest component order.
    pub m: usize,
    /// Largest degree.
    pub max_degree: usize,
}

/// Per-component data for the upper bound.
struct Upper {
    value: Rational,
    certificate: UpperCertificate,
}

fn rat(n: usize) -> Rational {
    Rational::from_integer(n as i64)
}

/// `ρ(A(G))` with default search limits.
pub fn elasticity(g: &Arc<Multigraph>, search_depth: usize) -> Result<ElasticityReport, GraphError> {
    elasticity_with(g, SearchOptions::with_depth(search_depth))
}

pub fn elasticity_with(g: &Arc<Multigraph>, opts: SearchOptions) -> Result<ElasticityReport, GraphError> {
    if g.is_null() {
        return Err(GraphError::Null);
    }
    let mut upper: Option<Upper> = None;
    let mut lower = Rational::one();
    let mut witness = None;
    for comp in connected_components(g) {
        if comp.order() == 1 {
            continue;
        }
        let u = component_upper(&g.extract(&comp));
        if upper.as_ref().is_none_or(|b| u.value > b.value) {
            upper = Some(u);
        }
        if let Some(w) = component_lower(g, &comp, opts) {
            let r = Rational::new(w.long as i64, w.short as i64);
            if r > lower {
                lower = r;
                witness = Some(w);
            }
        }
    }
    if witness.is_none() {
        let v = Subgraph::vertex(0);
        let element = Agglomeration::indicator(g.clone(), &v).expect("vertex");
        witness = Some(LowerWitness { kind: WitnessKind::Trivial, element, short: 1, long: 1 });
    }
    let upper = upper.unwrap_or(Upper { value: Rational::one(), certificate: UpperCertificate::Trivial });
    assert!(lower <= upper.value, "lower bound {lower} exceeds upper bound {}", upper.value);
    Ok(ElasticityReport {
        exact: lower == upper.value,
        lower,
        upper: upper.value,
        witness,
        certificate: upper.certificate,
        m: connected_components(g).iter().map(Subgraph::order).max().unwrap_or(0),
        max_degree: g.max_degree(),
    })
}

/// Upper bound for a connected graph with at least two vertices.
fn component_upper(h: &Multigraph) -> Upper {
    let m = h.order();
    let d = h.max_degree();
    let generic = rat(m) - Rational::new(m as i64 - 1, d as i64);
    let mut best = Upper { value: generic, certificate: UpperCertificate::GenericBound };
    if h.is_simple() {
        let simple = rat(m) - rat(2) + Rational::new(2, m as i64);
        if simple < best.value {
            best = Upper { value: simple, certificate: UpperCertificate::SimpleBound };
        }
    }
    let (value, point) = semi_length_optimum(h);
    if value < best.value {
        best = Upper { value, certificate: UpperCertificate::SemiLength { point } };
    }
    best
}

/// Most edges of a connected subgraph on exactly `v` vertices, for each `v`.
pub fn max_connected_edges(h: &Multigraph) -> Vec<usize> {
    let n = h.order();
    assert!(n <= 24, "vertex subsets are enumerated");
    let mut best = vec![0usize; n + 1];
    for mask in 1u32..(1u32 << n) {
        let k = mask.count_ones() as usize;
        let mut uf = UnionFind::new(n);
        let mut pieces = k;
        let mut edges = 0;
        for e in 0..h.size() {
            let (a, b) = h.ends(e);
            if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
                edges += 1;
                if uf.union(a, b) {
                    pieces -= 1;
                }
            }
        }
        if pieces == 1 {
            best[k] = best[k].max(edges);
        }
    }
    best
}

/// `min over r > D/2` of `M*(r)/m*(r)` for a connected graph with an edge.
///
/// Atom lines are `r·v − e`. The top envelope uses trees (`e = v − 1`), the
/// bottom one the densest connected subgraph on `v` vertices.
pub fn semi_length_optimum(h: &Multigraph) -> (Rational, SemiLengthPoint) {
    let m = h.order();
    let dense = max_connected_edges(h);
    let mut lines: Vec<(i64, i64)> = Vec::new();
    for (v, &d) in dense.iter().enumerate().take(m + 1).skip(1) {
        lines.push((v as i64, v as i64 - 1));
        lines.push((v as i64, d as i64));
    }
    lines.sort_unstable();
    lines.dedup();
    let eval = |r: Rational| -> (Rational, Rational) {
        let vals = lines.iter().map(|&(v, e)| r * Rational::from_integer(v) - Rational::from_integer(e));
        let hi = vals.clone().max().expect("lines");
        let lo = vals.min().expect("lines");
        (hi, lo)
    };
    let floor = Rational::new(h.max_degree() as i64, 2);
    let mut candidates: Vec<SemiLengthPoint> = vec![SemiLengthPoint::Infinity];
    let (_, lo) = eval(floor);
    if lo > Rational::zero() {
        candidates.push(SemiLengthPoint::LimitFromAbove(floor));
    }
    for (i, &(v1, e1)) in lines.iter().enumerate() {
        for &(v2, e2) in &lines[i + 1..] {
            if v1 != v2 {
                let r = Rational::new(e1 - e2, v1 - v2);
                if r > floor {
                    candidates.push(SemiLengthPoint::Value(r));
                }
            }
        }
    }
    let mut best: Option<(Rational, SemiLengthPoint)> = None;
    for p in candidates {
        let value = match p {
            SemiLengthPoint::Infinity => rat(m),
            SemiLengthPoint::Value(r) | SemiLengthPoint::LimitFromAbove(r) => {
                let (hi, lo) = eval(r);
                if lo <= Rational::zero() {
                    continue;
                }
                hi / lo
            }
        };
        let better = match &best {
            None => true,
            Some((b, bp)) => value < *b || (value == *b && point_key(&p) < point_key(bp)),
        };
        if better {
            best = Some((value, p));
        }
    }
    best.expect("infinity is always a candidate")
}

fn point_key(p: &SemiLengthPoint) -> (u8, Rational) {
    match *p {
        SemiLengthPoint::Value(r) => (0, r),
        SemiLengthPoint::LimitFromAbove(r) => (1, r),
        SemiLengthPoint::Infinity => (2, Rational::zero()),
    }
}

/// `σ_r(a)`.
pub fn semi_length(a: &Agglomeration<u64>, r: Rational) -> Rational {
    let g = a.graph();
    let vs: u64 = (0..g.order()).map(|v| *a.vertex_weight(v)).sum();
    let es: u64 = (0..g.size()).map(|e| *a.edge_weight(e)).sum();
    r * Rational::from_integer(vs as i64) - Rational::from_integer(es as i64)
}

fn sum_of(g: &Arc<Multigraph>, parts: &[Subgraph]) -> Agglomeration<u64> {
    let mut a = Agglomeration::zero(g.clone());
    for s in parts {
        a = a.add(&Agglomeration::indicator(g.clone(), s).expect("subgraph")).expect("same graph");
    }
    a
}

/// Checks both factorizations and packages the witness.
fn certify(g: &Arc<Multigraph>, kind: WitnessKind, short: Vec<Subgraph>, long: Vec<Subgraph>) -> Option<LowerWitness> {
    let element = sum_of(g, &short);
    let (s, l) = (short.len(), long.len());
    let a = Factorization::new(element.clone(), short).ok()?;
    let b = Factorization::new(element.clone(), long).ok()?;
    debug_assert_eq!((a.len(), b.len()), (s, l));
    Some(LowerWitness { kind, element, short: s, long: l })
}

/// `n` spanning paths of a cycle versus `(n − 1)` copies of it plus its vertices.
pub fn cycle_witness(g: &Arc<Multigraph>, cycle: &Subgraph) -> Option<LowerWitness> {
    let n = cycle.size();
    let short: Vec<Subgraph> = cycle
        .edges
        .iter()
        .map(|&e| Subgraph::new(cycle.vertices.clone(), cycle.edges.iter().copied().filter(|&f| f != e).collect()))
        .collect();
    let mut long = vec![cycle.clone(); n - 1];
    long.extend(cycle.vertices.iter().map(|&v| Subgraph::vertex(v)));
    certify(g, WitnessKind::Cycle, short, long)
}

/// `k` single-edge atoms of a banana versus the banana plus `k − 1` copies of each end.
pub fn banana_witness(g: &Arc<Multigraph>, banana: &Subgraph) -> Option<LowerWitness> {
    let k = banana.size();
    let short = banana.edges.iter().map(|&e| Subgraph::new(banana.vertices.clone(), vec![e])).collect();
    let mut long = vec![banana.clone()];
    for &v in &banana.vertices {
        long.extend(std::iter::repeat_n(Subgraph::vertex(v), k - 1));
    }
    certify(g, WitnessKind::Banana, short, long)
}

/// Stars `G_v` of a connected graph `H` versus `2·1_H + Σ (|N(v)| − 1)·1_v`.
pub fn star_witness(g: &Arc<Multigraph>, host: &Subgraph) -> Option<LowerWitness> {
    if host.order() < 2 {
        return None;
    }
    let h = g.extract(host);
    let mut short = Vec::new();
    let mut long = vec![host.clone(), host.clone()];
    for (i, &v) in host.vertices.iter().enumerate() {
        let edges: Vec<usize> = h.incident_edges(i).map(|e| host.edges[e]).collect();
        let mut verts: Vec<usize> = h.neighbours(i).into_iter().map(|u| host.vertices[u]).collect();
        verts.push(v);
        short.push(Subgraph::new(verts, edges));
        let extra = h.neighbours(i).len().checked_sub(1)?;
        long.extend(std::iter::repeat_n(Subgraph::vertex(v), extra));
    }
    certify(g, WitnessKind::Star, short, long)
}

/// Best closed-form or searched lower bound inside one component.
fn component_lower(g: &Arc<Multigraph>, comp: &Subgraph, opts: SearchOptions) -> Option<LowerWitness> {
    let mut best: Option<LowerWitness> = None;
    let mut offer = |w: Option<LowerWitness>| {
        if let Some(w) = w {
            let better = match &best {
                None => true,
                Some(b) => w.long * b.short > b.long * w.short,
            };
            if better {
                best = Some(w);
            }
        }
    };
    let h = g.extract(comp);
    for c in simple_cycles(&h) {
        let s = Subgraph::new(
            c.vertices.iter().map(|&v| comp.vertices[v]).collect(),
            c.edges.iter().map(|&e| comp.edges[e]).collect(),
        );
        offer(if c.len() == 2 { banana_witness(g, &s) } else { cycle_witness(g, &s) });
    }
    // full parallel classes
    let mut seen = HashSet::new();
    for e in 0..h.size() {
        let (a, b) = h.ends(e);
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            continue;
        }
        let class: Vec<usize> = (0..h.size())
            .filter(|&f| {
                let (x, y) = h.ends(f);
                (x.min(y), x.max(y)) == key
            })
            .map(|f| comp.edges[f])
            .collect();
        if class.len() >= 2 {
            let s = Subgraph::new(vec![comp.vertices[a], comp.vertices[b]], class);
            offer(banana_witness(g, &s));
        }
    }
    // stars of every connected induced subgraph
    let n = h.order();
    if n <= 16 {
        for mask in 1u32..(1u32 << n) {
            if mask.count_ones() < 2 {
                continue;
            }
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let edges: Vec<usize> = (0..h.size())
                .filter(|&e| {
                    let (a, b) = h.ends(e);
                    mask >> a & 1 == 1 && mask >> b & 1 == 1
                })
                .collect();
            let local = Subgraph::new(verts, edges);
            if !local.is_connected_in(&h) {
                continue;
            }
            let s = Subgraph::new(
                local.vertices.iter().map(|&v| comp.vertices[v]).collect(),
                local.edges.iter().map(|&e| comp.edges[e]).collect(),
            );
            offer(star_witness(g, &s));
        }
    } else {
        offer(star_witness(g, comp));
    }
    offer(search_lower(g, comp, opts));
    best
}

/// Component monoid: atoms of `A(G)` supported inside `comp`.
fn component_monoid(g: &Arc<Multigraph>, comp: &Subgraph) -> Option<AggMonoid<u64>> {
    let h = g.extract(comp);
    let subs = crate::multigraph::enumerate_connected_subgraphs(&h).ok()?;
    let mut lifted: Vec<Subgraph> = subs
        .into_iter()
        .map(|s| {
            Subgraph::new(
                s.vertices.iter().map(|&v| comp.vertices[v]).collect(),
                s.edges.iter().map(|&e| comp.edges[e]).collect(),
            )
        })
        .collect();
    lifted.sort();
    Some(AggMonoid::with_atoms(g.clone(), lifted))
}

/// Breadth-first search over sums of up to `depth` atoms for the largest `ρ(a)`.
fn search_lower(g: &Arc<Multigraph>, comp: &Subgraph, opts: SearchOptions) -> Option<LowerWitness> {
    if opts.depth < 2 || opts.element_budget == 0 {
        return None;
    }
    let m = component_monoid(g, comp)?;
    if m.atom_count() > opts.element_budget {
        return None;
    }
    let mut memo = ExtremesMemo::default();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut best: Option<(usize, usize, Vec<u64>)> = None;
    // frontier entries: (element, largest atom index used)
    let mut frontier: Vec<(Vec<u64>, usize)> = (0..m.atom_count()).map(|i| (engine::sum_atoms(&m, &[i]), i)).collect();
    let mut examined = 0;
    'layers: for _ in 2..=opts.depth {
        let mut next = Vec::new();
        for (x, last) in &frontier {
            for i in *last..m.atom_count() {
                let mut y = x.clone();
                for (c, w) in m.atom(i) {
                    y[*c] += *w;
                }
                if !seen.insert(y.clone()) {
                    continue;
                }
                examined += 1;
                if memo.len() > MEMO_LIMIT {
                    memo.clear();
                }
                if let Some((lo, hi)) = engine::extremes(&m, &y, &mut memo) {
                    let better = match &best {
                        None => hi > lo,
                        Some((bl, bh, _)) => hi * bl > bh * lo,
                    };
                    if better {
                        best = Some((lo, hi, y.clone()));
                    }
                }
                next.push((y, i));
                if examined >= opts.element_budget {
                    break 'layers;
                }
            }
        }
        frontier = next;
    }
    let (lo, hi, x) = best?;
    let element = Agglomeration::new(g.clone(), x).ok()?;
    Some(LowerWitness { kind: WitnessKind::Search, element, short: lo, long: hi })
}

/// `ρ_k` as an exact value or as bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RhoK {
    Exact {
        value: usize,
    },
    Bounds {
        lower: usize,
        upper: usize,
        /// True when every sum of `k` atoms was examined, so `lower` is the value.
        lower_is_exact: bool,
    },
}

impl RhoK {
    pub fn lower(&self) -> usize {
        match *self {
            RhoK::Exact { value } => value,
            RhoK::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> usize {
        match *self {
            RhoK::Exact { value } => value,
            RhoK::Bounds { upper, .. } => upper,
        }
    }
}

/// Per-component `ρ_j` bounds for `j = 0..=k`.
struct ComponentRho {
    lower: Vec<usize>,
    upper: Vec<usize>,
    exact: Vec<bool>,
    lower_exact: Vec<bool>,
}

/// `ρ_k(A(G))` for `k >= 2`.
///
/// On a connected graph with `k` edge-disjoint spanning trees the value is
/// `(k − 1)|V| + 1`; otherwise it lies in `[lower, (k − 1)|V|]` where the
/// lower bound comes from sums of `k` atoms. Disconnected graphs combine their
/// components by distributing `k` among them.
pub fn rho_k(g: &Arc<Multigraph>, k: usize, search_depth: usize) -> Result<RhoK, FactorizationError> {
    rho_k_with(g, k, SearchOptions::with_depth(search_depth))
}

pub fn rho_k_with(g: &Arc<Multigraph>, k: usize, opts: SearchOptions) -> Result<RhoK, FactorizationError> {
    if k < 2 {
        return Err(FactorizationError::BadK(k));
    }
    if g.is_null() {
        return Err(GraphError::Null.into());
    }
    let comps = connected_components(g);
    let data: Vec<ComponentRho> = comps.iter().map(|c| component_rho(g, c, k, opts)).collect::<Result<_, _>>()?;
    // knapsack over components: best[j] = best total using j atoms so far
    let none = usize::MAX;
    let mut lo = vec![none; k + 1];
    let mut hi = vec![none; k + 1];
    let mut exact = vec![true; k + 1];
    let mut lower_exact = vec![true; k + 1];
    lo[0] = 0;
    hi[0] = 0;
    for d in &data {
        let (mut nlo, mut nhi) = (vec![none; k + 1], vec![none; k + 1]);
        let mut nexact = vec![true; k + 1];
        let mut nlexact = vec![true; k + 1];
        for j in 0..=k {
            if lo[j] == none {
                continue;
            }
            for t in 0..=k - j {
                let (l, h) = (lo[j] + d.lower[t], hi[j] + d.upper[t]);
                let s = j + t;
                if nlo[s] == none || l > nlo[s] {
                    nlo[s] = l;
                }
                if nhi[s] == none || h > nhi[s] {
                    nhi[s] = h;
                }
                nexact[s] &= exact[j] && d.exact[t];
                nlexact[s] &= lower_exact[j] && d.lower_exact[t];
            }
        }
        lo = nlo;
        hi = nhi;
        exact = nexact;
        lower_exact = nlexact;
    }
    let (l, h) = (lo[k], hi[k]);
    Ok(if exact[k] {
        RhoK::Exact { value: l }
    } else {
        RhoK::Bounds { lower: l, upper: h, lower_is_exact: lower_exact[k] }
    })
}

fn component_rho(
    g: &Arc<Multigraph>,
    comp: &Subgraph,
    k: usize,
    opts: SearchOptions,
) -> Result<ComponentRho, FactorizationError> {
    let n = comp.order();
    let mut out = ComponentRho {
        lower: (0..=k).collect(),
        upper: (0..=k).collect(),
        exact: vec![true; k + 1],
        lower_exact: vec![true; k + 1],
    };
    if n == 1 {
        return Ok(out);
    }
    let h = g.extract(comp);
    let tau = tree_packing_number(&h)?;
    let monoid = component_monoid(g, comp);
    for j in 2..=k {
        if tau >= j {
            out.lower[j] = (j - 1) * n + 1;
            out.upper[j] = (j - 1) * n + 1;
            continue;
        }
        out.exact[j] = false;
        out.upper[j] = (j - 1) * n;
        let (found, exhaustive) = match &monoid {
            Some(m) => search_rho_j(m, j, opts.element_budget),
            None => (j, false),
        };
        out.lower[j] = found.max(j);
        out.lower_exact[j] = exhaustive;
    }
    Ok(out)
}

/// Largest factorization length among sums of exactly `j` atoms.
///
/// Returns the best length found and whether every `j`-multiset was tried.
pub fn search_rho_j(m: &AggMonoid<u64>, j: usize, budget: usize) -> (usize, bool) {
    let count = m.atom_count();
    let mut memo = ExtremesMemo::default();
    let mut best = j;
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut idx = vec![0usize; j];
    let mut examined = 0usize;
    loop {
        let x = engine::sum_atoms(m, &idx);
        if seen.insert(x.clone()) {
            examined += 1;
            if memo.len() > MEMO_LIMIT {
                memo.clear();
            }
            if let Some((_, hi)) = engine::extremes(m, &x, &mut memo) {
                best = best.max(hi);
            }
            if examined >= budget {
                return (best, false);
            }
        }
        // next nondecreasing tuple
        let mut p = j;
        while p > 0 && idx[p - 1] == count - 1 {
            p -= 1;
        }
        if p == 0 {
            return (best, true);
        }
        idx[p - 1] += 1;
        for q in p..j {
            idx[q] = idx[p - 1];
        }
    }
}
