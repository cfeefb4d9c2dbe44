//! Graph generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use agglom_core::{Agg, Multigraph, Subgraph};
use proptest::collection::vec;
use proptest::prelude::*;
use rand::Rng;

/// Vertex pairs `(i, j)` with `i < j < n`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(n: usize, edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (p[a], p[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
        .into_iter()
        .chain(std::iter::once((n, n)))
        .collect()
}

/// One representative per isomorphism class of multigraphs with at most
/// `max_v` vertices and `max_e` edges; `simple` forbids parallel edges.
pub fn graphs_up_to_iso(max_v: usize, max_e: usize, simple: bool) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for n in 0..=max_v {
        let ps = pairs(n);
        let perms = permutations(n);
        let mut seen = HashSet::new();
        let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(0, vec![])];
        while let Some((from, edges)) = stack.pop() {
            if seen.insert(canonical(n, &edges, &perms)) {
                out.push(Multigraph::from_pairs(n, &edges));
            }
            if edges.len() == max_e {
                continue;
            }
            for (k, &p) in ps.iter().enumerate().skip(from) {
                if simple && edges.contains(&p) {
                    continue;
                }
                let mut e = edges.clone();
                e.push(p);
                stack.push((if simple { k + 1 } else { k }, e));
            }
        }
    }
    out
}

/// Connected multigraph with `1..=max_v` vertices and at most `max_e` edges.
pub fn random_connected(rng: &mut impl Rng, max_v: usize, max_e: usize) -> Multigraph {
    let n = rng.gen_range(1..=max_v);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let total = rng.gen_range(edges.len()..=max_e.max(edges.len()));
    while n >= 2 && edges.len() < total {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push((a.min(b), a.max(b)));
        }
    }
    Multigraph::from_pairs(n, &edges)
}

/// Multigraph with `0..=max_v` vertices and at most `max_e` edges.
pub fn random_multigraph(rng: &mut impl Rng, max_v: usize, max_e: usize) -> Multigraph {
    let n = rng.gen_range(0..=max_v);
    let m = if n < 2 { 0 } else { rng.gen_range(0..=max_e) };
    let mut edges = Vec::new();
    while edges.len() < m {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push((a, b));
        }
    }
    Multigraph::from_pairs(n, &edges)
}

fn reaches_all(g: &Multigraph, vs: &[usize], es: &[usize]) -> bool {
    let Some(&first) = vs.first() else { return false };
    let mut seen = vec![first];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for &e in es {
            let (a, b) = g.ends(e);
            for (p, q) in [(a, b), (b, a)] {
                if p == x && !seen.contains(&q) {
                    seen.push(q);
                }
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

/// Every non-null connected subgraph, by scanning all vertex and edge subsets.
pub fn brute_connected_subgraphs(g: &Multigraph) -> Vec<Subgraph> {
    let (n, m) = (g.order(), g.size());
    let mut out = Vec::new();
    for vm in 1u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| vm >> v & 1 == 1).collect();
        for em in 0u32..(1 << m) {
            let es: Vec<usize> = (0..m).filter(|&e| em >> e & 1 == 1).collect();
            let closed = es.iter().all(|&e| {
                let (a, b) = g.ends(e);
                vm >> a & 1 == 1 && vm >> b & 1 == 1
            });
            if closed && reaches_all(g, &vs, &es) {
                out.push(Subgraph::new(vs.clone(), es));
            }
        }
    }
    out.sort();
    out
}

/// Spanning trees as edge subsets of size `|V| − 1` that connect every vertex.
pub fn brute_spanning_trees(g: &Multigraph) -> Vec<Subgraph> {
    let (n, m) = (g.order(), g.size());
    let vs: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for em in 0u32..(1 << m) {
        if em.count_ones() as usize + 1 != n {
            continue;
        }
        let es: Vec<usize> = (0..m).filter(|&e| em >> e & 1 == 1).collect();
        if reaches_all(g, &vs, &es) {
            out.push(Subgraph::new(vs.clone(), es));
        }
    }
    out.sort();
    out
}

/// `ℓ` computed from its definition on an indicator.
pub fn brute_sequence_length(g: &Multigraph, s: &Subgraph) -> i64 {
    let deg: i64 = s.vertices.iter().map(|&v| g.incident_edges(v).count() as i64).sum();
    deg - s.edges.len() as i64
}

/// Multigraphs with `1..=max_v` vertices and at most `max_e` edges.
pub fn arb_graph(max_v: usize, max_e: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_v).prop_flat_map(move |n| {
        let m = if n < 2 { 0 } else { max_e };
        vec((0..n, 0..n), 0..=m).prop_map(move |es| {
            let edges: Vec<(usize, usize)> = es.into_iter().filter(|(a, b)| a != b).collect();
            Multigraph::from_pairs(n, &edges)
        })
    })
}

/// Connected multigraphs: a random spanning tree plus extra edges.
pub fn arb_connected(max_v: usize, max_e: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_v).prop_flat_map(move |n| {
        let parents: Vec<std::ops::Range<usize>> = (1..n).map(|v| 0..v).collect();
        let extra = if n < 2 { 0 } else { max_e.saturating_sub(n - 1) };
        (parents, vec((0..n, 0..n), 0..=extra)).prop_map(move |(ps, es)| {
            let mut edges: Vec<(usize, usize)> = ps.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
            edges.extend(es.into_iter().filter(|(a, b)| a != b));
            Multigraph::from_pairs(n, &edges)
        })
    })
}

/// Valid weight vectors of `g` with every weight at most `bound`.
pub fn arb_weights(g: &Multigraph, bound: u64) -> impl Strategy<Value = Vec<u64>> {
    let n = g.order();
    let ends: Vec<(usize, usize)> = (0..g.size()).map(|e| g.ends(e)).collect();
    (vec(0..=bound, n), vec(0..=bound, ends.len())).prop_map(move |(mut w, raw)| {
        for (&(a, b), r) in ends.iter().zip(raw) {
            let cap = w[a].min(w[b]);
            w.push(r.min(cap));
        }
        w
    })
}

/// A graph together with `count` agglomerations of weight at most `bound`.
pub fn with_elements(
    graphs: impl Strategy<Value = Multigraph>,
    bound: u64,
    count: usize,
) -> impl Strategy<Value = (Arc<Multigraph>, Vec<Agg>)> {
    graphs
        .prop_flat_map(move |g| {
            let ws = vec(arb_weights(&g, bound), count);
            (Just(Arc::new(g)), ws)
        })
        .prop_map(|(g, ws)| {
            let els = ws.into_iter().map(|w| Agg::new(g.clone(), w).expect("valid weights")).collect();
            (g, els)
        })
}

/// Agglomerations with weights at most `bound`, as raw weight vectors.
pub fn bounded_box(g: &Multigraph, bound: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    agglom_core::factorization::for_each_bounded::<u64>(g, bound, |x| out.push(x.to_vec()));
    out
}

/// `b − a` when it is a valid agglomeration.
pub fn difference(g: &Multigraph, b: &[u64], a: &[u64]) -> Option<Vec<u64>> {
    let d: Vec<u64> = b.iter().zip(a).map(|(x, y)| x.checked_sub(*y)).collect::<Option<_>>()?;
    valid(g, &d).then_some(d)
}

/// Edge weights never exceed the weights of their ends.
pub fn valid(g: &Multigraph, w: &[u64]) -> bool {
    let n = g.order();
    (0..g.size()).all(|e| {
        let (a, b) = g.ends(e);
        w[n + e] <= w[a].min(w[b])
    })
}
