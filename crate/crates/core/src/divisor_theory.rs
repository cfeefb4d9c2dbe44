//! The divisor theory `φ: A(G) → N_0^{E ∪ I ∪ ι}` and the class group rank.
//!
//! Coordinates are the edges, the incidences `(e, v)`, and one free
//! coordinate per isolated vertex. An agglomeration `a` maps to
//! `f(e) = a(e)`, `f(e, v) = a(v) − a(e)` and `f(v) = a(v)` for isolated `v`.

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::agglomeration::Agglomeration;
use crate::linalg::IntMatrix;
use crate::multigraph::Multigraph;
use crate::scalar::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("unknown coordinate {0:?}")]
    UnknownCoordinate(String),
    #[error("vector of length {got} does not match {expected} coordinates")]
    WrongLength { expected: usize, got: usize },
    #[error("vector violates the image equations at vertex {0:?}")]
    NotInImage(String),
}

/// A coordinate of the free monoid receiving `φ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coordinate {
    Edge(usize),
    /// Edge, then one of its ends.
    Incidence(usize, usize),
    Isolated(usize),
}

impl Coordinate {
    /// `e`, `e|v`, or the isolated vertex name.
    pub fn label(&self, g: &Multigraph) -> String {
        match *self {
            Coordinate::Edge(e) => g.edge_name(e).to_string(),
            Coordinate::Incidence(e, v) => format!("{}|{}", g.edge_name(e), g.vertex_name(v)),
            Coordinate::Isolated(v) => g.vertex_name(v).to_string(),
        }
    }
}

/// Coordinates in canonical order: edges, incidences by edge, isolated vertices.
pub fn coordinates(g: &Multigraph) -> Vec<Coordinate> {
    let mut out: Vec<Coordinate> = (0..g.size()).map(Coordinate::Edge).collect();
    for e in 0..g.size() {
        let (a, b) = g.ends(e);
        out.push(Coordinate::Incidence(e, a));
        out.push(Coordinate::Incidence(e, b));
    }
    out.extend(g.isolated_vertices().into_iter().map(Coordinate::Isolated));
    out
}

/// Parses a coordinate label produced by [`Coordinate::label`].
pub fn parse_coordinate(g: &Multigraph, label: &str) -> Result<Coordinate, DivisorError> {
    coordinates(g)
        .into_iter()
        .find(|c| c.label(g) == label)
        .ok_or_else(|| DivisorError::UnknownCoordinate(label.to_string()))
}

/// `φ(a)`, one value per coordinate of [`coordinates`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorImage<W: Weight = u64> {
    graph: Arc<Multigraph>,
    values: Vec<W>,
}

impl<W: Weight> DivisorImage<W> {
    pub fn values(&self) -> &[W] {
        &self.values
    }

    pub fn graph(&self) -> &Arc<Multigraph> {
        &self.graph
    }

    /// `(label, value)` pairs in coordinate order.
    pub fn labeled(&self) -> Vec<(String, W)> {
        coordinates(&self.graph).iter().map(|c| c.label(&self.graph)).zip(self.values.iter().cloned()).collect()
    }

    /// Checks `f(e, v) + f(e) = f(e', v) + f(e')` for all `e, e'` at each vertex.
    pub fn satisfies_image_equations(&self) -> bool {
        image_equations_hold(&self.graph, &self.values).is_ok()
    }
}

#[derive(Serialize)]
struct LabeledImage<'a, W: Serialize>(#[serde(with = "indexmap_like")] &'a [(String, W)]);

mod indexmap_like {
    use serde::ser::SerializeMap;
    use serde::{Serialize, Serializer};

    pub fn serialize<S: Serializer, W: Serialize>(pairs: &&[(String, W)], s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(pairs.len()))?;
        for (k, v) in pairs.iter() {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl<W: Weight + Serialize> Serialize for DivisorImage<W> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LabeledImage(&self.labeled()).serialize(s)
    }
}

fn incidence_slot(g: &Multigraph, e: usize, v: usize) -> usize {
    let (a, _) = g.ends(e);
    g.size() + 2 * e + usize::from(v != a)
}

fn image_equations_hold<W: Weight>(g: &Multigraph, f: &[W]) -> Result<(), DivisorError> {
    for v in 0..g.order() {
        let mut sums = g.incident_edges(v).map(|e| f[incidence_slot(g, e, v)].clone() + f[e].clone());
        if let Some(first) = sums.next() {
            if sums.any(|s| s != first) {
                return Err(DivisorError::NotInImage(g.vertex_name(v).to_string()));
            }
        }
    }
    Ok(())
}

/// `φ(a)`.
pub fn phi<W: Weight>(a: &Agglomeration<W>) -> DivisorImage<W> {
    let g = a.graph();
    let mut values = Vec::with_capacity(3 * g.size() + g.order());
    for e in 0..g.size() {
        values.push(a.edge_weight(e).clone());
    }
    for e in 0..g.size() {
        let (x, y) = g.ends(e);
        for v in [x, y] {
            values.push(a.vertex_weight(v).clone() - a.edge_weight(e).clone());
        }
    }
    for v in g.isolated_vertices() {
        values.push(a.vertex_weight(v).clone());
    }
    DivisorImage { graph: a.graph_arc().clone(), values }
}

/// Inverse of `φ` on its image: `a(e) = f(e)`, `a(v) = f(e, v) + f(e)`.
pub fn reconstruct<W: Weight>(graph: Arc<Multigraph>, f: &[W]) -> Result<Agglomeration<W>, DivisorError> {
    let g = &*graph;
    let expected = coordinates(g).len();
    if f.len() != expected {
        return Err(DivisorError::WrongLength { expected, got: f.len() });
    }
    image_equations_hold(g, f)?;
    let n = g.order();
    let mut w = vec![W::zero(); n + g.size()];
    w[n..].clone_from_slice(&f[..g.size()]);
    for v in 0..n {
        if let Some(e) = g.incident_edges(v).next() {
            w[v] = f[incidence_slot(g, e, v)].clone() + f[e].clone();
        }
    }
    for (k, v) in g.isolated_vertices().into_iter().enumerate() {
        w[v] = f[3 * g.size() + k].clone();
    }
    Ok(Agglomeration::new(graph, w).expect("image vectors reconstruct valid agglomerations"))
}

/// Pointwise minimum of two images.
pub fn pointwise_min<W: Weight>(x: &DivisorImage<W>, y: &DivisorImage<W>) -> Vec<W> {
    x.values.iter().zip(&y.values).map(|(a, b)| a.clone().min(b.clone())).collect()
}

/// Two agglomerations whose images have the unit vector at `coord` as pointwise minimum.
///
/// Edge `e`: `1_{(r(e), e)}` and the all-ones agglomeration. Incidence
/// `(e, v)`: `1_v` and the all-ones agglomeration with `e` set to zero.
/// Isolated `v`: `1_v` twice.
pub fn basis_witnesses<W: Weight>(
    graph: &Arc<Multigraph>,
    coord: Coordinate,
) -> Result<(Agglomeration<W>, Agglomeration<W>), DivisorError> {
    if !coordinates(graph).contains(&coord) {
        return Err(DivisorError::UnknownCoordinate(format!("{coord:?}")));
    }
    let n = graph.order();
    let unit = |slots: &[usize]| {
        let mut w = vec![W::zero(); n + graph.size()];
        for &s in slots {
            w[s] = W::one();
        }
        Agglomeration::new(graph.clone(), w).expect("witness is valid")
    };
    Ok(match coord {
        Coordinate::Edge(e) => {
            let (a, b) = graph.ends(e);
            (unit(&[a, b, n + e]), Agglomeration::all_ones(graph.clone()))
        }
        Coordinate::Incidence(e, v) => {
            let rest: Vec<usize> = (0..n + graph.size()).filter(|&s| s != n + e).collect();
            (unit(&[v]), unit(&rest))
        }
        Coordinate::Isolated(v) => (unit(&[v]), unit(&[v])),
    })
}

/// `2|E| − |V| + ι`.
pub fn class_group_rank(g: &Multigraph) -> usize {
    2 * g.size() + g.isolated_vertices().len() - g.order()
}

/// The relation matrix whose kernel is the quotient group of `im φ`.
///
/// For each vertex `v` with an edge, `e_v` is its smallest incident edge and
/// each other incident edge `e'` contributes the row
/// `f(e_v, v) + f(e_v) − f(e', v) − f(e')`. Columns follow [`coordinates`].
pub fn relation_matrix(g: &Multigraph) -> IntMatrix<i64> {
    let cols = coordinates(g).len();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for v in 0..g.order() {
        let mut inc = g.incident_edges(v);
        let Some(ev) = inc.next() else { continue };
        for e in inc {
            let mut row = vec![0i64; cols];
            row[incidence_slot(g, ev, v)] += 1;
            row[ev] += 1;
            row[incidence_slot(g, e, v)] -= 1;
            row[e] -= 1;
            rows.push(row);
            labels.push(format!("{}:{}~{}", g.vertex_name(v), g.edge_name(ev), g.edge_name(e)));
        }
    }
    let col_labels = coordinates(g).iter().map(|c| c.label(g)).collect();
    IntMatrix::from_rows(rows, Some(cols))
        .and_then(|m| m.with_row_labels(labels))
        .and_then(|m| m.with_col_labels(col_labels))
        .expect("well-formed relation matrix")
}

/// Class group rank read off the Smith normal form of [`relation_matrix`].
pub fn class_group_rank_smith(g: &Multigraph) -> usize {
    relation_matrix(g).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: Multigraph) -> Arc<Multigraph> {
        Arc::new(g)
    }

    #[test]
    fn phi_values() {
        let g = arc(Multigraph::path(2));
        assert!(phi(&Agglomeration::<u64>::zero(g.clone())).values().iter().all(|&x| x == 0));
        let a = Agglomeration::<u64>::new(g, vec![2, 1, 1]).unwrap();
        let f = phi(&a);
        assert_eq!(f.labeled(), vec![("e1".to_string(), 1), ("e1|v1".to_string(), 1), ("e1|v2".to_string(), 0)]);
        let c3 = arc(Multigraph::cycle(3));
        let f = phi(&Agglomeration::<u64>::all_ones(c3));
        assert_eq!(f.values(), &[1, 1, 1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn isolated_vertices_get_free_coordinates() {
        let g = arc(Multigraph::path(2).disjoint_union(&Multigraph::trivial().prefixed("x")).unwrap());
        assert_eq!(coordinates(&g).len(), 3 * g.size() + 1);
        let a = Agglomeration::<u64>::new(g.clone(), vec![1, 1, 3, 1]).unwrap();
        assert_eq!(phi(&a).values(), &[1, 0, 0, 3]);
        assert_eq!(reconstruct(g, phi(&a).values()).unwrap(), a);
    }

    #[test]
    fn reconstruction_checks_the_equations() {
        let g = arc(Multigraph::path(3));
        // e1 = v1v2, e2 = v2v3; at v2: f(e1,v2)+f(e1) must equal f(e2,v2)+f(e2)
        assert!(reconstruct::<u64>(g.clone(), &[1, 1, 0, 0, 0, 0]).is_ok());
        assert_eq!(reconstruct::<u64>(g, &[1, 0, 0, 0, 0, 0]), Err(DivisorError::NotInImage("v2".into())));
    }

    #[test]
    fn witnesses_give_unit_vectors() {
        for g in [Multigraph::path(2), Multigraph::cycle(3), Multigraph::banana(2), Multigraph::complete(4)] {
            let g = arc(g);
            let coords = coordinates(&g);
            for (k, &c) in coords.iter().enumerate() {
                let (a, b) = basis_witnesses::<u64>(&g, c).unwrap();
                let min = pointwise_min(&phi(&a), &phi(&b));
                let unit: Vec<u64> = (0..coords.len()).map(|i| u64::from(i == k)).collect();
                assert_eq!(min, unit, "{}", c.label(&g));
            }
        }
        let g = arc(Multigraph::trivial());
        let (a, b) = basis_witnesses::<u64>(&g, Coordinate::Isolated(0)).unwrap();
        assert_eq!((a.weights(), b.weights()), (&[1u64][..], &[1u64][..]));
        assert!(basis_witnesses::<u64>(&g, Coordinate::Edge(0)).is_err());
    }

    #[test]
    fn class_group_ranks() {
        assert_eq!(class_group_rank(&Multigraph::cycle(3)), 3);
        assert_eq!(class_group_rank(&Multigraph::path(2)), 0);
        assert_eq!(class_group_rank(&Multigraph::banana(2)), 2);
        for g in [Multigraph::cycle(3), Multigraph::path(2), Multigraph::banana(2), Multigraph::complete(5)] {
            assert_eq!(class_group_rank_smith(&g), class_group_rank(&g));
        }
    }

    #[test]
    fn coordinate_labels_round_trip() {
        let g = Multigraph::cycle(3);
        for c in coordinates(&g) {
            assert_eq!(parse_coordinate(&g, &c.label(&g)).unwrap(), c);
        }
    }
}
