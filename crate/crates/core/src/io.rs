//! JSON documents for graphs, agglomerations, matrices, and ring specs.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::agglomeration::{Agglomeration, AgglomerationError};
use crate::bassring::BassRingSpec;
use crate::linalg::{IntMatrix, MatrixError};
use crate::multigraph::{Element, GraphError, Multigraph};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Agglomeration(#[from] AgglomerationError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("unknown identifier {0:?}")]
    UnknownId(String),
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    id: String,
    ends: [String; 2],
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<EdgeDoc>,
}

/// Parses `{"vertices": [...], "edges": [{"id": .., "ends": [.., ..]}, ...]}`.
pub fn graph_from_json(text: &str) -> Result<Multigraph, GraphError> {
    let doc: GraphDoc = serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    graph_from_doc(doc)
}

fn graph_from_doc(doc: GraphDoc) -> Result<Multigraph, GraphError> {
    Multigraph::new(
        doc.vertices,
        doc.edges.into_iter().map(|e| {
            let [a, b] = e.ends;
            (e.id, a, b)
        }),
    )
}

fn graph_doc(g: &Multigraph) -> GraphDoc {
    GraphDoc {
        vertices: g.vertex_names().to_vec(),
        edges: (0..g.size())
            .map(|e| {
                let (a, b) = g.ends(e);
                EdgeDoc { id: g.edge_name(e).to_string(), ends: [g.vertex_name(a).into(), g.vertex_name(b).into()] }
            })
            .collect(),
    }
}

pub fn graph_to_json(g: &Multigraph) -> Value {
    serde_json::to_value(graph_doc(g)).expect("graph documents serialize")
}

/// The line-oriented text format.
pub fn graph_to_text(g: &Multigraph) -> String {
    let mut out = String::new();
    for v in g.vertex_names() {
        out.push_str(&format!("v {v}\n"));
    }
    for e in 0..g.size() {
        let (a, b) = g.ends(e);
        out.push_str(&format!("e {} {} {}\n", g.edge_name(e), g.vertex_name(a), g.vertex_name(b)));
    }
    out
}

impl Serialize for Multigraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        graph_doc(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        graph_from_doc(GraphDoc::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Reads a flat `{id: weight}` map; omitted identifiers weigh 0.
pub fn agglomeration_from_json(graph: Arc<Multigraph>, text: &str) -> Result<Agglomeration<u64>, IoError> {
    let map: BTreeMap<String, u64> = serde_json::from_str(text)?;
    agglomeration_from_map(graph, &map)
}

pub fn agglomeration_from_map(
    graph: Arc<Multigraph>,
    map: &BTreeMap<String, u64>,
) -> Result<Agglomeration<u64>, IoError> {
    let n = graph.order();
    let mut w = vec![0u64; n + graph.size()];
    for (id, &x) in map {
        match graph.lookup(id) {
            Some(Element::Vertex(v)) => w[v] = x,
            Some(Element::Edge(e)) => w[n + e] = x,
            None => return Err(IoError::UnknownId(id.clone())),
        }
    }
    Ok(Agglomeration::new(graph, w)?)
}

/// Flat map in document order, zero weights included.
pub fn agglomeration_to_json(a: &Agglomeration<u64>) -> Value {
    let mut m = Map::new();
    for (id, w) in a.named_weights() {
        m.insert(id.to_string(), json!(w));
    }
    Value::Object(m)
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cols: Option<usize>,
    #[serde(default)]
    row_labels: Option<Vec<String>>,
    #[serde(default)]
    col_labels: Option<Vec<String>>,
}

/// Parses `{"rows": [[...]], "row_labels": [...], "col_labels": [...]}`.
///
/// A matrix without rows takes its width from `cols` or `col_labels`.
pub fn matrix_from_json(text: &str) -> Result<IntMatrix<i64>, IoError> {
    let doc: MatrixDoc = serde_json::from_str(text)?;
    let width = doc.cols.or_else(|| doc.col_labels.as_ref().map(Vec::len));
    let mut m = IntMatrix::from_rows(doc.rows, width)?;
    if let Some(l) = doc.row_labels {
        m = m.with_row_labels(l)?;
    }
    if let Some(l) = doc.col_labels {
        m = m.with_col_labels(l)?;
    }
    Ok(m)
}

pub fn matrix_to_json(m: &IntMatrix<i64>) -> Value {
    let doc = MatrixDoc {
        rows: m.rows(),
        cols: (m.nrows() == 0).then_some(m.ncols()),
        row_labels: m.row_labels().map(<[String]>::to_vec),
        col_labels: m.col_labels().map(<[String]>::to_vec),
    };
    serde_json::to_value(doc).expect("matrix documents serialize")
}

pub fn spec_from_json(text: &str) -> Result<BassRingSpec, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn spec_to_json(spec: &BassRingSpec) -> Value {
    serde_json::to_value(spec).expect("ring specs serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = Multigraph::banana(3);
        let text = graph_to_json(&g).to_string();
        assert_eq!(graph_from_json(&text).unwrap(), g);
        assert_eq!(crate::multigraph::parse_graph_text(&graph_to_text(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        let bad = r#"{"vertices":["a"],"edges":[{"id":"e","ends":["a","b"]}]}"#;
        assert!(matches!(graph_from_json(bad), Err(GraphError::UnknownEndpoint { .. })));
        assert!(matches!(graph_from_json("{"), Err(GraphError::Parse(_))));
    }

    #[test]
    fn agglomeration_round_trip() {
        let g = Arc::new(Multigraph::path(2));
        let a = agglomeration_from_json(g.clone(), r#"{"v1":2,"v2":1,"e1":1}"#).unwrap();
        assert_eq!(a.weights(), &[2, 1, 1]);
        assert_eq!(agglomeration_from_json(g.clone(), &agglomeration_to_json(&a).to_string()).unwrap(), a);
        assert_eq!(agglomeration_from_json(g.clone(), r#"{"v1":1}"#).unwrap().weights(), &[1, 0, 0]);
        assert!(matches!(agglomeration_from_json(g.clone(), r#"{"x":1}"#), Err(IoError::UnknownId(_))));
        assert!(matches!(agglomeration_from_json(g, r#"{"e1":1}"#), Err(IoError::Agglomeration(_))));
    }

    #[test]
    fn matrix_round_trip() {
        let m = matrix_from_json(r#"{"rows":[[1,1,-1]],"col_labels":["a","b","c"]}"#).unwrap();
        assert_eq!(matrix_from_json(&matrix_to_json(&m).to_string()).unwrap(), m);
        let empty = IntMatrix::<i64>::from_rows(vec![], Some(2)).unwrap();
        assert_eq!(matrix_from_json(&matrix_to_json(&empty).to_string()).unwrap(), empty);
    }
}
