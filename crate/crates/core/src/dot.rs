//! Graphviz export with agglomeration weights as labels.

use crate::agglomeration::Agglomeration;
use crate::multigraph::Multigraph;
use crate::scalar::Weight;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `graph G { ... }` with vertex and edge names as labels.
pub fn graph_to_dot(g: &Multigraph) -> String {
    render(g, |_| None, |_| None)
}

/// Same layout as [`graph_to_dot`]; labels carry the weights, zero-weight
/// elements are drawn dashed.
pub fn agglomeration_to_dot<W: Weight>(a: &Agglomeration<W>) -> String {
    render(a.graph(), |v| Some(a.vertex_weight(v).to_string()), |e| Some(a.edge_weight(e).to_string()))
}

fn render(g: &Multigraph, vw: impl Fn(usize) -> Option<String>, ew: impl Fn(usize) -> Option<String>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let name = g.vertex_name(v);
        let attrs = match vw(v) {
            Some(w) if w == "0" => format!("label={}, style=dashed", quote(&format!("{name}: 0"))),
            Some(w) => format!("label={}", quote(&format!("{name}: {w}"))),
            None => format!("label={}", quote(name)),
        };
        out.push_str(&format!("  {} [{attrs}];\n", quote(name)));
    }
    for e in 0..g.size() {
        let (a, b) = g.ends(e);
        let name = g.edge_name(e);
        let attrs = match ew(e) {
            Some(w) if w == "0" => format!("label={}, style=dashed", quote("0")),
            Some(w) => format!("label={}", quote(&w)),
            None => format!("label={}", quote(name)),
        };
        out.push_str(&format!(
            "  {} -- {} [{attrs}, id={}];\n",
            quote(g.vertex_name(a)),
            quote(g.vertex_name(b)),
            quote(name)
        ));
    }
    out.push_str("}\n");
    out
}
