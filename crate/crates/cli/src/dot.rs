//! Graphviz and JSON export of crystal graphs.

use std::fmt::Write as _;

use serde::Serialize;
use tabcrystal_core::CrystalGraph;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"").replace('\n', "\\n")
}

/// `digraph` with one node per element, labelled by `label`, and one edge
/// per lowering operator, labelled by its index.
pub fn to_dot<E: Ord>(graph: &CrystalGraph<E>, label: impl Fn(&E) -> String) -> String {
    let mut out = String::from("digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n");
    for (k, node) in graph.nodes.iter().enumerate() {
        writeln!(out, "  n{k} [label=\"{}\"];", escape(&label(&node.element))).unwrap();
    }
    for e in &graph.edges {
        writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.source, e.target, e.label).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize)]
pub struct GraphNode<P> {
    pub id: usize,
    pub depth: usize,
    pub weight: Vec<i64>,
    #[serde(flatten)]
    pub payload: P,
}

#[derive(Debug, Serialize)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    pub label: usize,
}

#[derive(Debug, Serialize)]
pub struct GraphDocument<P> {
    pub family: String,
    pub rank: usize,
    pub model: String,
    pub nodes: Vec<GraphNode<P>>,
    pub edges: Vec<GraphEdge>,
}

pub fn to_graph_document<E: Ord, P>(
    family: String,
    rank: usize,
    model: String,
    graph: &CrystalGraph<E>,
    payload: impl Fn(&E) -> P,
) -> GraphDocument<P> {
    GraphDocument {
        family,
        rank,
        model,
        nodes: graph
            .nodes
            .iter()
            .enumerate()
            .map(|(id, n)| GraphNode { id, depth: n.depth, weight: n.weight.as_slice().to_vec(), payload: payload(&n.element) })
            .collect(),
        edges: graph.edges.iter().map(|e| GraphEdge { source: e.source, target: e.target, label: e.label }).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tabcrystal_core::binfty::bfs_binfty;
    use tabcrystal_core::{Family, TypeSpec};

    #[test]
    fn small_graphs() {
        let b3 = TypeSpec::new(Family::B, 3).unwrap();
        let g = bfs_binfty(&b3, 0).unwrap();
        let dot = to_dot(&g, |t| t.to_string());
        assert_eq!(dot.matches(" -> ").count(), 0);
        assert!(dot.contains("n0 [label=\"[1 1 1]\\n[2 2]\\n[3]\"];"));
        let g = bfs_binfty(&b3, 1).unwrap();
        let dot = to_dot(&g, |t| t.to_string());
        assert_eq!(dot.matches(" -> ").count(), 3);
        assert_eq!(dot, to_dot(&g, |t| t.to_string()));
        let g2 = TypeSpec::new(Family::G, 2).unwrap();
        let g = bfs_binfty(&g2, 2).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (7, 6));
    }
}
