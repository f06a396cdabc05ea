//! Crystal graphs and their breadth-first generation.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::lie::{Direction, Weight};
use crate::Result;

/// A crystal model: elements with Kashiwara operators and a weight.
pub trait Crystal {
    type Element: Clone + Ord;

    /// Size of the index set; operators are indexed `1..=rank`.
    fn rank(&self) -> usize;

    /// `f̃_i` or `ẽ_i`; `None` is the crystal zero.
    fn apply(&self, i: usize, x: &Self::Element, dir: Direction) -> Result<Option<Self::Element>>;

    fn weight(&self, x: &Self::Element) -> Result<Weight>;

    /// Starting points of the breadth-first generation.
    fn highest(&self) -> Result<Self::Element>;

    fn lower(&self, i: usize, x: &Self::Element) -> Result<Option<Self::Element>> {
        self.apply(i, x, Direction::Lower)
    }

    fn raise(&self, i: usize, x: &Self::Element) -> Result<Option<Self::Element>> {
        self.apply(i, x, Direction::Raise)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node<E> {
    pub element: E,
    pub weight: Weight,
    /// Number of lowering steps from the highest element.
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub label: usize,
    pub target: usize,
}

/// Nodes sorted by `(depth, element)` and `i`-labelled lowering edges
/// between node indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph<E> {
    pub nodes: Vec<Node<E>>,
    pub edges: Vec<Edge>,
}

impl<E: Ord> CrystalGraph<E> {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn layer(&self, depth: usize) -> impl Iterator<Item = &Node<E>> {
        self.nodes.iter().filter(move |n| n.depth == depth)
    }

    pub fn max_depth(&self) -> usize {
        self.nodes.last().map_or(0, |n| n.depth)
    }

    pub fn index_of(&self, element: &E) -> Option<usize> {
        self.nodes.iter().position(|n| &n.element == element)
    }

    /// Number of nodes of each weight.
    pub fn weight_multiplicities(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for node in &self.nodes {
            *out.entry(node.weight.clone()).or_insert(0) += 1;
        }
        out
    }
}

/// Breadth-first closure of the highest element under all lowering
/// operators, stopping after `max_depth` steps (`None` runs to exhaustion).
///
/// Each lowering step lowers the weight by a simple root, so layers are
/// disjoint and every edge joins consecutive layers.
pub fn bfs<C: Crystal>(crystal: &C, max_depth: Option<usize>) -> Result<CrystalGraph<C::Element>> {
    let start = crystal.highest()?;
    let weight = crystal.weight(&start)?;
    let mut nodes = alloc::vec![Node { element: start, weight, depth: 0 }];
    let mut edges = Vec::new();
    let mut layer_start = 0;
    let mut depth = 0;
    while max_depth.is_none_or(|d| depth < d) && layer_start < nodes.len() {
        let mut next: BTreeSet<C::Element> = BTreeSet::new();
        let mut pending = Vec::new();
        for (source, node) in nodes.iter().enumerate().skip(layer_start) {
            for i in 1..=crystal.rank() {
                if let Some(child) = crystal.lower(i, &node.element)? {
                    next.insert(child.clone());
                    pending.push((source, i, child));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        let base = nodes.len();
        let mut index = BTreeMap::new();
        for (k, element) in next.into_iter().enumerate() {
            let weight = crystal.weight(&element)?;
            index.insert(element.clone(), base + k);
            nodes.push(Node { element, weight, depth: depth + 1 });
        }
        for (source, label, child) in pending {
            edges.push(Edge { source, label, target: index[&child] });
        }
        layer_start = base;
        depth += 1;
    }
    Ok(CrystalGraph { nodes, edges })
}
