use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{fmt_set, HypergraphError, NodeId, NodeSet};

/// `G = (V, E)` with edges of cardinality at least two.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypergraph {
    nodes: NodeSet,
    edges: BTreeSet<NodeSet>,
}

impl Hypergraph {
    pub fn new<I, N>(nodes: I, edges: Vec<NodeSet>) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = N>,
        N: Into<NodeId>,
    {
        let nodes: NodeSet = nodes.into_iter().map(Into::into).collect();
        let mut set = BTreeSet::new();
        for e in edges {
            if e.len() < 2 {
                return Err(HypergraphError::EdgeTooSmall(e.len()));
            }
            if let Some(n) = e.iter().find(|n| !nodes.contains(*n)) {
                return Err(HypergraphError::UnknownNode(n.clone()));
            }
            if !set.insert(e.clone()) {
                return Err(HypergraphError::Input(format!("duplicate edge {}", fmt_set(&e))));
            }
        }
        Ok(Hypergraph { nodes, edges: set })
    }

    /// Convenience constructor from name lists; node set is the union.
    pub fn from_lists(edges: &[&[&str]]) -> Result<Self, HypergraphError> {
        let edges: Vec<NodeSet> = edges.iter().map(|e| e.iter().map(NodeId::new).collect()).collect();
        let nodes: NodeSet = edges.iter().flatten().cloned().collect();
        Hypergraph::new(nodes, edges)
    }

    pub(crate) fn from_parts(nodes: NodeSet, edges: BTreeSet<NodeSet>) -> Self {
        Hypergraph { nodes, edges }
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<NodeSet> {
        &self.edges
    }

    pub fn rank(&self) -> usize {
        self.edges.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn edges_containing<'a>(&'a self, node: &'a NodeId) -> impl Iterator<Item = &'a NodeSet> + 'a {
        self.edges.iter().filter(move |e| e.contains(node))
    }

    /// `G - v`; edges shrinking below two nodes are dropped.
    pub fn remove_node(&self, node: &NodeId) -> Hypergraph {
        let mut nodes = self.nodes.clone();
        nodes.remove(node);
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut e = e.clone();
                e.remove(node);
                e
            })
            .filter(|e| e.len() >= 2)
            .collect();
        Hypergraph { nodes, edges }
    }

    /// Partial hypergraph on the given edges; nodes are their union.
    pub fn spanned_by(edges: BTreeSet<NodeSet>) -> Hypergraph {
        let nodes = edges.iter().flatten().cloned().collect();
        Hypergraph { nodes, edges }
    }

    /// Connected components over the nodes covered by at least one edge,
    /// each as `(nodes, edges)`, ordered by smallest node.
    pub fn connected_components(&self) -> Vec<(NodeSet, BTreeSet<NodeSet>)> {
        let mut remaining: Vec<&NodeSet> = self.edges.iter().collect();
        let mut out = Vec::new();
        while let Some(seed) = remaining.pop() {
            let mut nodes: NodeSet = seed.clone();
            let mut edges: BTreeSet<NodeSet> = BTreeSet::from([seed.clone()]);
            loop {
                let (touching, rest): (Vec<&NodeSet>, Vec<&NodeSet>) =
                    remaining.iter().partition(|e| e.iter().any(|n| nodes.contains(n)));
                if touching.is_empty() {
                    break;
                }
                for e in touching {
                    nodes.extend(e.iter().cloned());
                    edges.insert(e.clone());
                }
                remaining = rest;
            }
            out.push((nodes, edges));
        }
        out.sort_by(|a, b| a.0.iter().next().cmp(&b.0.iter().next()));
        out
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={} E=[", fmt_set(&self.nodes))?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&fmt_set(e))?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_split_disjoint_parts() {
        let g = Hypergraph::from_lists(&[&["a", "b"], &["b", "c"], &["x", "y"]]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].0.len(), 3);
        assert_eq!(comps[1].1.len(), 1);
    }

    #[test]
    fn remove_node_drops_small_edges() {
        let g = Hypergraph::from_lists(&[&["a", "b"], &["a", "b", "c"]]).unwrap();
        let r = g.remove_node(&"a".into());
        assert_eq!(r.edges().len(), 1);
        assert_eq!(r.rank(), 2);
    }
}
