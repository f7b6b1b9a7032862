use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Hypergraph, HypergraphError, NodeId, NodeSet, Signed, SignedEdge};

/// `H = (V, S)`: a node set plus a set of signed edges. Parallel edges are
/// allowed, identical ones are not (set semantics on canonical forms).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedHypergraph {
    nodes: NodeSet,
    edges: BTreeSet<SignedEdge>,
}

impl SignedHypergraph {
    /// Builds a hypergraph, rejecting identical edges and edges that
    /// reference nodes outside `nodes`.
    pub fn new<I, N>(nodes: I, edges: Vec<SignedEdge>) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = N>,
        N: Into<NodeId>,
    {
        let nodes: NodeSet = nodes.into_iter().map(Into::into).collect();
        let mut set = BTreeSet::new();
        for edge in edges {
            if let Some(n) = edge.nodes().find(|n| !nodes.contains(*n)) {
                return Err(HypergraphError::UnknownNode(n.clone()));
            }
            if set.contains(&edge) {
                return Err(HypergraphError::DuplicateEdge(edge));
            }
            set.insert(edge);
        }
        Ok(SignedHypergraph { nodes, edges: set })
    }

    /// Node set is the union of the edges.
    pub fn from_edges(edges: Vec<SignedEdge>) -> Result<Self, HypergraphError> {
        let nodes: NodeSet = edges.iter().flat_map(|e| e.nodes().cloned()).collect();
        SignedHypergraph::new(nodes, edges)
    }

    /// Parses edges in compact notation, e.g. `["a+ b-", "b+ c+"]`.
    pub fn parse_edges(literals: &[&str]) -> Result<Self, HypergraphError> {
        let edges = literals.iter().map(|l| SignedEdge::parse(l)).collect::<Result<Vec<_>, _>>()?;
        SignedHypergraph::from_edges(edges)
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<SignedEdge> {
        &self.edges
    }

    pub fn contains_edge(&self, edge: &SignedEdge) -> bool {
        self.edges.contains(edge)
    }

    pub fn edges_containing<'a>(&'a self, node: &'a NodeId) -> impl Iterator<Item = &'a SignedEdge> + 'a {
        self.edges.iter().filter(move |e| e.contains(node))
    }

    /// Maximum edge cardinality, 0 without edges.
    pub fn rank(&self) -> usize {
        self.edges.iter().map(SignedEdge::len).max().unwrap_or(0)
    }

    /// `H - v`. Edges that shrink to one node are dropped from the edge set
    /// and identical results merge.
    pub fn remove_node(&self, node: &NodeId) -> Result<SignedHypergraph, HypergraphError> {
        if !self.nodes.contains(node) {
            return Err(HypergraphError::UnknownNode(node.clone()));
        }
        let mut nodes = self.nodes.clone();
        nodes.remove(node);
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match e.minus(node) {
                None => Some(e.clone()),
                Some(Signed::Edge(rest)) => Some(rest),
                Some(Signed::Loop(..)) => None,
            })
            .collect();
        Ok(SignedHypergraph { nodes, edges })
    }

    /// Ignores signs and collapses parallel edges.
    pub fn underlying_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_parts(self.nodes.clone(), self.edges.iter().map(SignedEdge::underlying).collect())
    }

    /// Inserts an edge (no-op if an identical edge is present). Returns
    /// whether the edge was new.
    pub fn insert_edge(&mut self, edge: SignedEdge) -> Result<bool, HypergraphError> {
        if let Some(n) = edge.nodes().find(|n| !self.nodes.contains(*n)) {
            return Err(HypergraphError::UnknownNode(n.clone()));
        }
        Ok(self.edges.insert(edge))
    }

    pub fn remove_edge(&mut self, edge: &SignedEdge) -> bool {
        self.edges.remove(edge)
    }

    /// Restriction to a node subset: keeps the edges fully inside it.
    pub fn induced(&self, nodes: &NodeSet) -> SignedHypergraph {
        SignedHypergraph {
            nodes: nodes.intersection(&self.nodes).cloned().collect(),
            edges: self.edges.iter().filter(|e| e.is_subset_of_set(nodes)).cloned().collect(),
        }
    }
}

impl fmt::Display for SignedHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<&str> = self.nodes.iter().map(NodeId::as_str).collect();
        write!(f, "V={{{}}} S=[", nodes.join(","))?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}
