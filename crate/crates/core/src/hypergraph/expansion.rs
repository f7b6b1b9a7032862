use std::collections::{BTreeMap, BTreeSet};

use super::{Hypergraph, NodeId, NodeSet, Sign, SignedEdge, SignedHypergraph};

/// Multilinear expansion of a signed product:
/// `∏ σ_s(z_v) = constant + Σ_T coeff_T ∏_{v∈T} z_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTermExpansion {
    pub constant: i64,
    pub monomials: BTreeMap<NodeSet, i64>,
}

impl SignedTermExpansion {
    pub fn evaluate<F: Fn(&NodeId) -> bool>(&self, value: F) -> i64 {
        self.constant + self.monomials.iter().filter(|(t, _)| t.iter().all(&value)).map(|(_, c)| *c).sum::<i64>()
    }
}

/// Expands `s` as `Σ_{t ⊆ N(s)} (-1)^{|t|} ∏_{v ∈ p(s) ∪ t} z_v`, where `p(s)`
/// are the positive nodes and `N(s)` the negative ones.
pub fn expand_signed_term(edge: &SignedEdge) -> SignedTermExpansion {
    let positive: NodeSet = edge.entries().iter().filter(|(_, s)| *s == Sign::Pos).map(|(n, _)| n.clone()).collect();
    let negative: Vec<&NodeId> = edge.entries().iter().filter(|(_, s)| *s == Sign::Neg).map(|(n, _)| n).collect();
    let mut constant = 0;
    let mut monomials = BTreeMap::new();
    for mask in 0u64..(1u64 << negative.len()) {
        let mut support = positive.clone();
        for (bit, node) in negative.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                support.insert((*node).clone());
            }
        }
        let coeff = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        if support.is_empty() {
            constant += coeff;
        } else {
            *monomials.entry(support).or_insert(0) += coeff;
        }
    }
    SignedTermExpansion { constant, monomials }
}

/// `mh(H)`: every expansion support of cardinality ≥ 2.
pub fn multilinear_hypergraph(h: &SignedHypergraph) -> Hypergraph {
    let edges: BTreeSet<NodeSet> =
        h.edges().iter().flat_map(|s| expand_signed_term(s).monomials.into_keys()).filter(|t| t.len() >= 2).collect();
    Hypergraph::from_parts(h.nodes().clone(), edges)
}

/// A multilinear objective over `mh(H)` plus a constant offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearProblem {
    pub hypergraph: Hypergraph,
    pub node_costs: BTreeMap<NodeId, i64>,
    pub edge_costs: BTreeMap<NodeSet, i64>,
    pub constant: i64,
}

impl MultilinearProblem {
    /// Objective value (constant included) under a node assignment.
    pub fn evaluate<F: Fn(&NodeId) -> bool>(&self, value: F) -> i64 {
        let nodes: i64 = self.node_costs.iter().filter(|(v, _)| value(v)).map(|(_, c)| *c).sum();
        let edges: i64 = self.edge_costs.iter().filter(|(e, _)| e.iter().all(&value)).map(|(_, c)| *c).sum();
        self.constant + nodes + edges
    }

    /// Number of nonzero monomials of degree ≥ 1.
    pub fn monomial_count(&self) -> usize {
        self.node_costs.values().filter(|c| **c != 0).count() + self.edge_costs.values().filter(|c| **c != 0).count()
    }
}

/// Rewrites `Σ c_v z_v + Σ c_s ∏σ_s(z_v)` over `H` as a multilinear objective
/// over `mh(H)` plus a constant. Zero coefficients produced by cancellation
/// are dropped.
pub fn to_multilinear_problem(
    h: &SignedHypergraph,
    node_costs: &BTreeMap<NodeId, i64>,
    edge_costs: &BTreeMap<SignedEdge, i64>,
) -> MultilinearProblem {
    let mut nodes: BTreeMap<NodeId, i64> =
        node_costs.iter().filter(|(_, c)| **c != 0).map(|(v, c)| (v.clone(), *c)).collect();
    let mut edges: BTreeMap<NodeSet, i64> = BTreeMap::new();
    let mut constant = 0;
    for (s, &c) in edge_costs {
        if c == 0 {
            continue;
        }
        let exp = expand_signed_term(s);
        constant += c * exp.constant;
        for (t, coeff) in exp.monomials {
            if t.len() == 1 {
                *nodes.entry(t.into_iter().next().unwrap()).or_insert(0) += c * coeff;
            } else {
                *edges.entry(t).or_insert(0) += c * coeff;
            }
        }
    }
    nodes.retain(|_, c| *c != 0);
    edges.retain(|_, c| *c != 0);
    MultilinearProblem { hypergraph: multilinear_hypergraph(h), node_costs: nodes, edge_costs: edges, constant }
}
