use super::builder::Builder;
use super::{BuildError, Relation, Step, VarId};
use crate::acyclicity::is_beta_leaf;
use crate::hypergraph::{fmt_set, NodeId, NodeSet, Signed, SignedEdge, SignedHypergraph};

/// Result of replacing `edge` by its sign extensions to `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inflation {
    pub hypergraph: SignedHypergraph,
    pub edge: SignedEdge,
    pub target: NodeSet,
    pub members: Vec<SignedEdge>,
}

impl Inflation {
    /// `z_s - Σ z_{s'} = 0` as edge terms.
    pub fn link_terms(&self) -> Vec<(SignedEdge, i64)> {
        std::iter::once((self.edge.clone(), 1)).chain(self.members.iter().map(|m| (m.clone(), -1))).collect()
    }
}

/// `I(s, e)`: the `2^{|e|-|s|}` signed edges on `e` agreeing with `s`.
pub fn inflation_members(s: &SignedEdge, target: &NodeSet) -> Result<Vec<SignedEdge>, BuildError> {
    if !s.is_subset_of_set(target) {
        return Err(BuildError::BadInflation(format!("{} does not contain {s}", fmt_set(target))));
    }
    if s.len() == target.len() {
        return Err(BuildError::BadInflation(format!("{s} already spans {}", fmt_set(target))));
    }
    Ok(s.sign_extensions(target))
}

pub fn inflate(h: &SignedHypergraph, s: &SignedEdge, target: &NodeSet) -> Result<Inflation, BuildError> {
    if !h.contains_edge(s) {
        return Err(BuildError::BadInflation(format!("{s} is not an edge")));
    }
    if let Some(n) = target.iter().find(|n| !h.nodes().contains(*n)) {
        return Err(BuildError::BadInflation(format!("target node {n} not in the hypergraph")));
    }
    let members = inflation_members(s, target)?;
    let mut out = h.clone();
    out.remove_edge(s);
    for m in &members {
        out.insert_edge(m.clone())?;
    }
    Ok(Inflation { hypergraph: out, edge: s.clone(), target: target.clone(), members })
}

/// Adds `s - v` for every `s ∋ v` with `|s| ≥ 3`.
pub fn augment_with_projections(h: &SignedHypergraph, v: &NodeId) -> Result<SignedHypergraph, BuildError> {
    if !h.nodes().contains(v) || !is_beta_leaf(&h.underlying_hypergraph(), v) {
        return Err(BuildError::NotBetaLeaf { node: v.clone() });
    }
    let mut out = h.clone();
    for p in projections(h, v) {
        out.insert_edge(p)?;
    }
    Ok(out)
}

pub(crate) fn projections(h: &SignedHypergraph, v: &NodeId) -> Vec<SignedEdge> {
    h.edges_containing(v)
        .filter_map(|s| match s.minus(v) {
            Some(Signed::Edge(p)) => Some(p),
            _ => None,
        })
        .collect()
}

/// Inflates inside a build: records the step and the link row.
pub(crate) fn inflate_in(
    b: &mut Builder,
    h: &SignedHypergraph,
    s: &SignedEdge,
    target: &NodeSet,
) -> Result<SignedHypergraph, BuildError> {
    let inf = inflate(h, s, target)?;
    let coeffs: Vec<(VarId, i64)> = inf.link_terms().iter().map(|(e, a)| (b.edge(e), *a)).collect();
    b.push(&coeffs, Relation::Eq, 0)?;
    b.steps.push(Step::Inflate { edge: s.clone(), target: target.clone(), members: inf.members.len() });
    Ok(inf.hypergraph)
}
