//! Structural summary of a signed hypergraph: acyclicity verdicts, cycle
//! counts and the gaps that decide which inflation strategy applies.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::acyclicity::{
    alpha_elimination_order, beta_cycle_support_components, beta_elimination_order, enumerate_beta_cycles, gap,
    is_beta_acyclic, AcyclicityError, EliminationOrder,
};
use crate::hypergraph::{multilinear_hypergraph, NodeSet, SignedHypergraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCount {
    pub count: usize,
    /// True when enumeration stopped at the cap; `count` is then the cap.
    pub capped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSummary {
    pub nodes: NodeSet,
    pub edges: usize,
    pub cycles: usize,
    pub gap: usize,
    pub all_cycles_equivalent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalGap {
    pub edge: NodeSet,
    pub maximal: NodeSet,
    pub gap: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub nodes: usize,
    pub edges: usize,
    pub underlying_edges: usize,
    pub rank: usize,
    pub beta_acyclic: bool,
    pub alpha_acyclic: bool,
    pub beta_order: EliminationOrder,
    pub alpha_order: EliminationOrder,
    pub beta_cycles: CycleCount,
    /// `None` when the cycle cap was hit.
    pub cycle_components: Option<Vec<ComponentSummary>>,
    /// Gap from each non-maximal edge to its smallest maximal superset.
    pub maximal_gaps: Vec<MaximalGap>,
    pub multilinear_edges: usize,
    pub multilinear_beta_acyclic: bool,
}

pub fn analyze(h: &SignedHypergraph, cycle_cap: usize) -> Result<Analysis, AcyclicityError> {
    let g = h.underlying_hypergraph();
    let beta_order = beta_elimination_order(&g);
    let alpha_order = alpha_elimination_order(&g);
    let beta_cycles = match enumerate_beta_cycles(&g, cycle_cap) {
        Ok(c) => CycleCount { count: c.len(), capped: false },
        Err(AcyclicityError::CapExceeded { cap }) => CycleCount { count: cap, capped: true },
        Err(e) => return Err(e),
    };
    let cycle_components = match beta_cycle_support_components(&g, cycle_cap) {
        Ok(comps) => Some(
            comps
                .iter()
                .map(|c| ComponentSummary {
                    nodes: c.nodes.clone(),
                    edges: c.edges.len(),
                    cycles: c.cycles.len(),
                    gap: gap(&c.edges).map(|r| r.gap).unwrap_or(0),
                    all_cycles_equivalent: c.cycles.iter().all(|x| x.is_equivalent(&c.cycles[0])),
                })
                .collect(),
        ),
        Err(AcyclicityError::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let maximal: BTreeSet<&NodeSet> =
        g.edges().iter().filter(|e| !g.edges().iter().any(|f| f.len() > e.len() && e.is_subset(f))).collect();
    let maximal_gaps = g
        .edges()
        .iter()
        .filter(|e| !maximal.contains(e))
        .map(|e| {
            let m = maximal
                .iter()
                .filter(|m| e.is_subset(m))
                .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
                .expect("some maximal edge contains every edge");
            MaximalGap { edge: e.clone(), maximal: (*m).clone(), gap: m.len() - e.len() }
        })
        .collect();
    let mh = multilinear_hypergraph(h);
    Ok(Analysis {
        nodes: h.nodes().len(),
        edges: h.edges().len(),
        underlying_edges: g.edges().len(),
        rank: h.rank(),
        beta_acyclic: beta_order.complete,
        alpha_acyclic: alpha_order.complete,
        beta_order,
        alpha_order,
        beta_cycles,
        cycle_components,
        maximal_gaps,
        multilinear_edges: mh.edges().len(),
        multilinear_beta_acyclic: is_beta_acyclic(&mh),
    })
}
