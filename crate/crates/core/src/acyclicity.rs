//! β/α leaf elimination, β-cycle enumeration, gaps and β-cycle support
//! components of (underlying) hypergraphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, NodeId, NodeSet};

/// Default bound on the number of canonical β-cycles enumerated.
pub const DEFAULT_CYCLE_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AcyclicityError {
    #[error("more than {cap} beta-cycles; enumeration abandoned")]
    CapExceeded { cap: usize },
    #[error("cycle cap must be positive")]
    ZeroCap,
    #[error("gap of an empty edge family is undefined")]
    EmptyFamily,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LeafKind {
    Beta,
    Alpha,
}

/// A greedy leaf elimination sequence. For α-orders `witnesses[i]` is the
/// maximum edge containing `order[i]` at the time it was removed (`None`
/// for a node without edges); β-orders leave it empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrder {
    pub kind: LeafKind,
    pub order: Vec<NodeId>,
    pub complete: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Option<NodeSet>>,
}

impl EliminationOrder {
    /// Re-checks every step against the leaf definition.
    pub fn replay(&self, g: &Hypergraph) -> bool {
        let mut current = g.clone();
        let mut seen = BTreeSet::new();
        for (i, v) in self.order.iter().enumerate() {
            if !current.nodes().contains(v) || !seen.insert(v.clone()) {
                return false;
            }
            let ok = match self.kind {
                LeafKind::Beta => is_beta_leaf(&current, v),
                LeafKind::Alpha => match alpha_witness(&current, v) {
                    Some(w) => self.witnesses.get(i).is_none_or(|recorded| *recorded == w),
                    None => false,
                },
            };
            if !ok {
                return false;
            }
            current = current.remove_node(v);
        }
        self.complete == current.nodes().is_empty()
    }
}

/// Whether the edges containing `v` are totally ordered by inclusion.
pub fn is_beta_leaf(g: &Hypergraph, v: &NodeId) -> bool {
    let mut incident: Vec<&NodeSet> = g.edges_containing(v).collect();
    incident.sort_by_key(|e| e.len());
    incident.windows(2).all(|w| w[0].is_subset(w[1]))
}

/// `Some(witness)` when `v` is an α-leaf: the edges containing `v` have a
/// maximum (an edge containing all the others). `Some(None)` for a node
/// without edges.
pub fn alpha_witness(g: &Hypergraph, v: &NodeId) -> Option<Option<NodeSet>> {
    let incident: Vec<&NodeSet> = g.edges_containing(v).collect();
    if incident.is_empty() {
        return Some(None);
    }
    // In a simple hypergraph at most one edge can contain all others; the
    // (cardinality, lexicographic) preference only fixes iteration order.
    let mut candidates = incident.clone();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    candidates.into_iter().find(|top| incident.iter().all(|e| e.is_subset(top))).map(|top| Some(top.clone()))
}

pub fn find_beta_leaf(g: &Hypergraph) -> Option<NodeId> {
    g.nodes().iter().find(|v| is_beta_leaf(g, v)).cloned()
}

pub fn find_alpha_leaf(g: &Hypergraph) -> Option<(NodeId, Option<NodeSet>)> {
    g.nodes().iter().find_map(|v| alpha_witness(g, v).map(|w| (v.clone(), w)))
}

pub fn beta_elimination_order(g: &Hypergraph) -> EliminationOrder {
    let mut current = g.clone();
    let mut order = Vec::new();
    while let Some(v) = find_beta_leaf(&current) {
        current = current.remove_node(&v);
        order.push(v);
    }
    EliminationOrder { kind: LeafKind::Beta, order, complete: current.nodes().is_empty(), witnesses: Vec::new() }
}

pub fn alpha_elimination_order(g: &Hypergraph) -> EliminationOrder {
    let mut current = g.clone();
    let mut order = Vec::new();
    let mut witnesses = Vec::new();
    while let Some((v, w)) = find_alpha_leaf(&current) {
        current = current.remove_node(&v);
        order.push(v);
        witnesses.push(w);
    }
    EliminationOrder { kind: LeafKind::Alpha, order, complete: current.nodes().is_empty(), witnesses }
}

pub fn is_beta_acyclic(g: &Hypergraph) -> bool {
    beta_elimination_order(g).complete
}

pub fn is_alpha_acyclic(g: &Hypergraph) -> bool {
    alpha_elimination_order(g).complete
}

/// `v_1, e_1, v_2, …, v_q, e_q, v_1` with `v_i ∈ e_{i-1} ∩ e_i` and in no
/// other cycle edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BetaCycle {
    pub nodes: Vec<NodeId>,
    pub edges: Vec<NodeSet>,
}

impl BetaCycle {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Checks the defining conditions directly.
    pub fn is_valid(&self) -> bool {
        let q = self.nodes.len();
        if q < 3 || self.edges.len() != q {
            return false;
        }
        let distinct_nodes: BTreeSet<_> = self.nodes.iter().collect();
        let distinct_edges: BTreeSet<_> = self.edges.iter().collect();
        if distinct_nodes.len() != q || distinct_edges.len() != q {
            return false;
        }
        (0..q).all(|i| {
            let prev = (i + q - 1) % q;
            (0..q).all(|j| self.edges[j].contains(&self.nodes[i]) == (j == i || j == prev))
        })
    }

    /// Support hypergraph node set `V[C]`.
    pub fn support_nodes(&self) -> NodeSet {
        self.edges.iter().flatten().cloned().collect()
    }

    /// Equivalence up to circular permutation and reversal of the edge
    /// sequence.
    pub fn is_equivalent(&self, other: &BetaCycle) -> bool {
        let q = self.edges.len();
        if q != other.edges.len() {
            return false;
        }
        let forward = |shift: usize| (0..q).all(|i| self.edges[i] == other.edges[(i + shift) % q]);
        let backward = |shift: usize| (0..q).all(|i| self.edges[i] == other.edges[(shift + q - i) % q]);
        (0..q).any(|s| forward(s) || backward(s))
    }
}

/// All β-cycles of `g` up to rotation and reversal, found by DFS from the
/// smallest node of each cycle. Fails once more than `cap` are found.
pub fn enumerate_beta_cycles(g: &Hypergraph, cap: usize) -> Result<Vec<BetaCycle>, AcyclicityError> {
    if cap == 0 {
        return Err(AcyclicityError::ZeroCap);
    }
    let nodes: Vec<NodeId> = g.nodes().iter().cloned().collect();
    let index = |v: &NodeId| nodes.binary_search(v).expect("edge node in node set");
    let edges: Vec<NodeSet> = g.edges().iter().cloned().collect();
    let member: Vec<Vec<bool>> = edges
        .iter()
        .map(|e| {
            let mut row = vec![false; nodes.len()];
            for v in e {
                row[index(v)] = true;
            }
            row
        })
        .collect();
    let incident: Vec<Vec<usize>> =
        (0..nodes.len()).map(|v| (0..edges.len()).filter(|&e| member[e][v]).collect()).collect();

    let mut search = CycleSearch { member: &member, incident: &incident, cap, found: Vec::new() };
    for start in 0..nodes.len() {
        let mut path_nodes = vec![start];
        let mut path_edges = Vec::new();
        search.extend(&mut path_nodes, &mut path_edges)?;
    }
    let mut cycles: Vec<BetaCycle> = search
        .found
        .into_iter()
        .map(|(ns, es)| BetaCycle {
            nodes: ns.into_iter().map(|i| nodes[i].clone()).collect(),
            edges: es.into_iter().map(|i| edges[i].clone()).collect(),
        })
        .collect();
    cycles.sort();
    Ok(cycles)
}

struct CycleSearch<'a> {
    member: &'a [Vec<bool>],
    incident: &'a [Vec<usize>],
    cap: usize,
    found: Vec<(Vec<usize>, Vec<usize>)>,
}

impl CycleSearch<'_> {
    fn extend(&mut self, path_nodes: &mut Vec<usize>, path_edges: &mut Vec<usize>) -> Result<(), AcyclicityError> {
        let first = path_nodes[0];
        let last = *path_nodes.last().unwrap();
        let k = path_nodes.len();
        for &e in &self.incident[last] {
            if path_edges.contains(&e) {
                continue;
            }
            // interior nodes already sit in their two cycle edges
            if k > 2 && path_nodes[1..k - 1].iter().any(|&v| self.member[e][v]) {
                continue;
            }
            if k > 1 && self.member[e][first] {
                // closing edge; orientation fixed by v_2 < v_q
                if k >= 3 && path_nodes[1] < last {
                    let mut es = path_edges.clone();
                    es.push(e);
                    self.found.push((path_nodes.clone(), es));
                    if self.found.len() > self.cap {
                        return Err(AcyclicityError::CapExceeded { cap: self.cap });
                    }
                }
                continue;
            }
            for v in 0..self.member[e].len() {
                if !self.member[e][v] || v <= first || path_nodes.contains(&v) {
                    continue;
                }
                if path_edges.iter().any(|&f| self.member[f][v]) {
                    continue;
                }
                path_nodes.push(v);
                path_edges.push(e);
                self.extend(path_nodes, path_edges)?;
                path_nodes.pop();
                path_edges.pop();
            }
        }
        Ok(())
    }
}

/// `gap(E') = max_{e ∈ E'} |∪E'| - |e|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapReport {
    pub edge_subset: Vec<NodeSet>,
    pub union_size: usize,
    pub min_violator: NodeSet,
    pub gap: usize,
}

pub fn gap<'a, I>(edges: I) -> Result<GapReport, AcyclicityError>
where
    I: IntoIterator<Item = &'a NodeSet>,
{
    let mut subset: Vec<NodeSet> = edges.into_iter().cloned().collect();
    subset.sort();
    subset.dedup();
    let union: NodeSet = subset.iter().flatten().cloned().collect();
    let smallest = subset.iter().min_by_key(|e| e.len()).ok_or(AcyclicityError::EmptyFamily)?.clone();
    Ok(GapReport {
        union_size: union.len(),
        gap: union.len() - smallest.len(),
        min_violator: smallest,
        edge_subset: subset,
    })
}

/// A connected component of the union of all β-cycle support hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleComponent {
    pub nodes: NodeSet,
    pub edges: BTreeSet<NodeSet>,
    pub cycles: Vec<BetaCycle>,
}

pub fn beta_cycle_support_components(g: &Hypergraph, cap: usize) -> Result<Vec<CycleComponent>, AcyclicityError> {
    let cycles = enumerate_beta_cycles(g, cap)?;
    let support: BTreeSet<NodeSet> = cycles.iter().flat_map(|c| c.edges.iter().cloned()).collect();
    let components = Hypergraph::spanned_by(support).connected_components();
    Ok(components
        .into_iter()
        .map(|(nodes, edges)| {
            let inside = cycles.iter().filter(|c| c.edges.iter().all(|e| edges.contains(e))).cloned().collect();
            CycleComponent { nodes, edges, cycles: inside }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(edges: &[&[&str]]) -> Hypergraph {
        Hypergraph::from_lists(edges).unwrap()
    }

    fn set(names: &[&str]) -> NodeSet {
        names.iter().map(NodeId::new).collect()
    }

    /// Brute force: `v` is a β-leaf iff every pair of incident edges is
    /// comparable.
    fn chain_oracle(g: &Hypergraph, v: &NodeId) -> bool {
        let inc: Vec<&NodeSet> = g.edges_containing(v).collect();
        inc.iter().all(|a| inc.iter().all(|b| a.is_subset(b) || b.is_subset(a)))
    }

    #[test]
    fn beta_leaf_on_chain() {
        let h = g(&[&["a", "b"], &["a", "b", "c"]]);
        assert_eq!(find_beta_leaf(&h), Some(NodeId::new("a")));
    }

    #[test]
    fn triangle_has_no_leaves() {
        let t = g(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
        assert_eq!(find_beta_leaf(&t), None);
        assert!(!alpha_elimination_order(&t).complete);
        let cycles = enumerate_beta_cycles(&t, 10).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
        assert!(cycles[0].is_valid());
    }

    #[test]
    fn single_edge_order() {
        let order = beta_elimination_order(&g(&[&["a", "b"]]));
        assert_eq!(order.order, vec![NodeId::new("a"), NodeId::new("b")]);
        assert!(order.complete);
        assert!(order.replay(&g(&[&["a", "b"]])));
    }

    #[test]
    fn beta_leaf_matches_chain_oracle() {
        let h = g(&[&["a", "b", "c"], &["a", "b"], &["b", "c"], &["c", "d"], &["a", "b", "c", "d"]]);
        for v in h.nodes() {
            assert_eq!(is_beta_leaf(&h, v), chain_oracle(&h, v), "node {v}");
        }
    }

    #[test]
    fn gap_values() {
        let one = [set(&["a", "b", "c"])];
        assert_eq!(gap(&one).unwrap().gap, 0);
        let two = [set(&["a", "b"]), set(&["a", "b", "c", "d"])];
        let r = gap(&two).unwrap();
        assert_eq!((r.gap, r.union_size), (2, 4));
        assert_eq!(r.min_violator, set(&["a", "b"]));
        assert_eq!(gap(std::iter::empty()), Err(AcyclicityError::EmptyFamily));
    }

    #[test]
    fn components_of_triangle_plus_edge() {
        let h = g(&[&["a", "b"], &["b", "c"], &["a", "c"], &["x", "y"]]);
        let comps = beta_cycle_support_components(&h, 100).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].nodes, set(&["a", "b", "c"]));
        assert!(beta_cycle_support_components(&g(&[&["a", "b"], &["a", "b", "c"]]), 100).unwrap().is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let k5: Vec<Vec<&str>> = {
            let names = ["a", "b", "c", "d", "e"];
            let mut out = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    out.push(vec![names[i], names[j]]);
                }
            }
            out
        };
        let refs: Vec<&[&str]> = k5.iter().map(|e| e.as_slice()).collect();
        let h = g(&refs);
        assert_eq!(enumerate_beta_cycles(&h, 3), Err(AcyclicityError::CapExceeded { cap: 3 }));
        assert_eq!(enumerate_beta_cycles(&h, 0), Err(AcyclicityError::ZeroCap));
        // K5 has 10 triangles, 15 four-cycles and 12 five-cycles
        let all = enumerate_beta_cycles(&h, 1000).unwrap();
        assert_eq!(all.len(), 37);
    }

    #[test]
    fn alpha_witness_is_maximum_edge() {
        let h = g(&[&["a", "b"], &["b", "c"], &["a", "c"], &["a", "b", "c"]]);
        let order = alpha_elimination_order(&h);
        assert!(order.complete);
        assert_eq!(order.witnesses[0], Some(set(&["a", "b", "c"])));
        assert!(order.replay(&h));
        assert!(!beta_elimination_order(&h).complete);
    }

    #[test]
    fn equivalence_up_to_rotation_and_reversal() {
        let c = BetaCycle {
            nodes: vec!["a".into(), "b".into(), "c".into()],
            edges: vec![set(&["a", "b"]), set(&["b", "c"]), set(&["a", "c"])],
        };
        let mut r = c.clone();
        r.edges.reverse();
        r.edges.rotate_left(1);
        assert!(c.is_equivalent(&r));
    }

    fn arb_hypergraph() -> impl proptest::strategy::Strategy<Value = Hypergraph> {
        use proptest::prelude::*;
        prop::collection::btree_set(prop::collection::btree_set(0usize..6, 2..5), 0..7).prop_map(|raw| {
            let edges: Vec<NodeSet> =
                raw.into_iter().map(|e| e.into_iter().map(|i| NodeId::new(format!("v{i}"))).collect()).collect();
            Hypergraph::new((0..6).map(|i| format!("v{i}")), edges).unwrap()
        })
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(200))]
        #[test]
        fn elimination_agrees_with_cycle_search(h in arb_hypergraph()) {
            let order = beta_elimination_order(&h);
            proptest::prop_assert!(order.replay(&h));
            let cycles = enumerate_beta_cycles(&h, 100_000).unwrap();
            proptest::prop_assert_eq!(order.complete, cycles.is_empty());
            for c in &cycles {
                proptest::prop_assert!(c.is_valid());
            }
            let alpha = alpha_elimination_order(&h);
            proptest::prop_assert!(alpha.replay(&h));
            if order.complete {
                proptest::prop_assert!(alpha.complete);
            }
        }
    }
}
