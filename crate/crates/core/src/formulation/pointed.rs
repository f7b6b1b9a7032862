//! Pointed signed hypergraphs: disjunction over the two faces `z_v ∈ {0,1}`
//! of a nested description.

use std::collections::BTreeSet;

use super::builder::{distinct_vars, Builder};
use super::inflate::projections;
use super::nested::{complete, emit, nested_rows, AbstractRow, NVar};
use super::{BoundCheck, BuildError, BuildReport, ExtendedFormulation, Relation, Step, StrategyKind, VarId};
use crate::acyclicity::is_beta_leaf;
use crate::hypergraph::{NodeId, Sign, Signed, SignedEdge, SignedHypergraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct BlockStats {
    pub vars: usize,
    pub rows: usize,
    pub parallel: bool,
}

/// Checks the pointed shape: `v` a β-leaf, `V` the largest edge through
/// `v`, and `S = S_v ∪ P_v`.
pub(crate) fn check_pointed(h: &SignedHypergraph, v: &NodeId) -> Result<(), BuildError> {
    let fail = |reason: &str| Err(BuildError::NotPointed { node: v.clone(), reason: reason.into() });
    if !h.nodes().contains(v) {
        return fail("node not in the hypergraph");
    }
    if !is_beta_leaf(&h.underlying_hypergraph(), v) {
        return fail("not a beta-leaf");
    }
    let Some(top) = h.edges_containing(v).max_by_key(|s| s.len()) else {
        return fail("no edge contains the node");
    };
    if top.underlying() != *h.nodes() {
        return fail("node set differs from the largest edge through the node");
    }
    let expected: BTreeSet<SignedEdge> = h.edges_containing(v).cloned().chain(projections(h, v)).collect();
    if expected != *h.edges() {
        return fail("edges must be S_v together with P_v");
    }
    Ok(())
}

/// Emits an extended formulation of a pointed hypergraph into `b`.
pub(crate) fn pointed_block(b: &mut Builder, h: &SignedHypergraph, v: &NodeId) -> Result<BlockStats, BuildError> {
    let block = b.next_block();
    let start = b.row_count();
    let s_v: Vec<SignedEdge> = h.edges_containing(v).cloned().collect();
    let p_v: BTreeSet<SignedEdge> = projections(h, v).into_iter().collect();
    let width = h.nodes().len();
    let parallel = s_v.iter().all(|s| s.len() == width);
    let real: BTreeSet<&SignedEdge> = h.edges().iter().collect();

    if parallel {
        let chain: Vec<SignedEdge> = s_v.iter().chain(&p_v).cloned().collect();
        let nested = complete(&chain, false)?;
        let rows = nested_rows(&nested, &|e| real.contains(e))?;
        emit(b, &rows, |b, x| match x {
            NVar::Node(n) => b.node(n),
            NVar::Edge(e) if real.contains(e) => b.edge(e),
            NVar::Edge(e) => b.nested_aux(block, e),
        })?;
    } else {
        // the largest edge has at least three nodes here, so P_v is nonempty
        let chain: Vec<SignedEdge> = p_v.iter().cloned().collect();
        let rows: Vec<AbstractRow> = nested_rows(&complete(&chain, false)?, &|e| p_v.contains(e))?;
        let zv = b.node(v);
        let bind = |b: &mut Builder, x: &NVar| -> (VarId, VarId) {
            let base = match x {
                NVar::Node(n) => b.node(n),
                NVar::Edge(e) if p_v.contains(e) => b.edge(e),
                NVar::Edge(e) => b.nested_aux(block, e),
            };
            (base, b.balas_copy(block, v, base))
        };
        for r in &rows {
            let mut face1: Vec<(VarId, i64)> = Vec::new();
            let mut face0: Vec<(VarId, i64)> = Vec::new();
            for (x, a) in &r.terms {
                let (base, copy) = bind(b, x);
                face1.push((copy, *a));
                face0.push((base, *a));
                face0.push((copy, -*a));
            }
            face1.push((zv, -r.rhs));
            face0.push((zv, r.rhs));
            b.push(&face1, r.relation, 0)?;
            b.push(&face0, r.relation, r.rhs)?;
        }
        for s in &s_v {
            let zs = b.edge(s);
            let positive = s.sign_of(v) == Some(Sign::Pos);
            let (coeffs, rhs): (Vec<(VarId, i64)>, i64) = match s.minus(v).expect("edge contains v") {
                Signed::Edge(p) => {
                    let (x, x1) = bind(b, &NVar::Edge(p));
                    if positive {
                        (vec![(zs, 1), (x1, -1)], 0)
                    } else {
                        (vec![(zs, 1), (x, -1), (x1, 1)], 0)
                    }
                }
                Signed::Loop(u, sign) => {
                    let (zu, u1) = bind(b, &NVar::Node(u));
                    match (positive, sign) {
                        (true, Sign::Pos) => (vec![(zs, 1), (u1, -1)], 0),
                        (true, Sign::Neg) => (vec![(zs, 1), (zv, -1), (u1, 1)], 0),
                        (false, Sign::Pos) => (vec![(zs, 1), (zu, -1), (u1, 1)], 0),
                        (false, Sign::Neg) => (vec![(zs, 1), (zv, 1), (zu, 1), (u1, -1)], 1),
                    }
                }
            };
            b.push(&coeffs, Relation::Eq, rhs)?;
        }
        b.push(&[(zv, -1)], Relation::Le, 0)?;
        b.push(&[(zv, 1)], Relation::Le, 1)?;
    }
    let stats = BlockStats { vars: distinct_vars(b.rows_since(start)), rows: b.row_count() - start, parallel };
    b.steps.push(Step::PointedBlock { node: v.clone(), parallel, vars: stats.vars, rows: stats.rows });
    Ok(stats)
}

/// Size checks for one pointed block on `|V|` nodes and `|S|` edges.
pub(crate) fn block_checks(node: &NodeId, stats: BlockStats, v: usize, s: usize) -> Vec<BoundCheck> {
    let (v, s) = (v as u128, s as u128);
    let mut out = vec![
        BoundCheck::at_most(
            format!("pointed block at {node}: variables ≤ 2|V|(|S|+1)"),
            stats.vars as u128,
            2 * v * (s + 1),
        ),
        BoundCheck::at_most(
            format!("pointed block at {node}: rows ≤ 4(|S|(|V|-2)+|V|)"),
            stats.rows as u128,
            4 * (s * (v - 2) + v),
        ),
    ];
    if stats.parallel {
        out.push(BoundCheck::at_most(
            format!("parallel block at {node}: variables ≤ |S|(|V|-1)+|V|"),
            stats.vars as u128,
            s * (v - 1) + v,
        ));
        out.push(BoundCheck::at_most(
            format!("parallel block at {node}: rows ≤ 2(|S|(|V|-1)+|V|)"),
            stats.rows as u128,
            2 * (s * (v - 1) + v),
        ));
    }
    out
}

/// Extended formulation of a signed hypergraph pointed at `v`.
pub fn pointed_formulation(h: &SignedHypergraph, v: &NodeId) -> Result<ExtendedFormulation, BuildError> {
    check_pointed(h, v)?;
    let mut b = Builder::new(h);
    let stats = pointed_block(&mut b, h, v)?;
    let mut report = BuildReport::new(StrategyKind::Pointed);
    report.bound_checks = block_checks(v, stats, h.nodes().len(), h.edges().len());
    Ok(b.finish(report))
}
