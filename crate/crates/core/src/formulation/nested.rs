//! Nested signed hypergraphs: chains completed under sign flips and
//! truncations, and their closed-form polytope description.

use std::collections::{BTreeMap, BTreeSet};

use super::builder::{distinct_vars, Builder};
use super::{BoundCheck, BuildError, BuildReport, ExtendedFormulation, Relation, Step, StrategyKind, VarId};
use crate::hypergraph::{fmt_set, NodeId, NodeSet, Sign, Signed, SignedEdge, SignedHypergraph};

/// Variable of a nested system before it is bound to a formulation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum NVar {
    Node(NodeId),
    Edge(SignedEdge),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct AbstractRow {
    pub terms: Vec<(NVar, i64)>,
    pub relation: Relation,
    pub rhs: i64,
}

impl AbstractRow {
    fn new(terms: Vec<(NVar, i64)>, relation: Relation, rhs: i64) -> Self {
        AbstractRow { terms, relation, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Nested {
    pub order: Vec<NodeId>,
    pub edges: BTreeSet<SignedEdge>,
}

impl Nested {
    pub fn nodes(&self) -> NodeSet {
        self.order.iter().cloned().collect()
    }
}

fn check_chain(chain: &[SignedEdge]) -> Result<Vec<&SignedEdge>, BuildError> {
    if chain.is_empty() {
        return Err(BuildError::NotAChain("empty chain".into()));
    }
    let mut sorted: Vec<&SignedEdge> = chain.iter().collect();
    sorted.sort_by_key(|s| s.len());
    for w in sorted.windows(2) {
        if !w[0].is_subset_of(w[1]) {
            return Err(BuildError::NotAChain(format!("{} is not contained in {}", w[0], w[1])));
        }
    }
    Ok(sorted)
}

/// `v_1, …, v_n`: the smallest edge's nodes, then the new nodes of each
/// larger edge, each group in node order.
pub fn nested_order(chain: &[SignedEdge]) -> Result<Vec<NodeId>, BuildError> {
    let sorted = check_chain(chain)?;
    let mut order: Vec<NodeId> = Vec::new();
    let mut seen = NodeSet::new();
    for s in sorted {
        let fresh: NodeSet = s.nodes().filter(|n| !seen.contains(*n)).cloned().collect();
        seen.extend(fresh.iter().cloned());
        order.extend(fresh);
    }
    Ok(order)
}

/// Closure of a chain under `ℓ` and `p`. Level 1 is completed to all four
/// sign patterns when `full_quadruple` is set, otherwise only closed under
/// `ℓ`.
pub(crate) fn complete(chain: &[SignedEdge], full_quadruple: bool) -> Result<Nested, BuildError> {
    let mut order = nested_order(chain)?;
    let mut edges: BTreeSet<SignedEdge> = chain.iter().cloned().collect();
    for k in (2..order.len()).rev() {
        let top = &order[k];
        let level: Vec<SignedEdge> = edges.iter().filter(|e| e.len() == k + 1).cloned().collect();
        for s in level {
            edges.insert(s.flipped(top).expect("level edge contains its top node"));
            if let Some(Signed::Edge(p)) = s.minus(top) {
                edges.insert(p);
            }
        }
    }
    if !full_quadruple {
        // ℓ flips v_2, so put the node with fewer level-one signs first
        let signs = |n: &NodeId| {
            edges.iter().filter(|e| e.len() == 2).filter_map(|e| e.sign_of(n)).collect::<BTreeSet<_>>().len()
        };
        if signs(&order[1]) < signs(&order[0]) {
            order.swap(0, 1);
        }
    }
    let (v1, v2) = (&order[0], &order[1]);
    if full_quadruple {
        for (a, b) in [(Sign::Pos, Sign::Pos), (Sign::Pos, Sign::Neg), (Sign::Neg, Sign::Pos), (Sign::Neg, Sign::Neg)] {
            edges.insert(SignedEdge::new([(v1.clone(), a), (v2.clone(), b)]).expect("two distinct nodes"));
        }
    } else {
        let level: Vec<SignedEdge> = edges.iter().filter(|e| e.len() == 2).cloned().collect();
        for s in level {
            edges.insert(s.flipped(v2).expect("level edge contains v2"));
        }
    }
    Ok(Nested { order, edges })
}

/// Completes a chain of signed edges to a nested signed hypergraph with the
/// full sign quadruple on `{v_1, v_2}`.
pub fn nested_completion(chain: &[SignedEdge]) -> Result<SignedHypergraph, BuildError> {
    let nested = complete(chain, true)?;
    Ok(SignedHypergraph::new(nested.order.iter().cloned(), nested.edges.into_iter().collect())?)
}

/// Recovers the node order of a nested signed hypergraph and checks both
/// defining properties.
pub(crate) fn recognize(h: &SignedHypergraph) -> Result<Nested, BuildError> {
    let err = |m: String| BuildError::NotNested(m);
    if h.edges().is_empty() {
        return Err(err("no edges".into()));
    }
    let chain: Vec<SignedEdge> = h.edges().iter().cloned().collect();
    let order = nested_order(&chain).map_err(|e| err(e.to_string()))?;
    if order.len() != h.nodes().len() {
        return Err(err("the largest edge must cover every node".into()));
    }
    let underlying: BTreeSet<NodeSet> = h.edges().iter().map(SignedEdge::underlying).collect();
    for k in 1..order.len() {
        let ek: NodeSet = order[..=k].iter().cloned().collect();
        if !underlying.contains(&ek) {
            return Err(err(format!("missing edge level {}", fmt_set(&ek))));
        }
    }
    if underlying.len() != order.len() - 1 {
        return Err(err("underlying edges are not exactly the prefixes of the node order".into()));
    }
    for s in h.edges() {
        let top = &order[s.len() - 1];
        let flipped = s.flipped(top).expect("top node in edge");
        if !h.contains_edge(&flipped) {
            return Err(err(format!("{s} present but {flipped} missing")));
        }
        if let Some(Signed::Edge(p)) = s.minus(top) {
            if !h.contains_edge(&p) {
                return Err(err(format!("{s} present but {p} missing")));
            }
        }
    }
    Ok(Nested { order, edges: h.edges().clone() })
}

fn level_one_edge(order: &[NodeId], a: Sign, b: Sign) -> SignedEdge {
    SignedEdge::new([(order[0].clone(), a), (order[1].clone(), b)]).expect("two distinct nodes")
}

/// The nested polytope description. With only two level-one edges the two
/// missing sign patterns are projected out, and the partner of the pair is
/// substituted away too unless `real` asks to keep it.
pub(crate) fn nested_rows(n: &Nested, real: &dyn Fn(&SignedEdge) -> bool) -> Result<Vec<AbstractRow>, BuildError> {
    use NVar::{Edge, Node};
    let order = &n.order;
    let len = order.len();
    let mut levels: BTreeMap<usize, Vec<&SignedEdge>> = BTreeMap::new();
    for s in &n.edges {
        levels.entry(s.len() - 1).or_default().push(s);
    }
    let mut rows = Vec::new();
    for k in 2..len {
        let top = &order[k];
        for s in levels.get(&k).into_iter().flatten() {
            if s.sign_of(top) == Some(Sign::Pos) {
                let l = s.flipped(top).unwrap();
                let Some(Signed::Edge(p)) = s.minus(top) else { unreachable!("level ≥ 2 truncates to an edge") };
                rows.push(AbstractRow::new(
                    vec![(Edge((*s).clone()), 1), (Edge(l), 1), (Edge(p), -1)],
                    Relation::Eq,
                    0,
                ));
            }
        }
    }
    for s in &n.edges {
        rows.push(AbstractRow::new(vec![(Edge(s.clone()), -1)], Relation::Le, 0));
    }
    for k in 2..len {
        let top = &order[k];
        let level = levels.get(&k).map(Vec::as_slice).unwrap_or_default();
        let (plus, minus): (Vec<&&SignedEdge>, Vec<&&SignedEdge>) =
            level.iter().partition(|s| s.sign_of(top) == Some(Sign::Pos));
        let mut up: Vec<(NVar, i64)> = plus.iter().map(|s| (Edge((**s).clone()), 1)).collect();
        up.push((Node(top.clone()), -1));
        rows.push(AbstractRow::new(up, Relation::Le, 0));
        let mut down: Vec<(NVar, i64)> = minus.iter().map(|s| (Edge((**s).clone()), 1)).collect();
        down.push((Node(top.clone()), 1));
        rows.push(AbstractRow::new(down, Relation::Le, 1));
    }
    let q = |a, b| level_one_edge(order, a, b);
    let (q1, q2, q3, q4) =
        (q(Sign::Pos, Sign::Pos), q(Sign::Pos, Sign::Neg), q(Sign::Neg, Sign::Pos), q(Sign::Neg, Sign::Neg));
    let has = |e: &SignedEdge| n.edges.contains(e);
    let (v1, v2) = (Node(order[0].clone()), Node(order[1].clone()));
    match (has(&q1) && has(&q2), has(&q3) && has(&q4)) {
        (true, true) => {
            rows.push(AbstractRow::new(vec![(Edge(q1.clone()), 1), (Edge(q2), 1), (v1.clone(), -1)], Relation::Eq, 0));
            rows.push(AbstractRow::new(vec![(Edge(q1), 1), (Edge(q3.clone()), 1), (v2, -1)], Relation::Eq, 0));
            rows.push(AbstractRow::new(vec![(Edge(q3), 1), (Edge(q4), 1), (v1, 1)], Relation::Eq, 1));
        }
        (true, false) => {
            // q3 = z_v2 - q1 and q4 = 1 - z_v1 - q3 projected out
            rows.push(AbstractRow::new(
                vec![(Edge(q1.clone()), 1), (Edge(q2.clone()), 1), (v1.clone(), -1)],
                Relation::Eq,
                0,
            ));
            rows.push(AbstractRow::new(vec![(Edge(q1.clone()), 1), (v2.clone(), -1)], Relation::Le, 0));
            rows.push(AbstractRow::new(vec![(v1, 1), (v2, 1), (Edge(q1), -1)], Relation::Le, 1));
        }
        (false, true) => {
            // q1 = z_v2 - q3 and q2 = z_v1 - q1 projected out
            rows.push(AbstractRow::new(
                vec![(Edge(q3.clone()), 1), (Edge(q4.clone()), 1), (v1.clone(), 1)],
                Relation::Eq,
                1,
            ));
            rows.push(AbstractRow::new(vec![(Edge(q3.clone()), 1), (v2.clone(), -1)], Relation::Le, 0));
            rows.push(AbstractRow::new(vec![(v2, 1), (Edge(q3), -1), (v1, -1)], Relation::Le, 0));
        }
        (false, false) => {
            return Err(BuildError::NotNested("level-one edges must come in ℓ-pairs".into()));
        }
    }
    let mut system = RowSystem::new(rows);
    for q in n.edges.iter().filter(|e| !real(e)) {
        system.eliminate(q)?;
    }
    Ok(system.into_rows())
}

/// Rows over interned variables plus an index from each variable to the
/// rows mentioning it. A substitution only adds the pivot's few terms to
/// each touched row, so long chain rows are never rebuilt.
struct RowSystem {
    vars: Vec<NVar>,
    ids: BTreeMap<NVar, usize>,
    rows: Vec<Option<SparseRow>>,
    occurs: Vec<BTreeSet<usize>>,
}

struct SparseRow {
    original: Option<Vec<(NVar, i64)>>,
    terms: BTreeMap<usize, i64>,
    relation: Relation,
    rhs: i64,
}

enum Update {
    Drop,
    Patch { changes: Vec<(usize, i64)>, rhs: i64 },
}

impl RowSystem {
    fn new(rows: Vec<AbstractRow>) -> Self {
        // ids follow NVar order so sorted ids give sorted terms
        let all: BTreeSet<&NVar> = rows.iter().flat_map(|r| r.terms.iter().map(|(x, _)| x)).collect();
        let vars: Vec<NVar> = all.into_iter().cloned().collect();
        let ids: BTreeMap<NVar, usize> = vars.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let mut occurs = vec![BTreeSet::new(); vars.len()];
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(i, r)| {
                let mut terms = BTreeMap::new();
                for (x, c) in &r.terms {
                    let id = ids[x];
                    *terms.entry(id).or_insert(0) += c;
                    occurs[id].insert(i);
                }
                Some(SparseRow { original: Some(r.terms), terms, relation: r.relation, rhs: r.rhs })
            })
            .collect();
        RowSystem { vars, ids, rows, occurs }
    }

    fn into_rows(self) -> Vec<AbstractRow> {
        let vars = self.vars;
        self.rows
            .into_iter()
            .flatten()
            .map(|r| {
                let terms =
                    r.original.unwrap_or_else(|| r.terms.iter().map(|(id, c)| (vars[*id].clone(), *c)).collect());
                AbstractRow::new(terms, r.relation, r.rhs)
            })
            .collect()
    }

    fn drop_row(&mut self, i: usize) {
        if let Some(r) = self.rows[i].take() {
            for id in r.terms.keys() {
                self.occurs[*id].remove(&i);
            }
        }
    }

    /// Solves the first equality mentioning `Edge(q)` for it and substitutes
    /// everywhere else. Leaves the system unchanged if no equality mentions
    /// `q` or a coefficient would leave {0, ±1}.
    fn eliminate(&mut self, q: &SignedEdge) -> Result<bool, BuildError> {
        let Some(&t) = self.ids.get(&NVar::Edge(q.clone())) else { return Ok(false) };
        let row = |i: usize| self.rows[i].as_ref().expect("indexed rows are live");
        let Some(pivot) = self.occurs[t].iter().copied().find(|&i| row(i).relation == Relation::Eq) else {
            return Ok(false);
        };
        // q = (rhs - rest) / a with a = ±1
        let p = row(pivot);
        let a = p.terms[&t];
        let expr: Vec<(usize, i64)> = p.terms.iter().filter(|(x, _)| **x != t).map(|(x, c)| (*x, -c * a)).collect();
        let constant = p.rhs * a;
        let mut updates = Vec::new();
        for i in self.occurs[t].iter().copied().filter(|&i| i != pivot) {
            let r = row(i);
            let b = r.terms[&t];
            let mut changes = vec![(t, 0)];
            let mut len = r.terms.len() - 1;
            for &(x, c) in &expr {
                let old = r.terms.get(&x).copied().unwrap_or(0);
                let new = old + b * c;
                if new.abs() > 1 {
                    return Ok(false);
                }
                len = len + (new != 0) as usize - (old != 0) as usize;
                changes.push((x, new));
            }
            let rhs = r.rhs - b * constant;
            if len == 0 {
                let holds = match r.relation {
                    Relation::Eq => rhs == 0,
                    Relation::Le => rhs >= 0,
                    Relation::Ge => rhs <= 0,
                };
                if !holds {
                    return Err(BuildError::NotNested("elimination left an infeasible row".into()));
                }
                updates.push((i, Update::Drop));
                continue;
            }
            if rhs.abs() > 1 {
                return Ok(false);
            }
            updates.push((i, Update::Patch { changes, rhs }));
        }
        self.drop_row(pivot);
        for (i, u) in updates {
            match u {
                Update::Drop => self.drop_row(i),
                Update::Patch { changes, rhs } => {
                    let r = self.rows[i].as_mut().expect("live row");
                    r.original = None;
                    r.rhs = rhs;
                    for (x, c) in changes {
                        if c == 0 {
                            r.terms.remove(&x);
                            self.occurs[x].remove(&i);
                        } else {
                            r.terms.insert(x, c);
                            self.occurs[x].insert(i);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Binds abstract rows to builder variables.
pub(crate) fn emit(
    b: &mut Builder,
    rows: &[AbstractRow],
    mut bind: impl FnMut(&mut Builder, &NVar) -> VarId,
) -> Result<(), BuildError> {
    for r in rows {
        let coeffs: Vec<(VarId, i64)> = r.terms.iter().map(|(v, a)| (bind(b, v), *a)).collect();
        b.push(&coeffs, r.relation, r.rhs)?;
    }
    Ok(())
}

/// The closed-form description of `PBP(H)` for a nested `H`.
pub fn nested_system(h: &SignedHypergraph) -> Result<ExtendedFormulation, BuildError> {
    let nested = recognize(h)?;
    let rows = nested_rows(&nested, &|_| true)?;
    let mut b = Builder::new(h);
    emit(&mut b, &rows, |b, v| match v {
        NVar::Node(n) => b.node(n),
        NVar::Edge(s) => b.edge(s),
    })?;
    let (vars, rows_n) = (distinct_vars(b.rows_since(0)), b.row_count());
    b.steps.push(Step::NestedBlock { nodes: nested.order.clone(), vars, rows: rows_n });
    let s = h.edges().len() as u128;
    let v = h.nodes().len() as u128;
    let mut report = BuildReport::new(StrategyKind::Nested);
    let eq = b.rows_since(0).iter().filter(|r| r.relation == Relation::Eq).count() as u128;
    let ineq = rows_n as u128 - eq;
    if s.is_multiple_of(2) && nested.edges.iter().filter(|e| e.len() == 2).count() == 4 {
        report.bound_checks.push(BoundCheck::exact("nested equalities = |S|/2+1", eq, s / 2 + 1));
        report.bound_checks.push(BoundCheck::exact("nested inequalities = |S|+2|V|-4", ineq, s + 2 * v - 4));
    } else {
        report.bound_checks.push(BoundCheck::at_most("nested equalities", eq, (s + 2) / 2 + 1));
        report.bound_checks.push(BoundCheck::at_most("nested inequalities", ineq, s + 2 + 2 * v - 4));
    }
    Ok(b.finish(report))
}
