use std::collections::{BTreeMap, BTreeSet};

use super::{AuxKind, BuildError, BuildReport, ExtendedFormulation, LinRow, Relation, Step, VarId, VarRole, Variable};
use crate::hypergraph::{NodeId, SignedEdge, SignedHypergraph};

/// Variable registry plus row sink shared by all constructions.
pub(crate) struct Builder {
    input: SignedHypergraph,
    variables: Vec<Variable>,
    index: BTreeMap<VarRole, VarId>,
    rows: Vec<LinRow>,
    seen_rows: BTreeSet<LinRow>,
    pub(crate) steps: Vec<Step>,
    blocks: usize,
}

impl Builder {
    pub fn new(input: &SignedHypergraph) -> Self {
        let mut b = Builder {
            input: input.clone(),
            variables: Vec::new(),
            index: BTreeMap::new(),
            rows: Vec::new(),
            seen_rows: BTreeSet::new(),
            steps: Vec::new(),
            blocks: 0,
        };
        for v in input.nodes() {
            b.node(v);
        }
        for s in input.edges() {
            b.edge(s);
        }
        b
    }

    fn register(&mut self, role: VarRole, origin: impl FnOnce() -> String) -> VarId {
        if let Some(id) = self.index.get(&role) {
            return *id;
        }
        let id = VarId(self.variables.len());
        self.variables.push(Variable { role: role.clone(), origin: origin() });
        self.index.insert(role, id);
        id
    }

    pub fn node(&mut self, v: &NodeId) -> VarId {
        self.register(VarRole::Node(v.clone()), || "node".into())
    }

    pub fn edge(&mut self, s: &SignedEdge) -> VarId {
        let original = self.input.contains_edge(s);
        self.register(VarRole::Edge(s.clone()), || if original { "edge".into() } else { "derived edge".into() })
    }

    pub fn nested_aux(&mut self, block: usize, edge: &SignedEdge) -> VarId {
        self.register(VarRole::Aux(AuxKind::NestedEdge { block, edge: edge.clone() }), || {
            format!("nested completion edge {edge} of block {block}")
        })
    }

    pub fn balas_copy(&mut self, block: usize, pivot: &NodeId, of: VarId) -> VarId {
        self.register(VarRole::Aux(AuxKind::BalasCopy { block, pivot: pivot.clone(), of }), || {
            format!("z={pivot} face copy of {of} in block {block}")
        })
    }

    pub fn next_block(&mut self) -> usize {
        self.blocks += 1;
        self.blocks - 1
    }

    pub fn var_count(&self) -> usize {
        self.variables.len()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Normalizes (merges repeated variables, drops zeros, sorts), checks
    /// the 0/±1 discipline and skips exact duplicates. Returns whether the
    /// row was new.
    pub fn push(&mut self, coeffs: &[(VarId, i64)], relation: Relation, rhs: i64) -> Result<bool, BuildError> {
        let mut merged: BTreeMap<VarId, i64> = BTreeMap::new();
        for (v, a) in coeffs {
            *merged.entry(*v).or_insert(0) += a;
        }
        merged.retain(|_, a| *a != 0);
        let (coeffs, relation, rhs) = match relation {
            Relation::Ge => (merged.into_iter().map(|(v, a)| (v, -a)).collect(), Relation::Le, -rhs),
            r => (merged.into_iter().collect::<Vec<_>>(), r, rhs),
        };
        let row = LinRow { coeffs, relation, rhs };
        if row.coeffs.is_empty() {
            return Err(BuildError::NonUnitRow(format!("row without variables: 0 {:?} {}", row.relation, row.rhs)));
        }
        if !row.is_unit() {
            return Err(BuildError::NonUnitRow(format!("{row:?}")));
        }
        if !self.seen_rows.insert(row.clone()) {
            return Ok(false);
        }
        self.rows.push(row);
        Ok(true)
    }

    /// `0 ≤ z_v ≤ 1`.
    pub fn unit_bounds(&mut self, v: &NodeId) -> Result<(), BuildError> {
        let z = self.node(v);
        self.push(&[(z, -1)], Relation::Le, 0)?;
        self.push(&[(z, 1)], Relation::Le, 1)?;
        Ok(())
    }

    pub fn rows_since(&self, start: usize) -> &[LinRow] {
        &self.rows[start..]
    }

    pub fn finish(self, mut report: BuildReport) -> ExtendedFormulation {
        report.steps = self.steps;
        report.variables = self.variables.len();
        report.rows = self.rows.len();
        report.equalities = self.rows.iter().filter(|r| r.relation == Relation::Eq).count();
        ExtendedFormulation { input: self.input, variables: self.variables, rows: self.rows, report }
    }
}

/// Number of distinct variables in `rows`.
pub(crate) fn distinct_vars(rows: &[LinRow]) -> usize {
    rows.iter().flat_map(|r| r.coeffs.iter().map(|(v, _)| *v)).collect::<BTreeSet<_>>().len()
}
