//! Linear systems whose projections are pseudo-Boolean polytopes: nested
//! systems, pointed blocks, inflation links and the recursive
//! inflate-and-decompose driver.

mod builder;
mod export;
mod inflate;
mod lift;
mod nested;
mod pointed;
mod report;
mod rid;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::acyclicity::AcyclicityError;
use crate::hypergraph::{HypergraphError, NodeId, SignedEdge, SignedHypergraph};
pub use crate::lp::Relation;

pub use export::{formulation_from_json, formulation_to_json, to_lp_format, variable_name};
pub use inflate::{augment_with_projections, inflate, inflation_members, Inflation};
pub use lift::lift_binary_point;
pub use nested::{nested_completion, nested_order, nested_system};
pub use pointed::pointed_formulation;
pub use report::{BoundCheck, BuildReport, Step};
pub use rid::{rid_build, Strategy, StrategyKind, DEFAULT_BLOWUP_BUDGET, DEFAULT_GAP_MAX};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VarId(pub usize);

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuxKind {
    /// Edge added when completing a chain to a nested hypergraph; local to
    /// its block.
    NestedEdge { block: usize, edge: SignedEdge },
    /// `of · z_pivot`, the `z_pivot = 1` part of a disjunctive block.
    BalasCopy { block: usize, pivot: NodeId, of: VarId },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VarRole {
    Node(NodeId),
    Edge(SignedEdge),
    Aux(AuxKind),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub role: VarRole,
    pub origin: String,
}

/// `Σ coeffs (relation) rhs` with `relation ∈ {eq, le}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinRow {
    pub coeffs: Vec<(VarId, i64)>,
    pub relation: Relation,
    pub rhs: i64,
}

impl LinRow {
    pub fn is_unit(&self) -> bool {
        (-1..=1).contains(&self.rhs) && self.coeffs.iter().all(|(_, a)| (-1..=1).contains(a))
    }

    pub fn lhs(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().map(|(v, a)| a * x[v.0]).sum()
    }

    pub fn is_satisfied(&self, x: &[i64]) -> bool {
        let lhs = self.lhs(x);
        match self.relation {
            Relation::Eq => lhs == self.rhs,
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtendedFormulation {
    pub input: SignedHypergraph,
    pub variables: Vec<Variable>,
    pub rows: Vec<LinRow>,
    pub report: BuildReport,
}

impl ExtendedFormulation {
    pub fn var(&self, role: &VarRole) -> Option<VarId> {
        self.variables.iter().position(|v| v.role == *role).map(VarId)
    }

    pub fn node_var(&self, v: &NodeId) -> Option<VarId> {
        self.var(&VarRole::Node(v.clone()))
    }

    pub fn edge_var(&self, s: &SignedEdge) -> Option<VarId> {
        self.var(&VarRole::Edge(s.clone()))
    }

    /// Variables of `V ∪ S` of the input, nodes first.
    pub fn projection(&self) -> Vec<VarId> {
        let nodes = self.input.nodes().iter().map(|v| self.node_var(v));
        let edges = self.input.edges().iter().map(|s| self.edge_var(s));
        nodes.chain(edges).map(|v| v.expect("projection variables are always registered")).collect()
    }

    pub fn equality_count(&self) -> usize {
        self.rows.iter().filter(|r| r.relation == Relation::Eq).count()
    }

    pub fn is_unit(&self) -> bool {
        self.rows.iter().all(LinRow::is_unit)
    }

    pub fn role_index(&self) -> BTreeMap<&VarRole, VarId> {
        self.variables.iter().enumerate().map(|(i, v)| (&v.role, VarId(i))).collect()
    }

    /// Copy without the rows selected by `drop`; used to check that the
    /// verifier notices missing inequalities.
    pub fn without_rows(&self, drop: impl Fn(&LinRow) -> bool) -> ExtendedFormulation {
        let mut ef = self.clone();
        ef.rows.retain(|r| !drop(r));
        ef.report.rows = ef.rows.len();
        ef
    }

    pub fn input_edges(&self) -> &BTreeSet<SignedEdge> {
        self.input.edges()
    }
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("strategy not applicable: {0}")]
    StrategyInapplicable(String),
    #[error("edges do not form a chain under inclusion: {0}")]
    NotAChain(String),
    #[error("not a nested signed hypergraph: {0}")]
    NotNested(String),
    #[error("not pointed at {node}: {reason}")]
    NotPointed { node: NodeId, reason: String },
    #[error("{node} is not a beta-leaf")]
    NotBetaLeaf { node: NodeId },
    #[error("bad inflation: {0}")]
    BadInflation(String),
    #[error("row violates the 0/±1 discipline: {0}")]
    NonUnitRow(String),
    #[error("invalid strategy parameters: {0}")]
    BadParameters(String),
    #[error("point is not in PBS(H): {0}")]
    NotInPbs(String),
    #[error(transparent)]
    Acyclicity(#[from] AcyclicityError),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}
