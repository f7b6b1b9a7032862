use serde::{Deserialize, Serialize};

use super::StrategyKind;
use crate::hypergraph::{NodeId, NodeSet, SignedEdge};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "step")]
pub enum Step {
    Inflate { edge: SignedEdge, target: NodeSet, members: usize },
    Decompose { node: NodeId, added_projections: usize },
    PointedBlock { node: NodeId, parallel: bool, vars: usize, rows: usize },
    NestedBlock { nodes: Vec<NodeId>, vars: usize, rows: usize },
    NodeBounds { node: NodeId },
}

/// `value ≤ bound` (or `value = bound` for exact counts).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub value: u128,
    pub bound: u128,
    pub exact: bool,
    pub pass: bool,
}

impl BoundCheck {
    pub fn at_most(name: impl Into<String>, value: u128, bound: u128) -> Self {
        BoundCheck { name: name.into(), value, bound, exact: false, pass: value <= bound }
    }

    pub fn exact(name: impl Into<String>, value: u128, bound: u128) -> Self {
        BoundCheck { name: name.into(), value, bound, exact: true, pass: value == bound }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub strategy: StrategyKind,
    pub steps: Vec<Step>,
    pub variables: usize,
    pub rows: usize,
    pub equalities: usize,
    pub bound_checks: Vec<BoundCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BuildReport {
    pub fn new(strategy: StrategyKind) -> Self {
        BuildReport {
            strategy,
            steps: Vec::new(),
            variables: 0,
            rows: 0,
            equalities: 0,
            bound_checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn bounds_pass(&self) -> bool {
        self.bound_checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &BoundCheck> {
        self.bound_checks.iter().filter(|c| !c.pass)
    }

    pub fn inflation_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::Inflate { .. })).count()
    }
}
