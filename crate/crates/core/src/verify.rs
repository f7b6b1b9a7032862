//! Brute-force ground truth over `PBS(H)` and the harness comparing it
//! against exact LP optima over an extended formulation.

use std::collections::BTreeMap;

use log::{debug, warn};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formulation::{lift_binary_point, ExtendedFormulation, VarId};
use crate::hypergraph::{NodeId, SignedEdge, SignedHypergraph};
use crate::lp::{LinearProgram, LpError, LpRow, LpSession, LpStatus, Rational};

pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{nodes} nodes exceed the enumeration limit {limit}")]
    TooLarge { nodes: usize, limit: usize },
    #[error("formulation was built for a different hypergraph")]
    InputMismatch,
    #[error("objective has {got} entries, expected {expected}")]
    ObjectiveLength { got: usize, expected: usize },
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// A binary point of `PBS(H)`: node values and the induced edge products.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbsPoint {
    pub nodes: BTreeMap<NodeId, bool>,
    pub edges: BTreeMap<SignedEdge, bool>,
}

impl PbsPoint {
    /// The unique point with the given node values.
    pub fn from_nodes(h: &SignedHypergraph, nodes: BTreeMap<NodeId, bool>) -> PbsPoint {
        let edges = h.edges().iter().map(|s| (s.clone(), s.evaluate(|v| nodes[v]))).collect();
        PbsPoint { nodes, edges }
    }

    /// Checks coverage of `V ∪ S` and every product equation.
    pub fn check(&self, h: &SignedHypergraph) -> Result<(), String> {
        if self.nodes.keys().ne(h.nodes().iter()) {
            return Err("node values do not match the node set".into());
        }
        if self.edges.keys().ne(h.edges().iter()) {
            return Err("edge values do not match the edge set".into());
        }
        for (s, z) in &self.edges {
            let expected = s.evaluate(|v| self.nodes[v]);
            if *z != expected {
                return Err(format!("z({s}) = {} but the product is {}", *z as u8, expected as u8));
            }
        }
        Ok(())
    }

    /// Values in canonical order: nodes, then edges.
    pub fn values(&self) -> impl Iterator<Item = bool> + '_ {
        self.nodes.values().chain(self.edges.values()).copied()
    }
}

pub fn enumerate_pbs(h: &SignedHypergraph) -> Result<Vec<PbsPoint>, VerifyError> {
    enumerate_pbs_with_limit(h, DEFAULT_ENUMERATION_LIMIT)
}

/// All `2^|V|` points; bit `i` of the counter is the `i`-th node.
pub fn enumerate_pbs_with_limit(h: &SignedHypergraph, limit: usize) -> Result<Vec<PbsPoint>, VerifyError> {
    let n = h.nodes().len();
    if n > limit || n >= 63 {
        return Err(VerifyError::TooLarge { nodes: n, limit });
    }
    Ok((0..1u64 << n)
        .map(|mask| {
            let nodes = h.nodes().iter().enumerate().map(|(i, v)| (v.clone(), mask >> i & 1 == 1)).collect();
            PbsPoint::from_nodes(h, nodes)
        })
        .collect())
}

/// `max c·z` over `PBS(H)`, `c` in canonical order (nodes, then edges).
pub fn brute_max(h: &SignedHypergraph, c: &[Rational]) -> Result<Rational, VerifyError> {
    let expected = h.nodes().len() + h.edges().len();
    if c.len() != expected {
        return Err(VerifyError::ObjectiveLength { got: c.len(), expected });
    }
    let points = enumerate_pbs(h)?;
    Ok(points
        .iter()
        .map(|p| c.iter().zip(p.values()).filter(|(_, z)| *z).map(|(a, _)| a.clone()).sum::<Rational>())
        .max()
        .expect("at least one point"))
}

/// Integer objective in `[-10, 10]` per entry: `next_u64 % 21 - 10` from
/// SplitMix64, nodes first, then edges.
pub fn random_objective(h: &SignedHypergraph, rng: &mut SplitMix64) -> Vec<i64> {
    (0..h.nodes().len() + h.edges().len()).map(|_| (rng.next_u64() % 21) as i64 - 10).collect()
}

/// The formulation as an LP with free variables.
pub fn formulation_lp(ef: &ExtendedFormulation) -> LinearProgram {
    let rows = ef
        .rows
        .iter()
        .map(|r| {
            LpRow::new(r.coeffs.iter().map(|(v, a)| (v.0, Rational::from_integer(*a))).collect(), r.relation, r.rhs)
        })
        .collect();
    LinearProgram { num_vars: ef.variables.len(), rows, bounds: Vec::new() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub nodes: usize,
    pub edges: usize,
    pub rank: usize,
    pub variables: usize,
    pub rows: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trial {
    pub index: usize,
    /// Canonical order: nodes, then edges.
    pub objective: Vec<i64>,
    pub lp_status: LpStatus,
    pub lp_value: Option<Rational>,
    pub brute_value: Rational,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: InstanceSummary,
    pub seed: u64,
    pub trials: usize,
    pub lp_vs_brute: Vec<Trial>,
    pub lift_checked: usize,
    pub lift_failures: Vec<String>,
    pub unit_rows: bool,
    pub failed_bounds: Vec<String>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn first_mismatch(&self) -> Option<&Trial> {
        self.lp_vs_brute.iter().find(|t| !t.equal)
    }

    pub fn summary(&self) -> String {
        let equal = self.lp_vs_brute.iter().filter(|t| t.equal).count();
        let mut out = format!(
            "|V|={} |S|={} vars={} rows={}: {equal}/{} objectives match, {} lifts checked ({} failed), unit rows: {}, bound failures: {} => {}",
            self.instance.nodes,
            self.instance.edges,
            self.instance.variables,
            self.instance.rows,
            self.trials,
            self.lift_checked,
            self.lift_failures.len(),
            self.unit_rows,
            self.failed_bounds.len(),
            if self.all_pass { "PASS" } else { "FAIL" }
        );
        if let Some(t) = self.first_mismatch() {
            let lp = t.lp_value.as_ref().map_or_else(|| format!("{:?}", t.lp_status), Rational::to_string);
            out.push_str(&format!("\n  counterexample objective {:?}: LP {lp}, brute {}", t.objective, t.brute_value));
        }
        out
    }
}

/// Exact hull check of `ef` against `h`: seeded random objectives, lift of
/// every binary point, 0/±1 rows and the recorded size bounds.
pub fn verify_hull(
    h: &SignedHypergraph,
    ef: &ExtendedFormulation,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport, VerifyError> {
    if ef.input != *h {
        return Err(VerifyError::InputMismatch);
    }
    let points = enumerate_pbs(h)?;

    let mut lift_failures = Vec::new();
    let projection = ef.projection();
    for p in &points {
        match lift_binary_point(ef, p) {
            Ok(x) => {
                if let Some(i) = ef.rows.iter().position(|r| !r.is_satisfied(&x)) {
                    lift_failures.push(format!("point {:?} violates row {i}", bits(p)));
                } else if projection.iter().zip(p.values()).any(|(v, z)| x[v.0] != z as i64) {
                    lift_failures.push(format!("point {:?} lifts to a different projection", bits(p)));
                }
            }
            Err(e) => lift_failures.push(e.to_string()),
        }
    }

    let mut rng = SplitMix64::seed_from_u64(seed);
    let lp = formulation_lp(ef);
    let mut session = LpSession::new(&lp)?;
    let mut results = Vec::with_capacity(trials);
    for index in 0..trials {
        let objective = random_objective(h, &mut rng);
        let brute_value = points
            .iter()
            .map(|p| objective.iter().zip(p.values()).filter(|(_, z)| *z).map(|(a, _)| *a).sum::<i64>())
            .max()
            .map(Rational::from_integer)
            .expect("at least one point");
        let (lp_status, lp_value) = match session.as_mut() {
            None => (LpStatus::Infeasible, None),
            Some(s) => {
                let mut c = vec![Rational::zero(); ef.variables.len()];
                for (VarId(v), a) in projection.iter().zip(&objective) {
                    c[*v] = Rational::from_integer(*a);
                }
                let out = s.maximize(&c)?;
                (out.status, out.value)
            }
        };
        let equal = lp_status == LpStatus::Optimal && lp_value.as_ref() == Some(&brute_value);
        if !equal {
            warn!("trial {index}: LP {lp_value:?} ({lp_status:?}) vs brute {brute_value}");
        }
        results.push(Trial { index, objective, lp_status, lp_value, brute_value, equal });
    }
    if let Some(s) = &session {
        debug!("{trials} objectives solved with {} pivots", s.num_pivots());
    }

    let unit_rows = ef.is_unit();
    let failed_bounds: Vec<String> =
        ef.report.failed_checks().map(|c| format!("{}: {} > {}", c.name, c.value, c.bound)).collect();
    let all_pass = results.iter().all(|t| t.equal) && lift_failures.is_empty() && unit_rows && failed_bounds.is_empty();
    Ok(VerificationReport {
        instance: InstanceSummary {
            nodes: h.nodes().len(),
            edges: h.edges().len(),
            rank: h.rank(),
            variables: ef.variables.len(),
            rows: ef.rows.len(),
        },
        seed,
        trials,
        lp_vs_brute: results,
        lift_checked: points.len(),
        lift_failures,
        unit_rows,
        failed_bounds,
        all_pass,
    })
}

fn bits(p: &PbsPoint) -> Vec<u8> {
    p.nodes.values().map(|b| *b as u8).collect()
}
