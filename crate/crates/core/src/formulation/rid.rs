//! Recursive inflate-and-decompose: inflate edges until a β-leaf appears,
//! peel off the pointed block at that leaf, recurse on the rest.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use log::{debug, info};
use serde::{Deserialize, Serialize};

use super::builder::Builder;
use super::inflate::{inflate_in, projections};
use super::nested::{complete, emit, nested_rows, NVar};
use super::pointed::{block_checks, pointed_block};
use super::{BoundCheck, BuildError, BuildReport, ExtendedFormulation, Step};
use crate::acyclicity::{
    alpha_witness, beta_cycle_support_components, find_beta_leaf, gap, is_beta_acyclic, is_beta_leaf, AcyclicityError,
    DEFAULT_CYCLE_CAP,
};
use crate::hypergraph::{fmt_set, NodeId, NodeSet, SignedEdge, SignedHypergraph};

pub const DEFAULT_GAP_MAX: usize = 12;
pub const DEFAULT_BLOWUP_BUDGET: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyKind {
    Auto,
    Beta,
    Alpha,
    InflateFull,
    GapMaximal,
    GapCycles,
    SplitCor4,
    /// Report label for a bare nested system.
    Nested,
    /// Report label for a single pointed block.
    Pointed,
}

impl StrategyKind {
    pub const BUILDABLE: [StrategyKind; 7] = [
        StrategyKind::Auto,
        StrategyKind::Beta,
        StrategyKind::Alpha,
        StrategyKind::InflateFull,
        StrategyKind::GapMaximal,
        StrategyKind::GapCycles,
        StrategyKind::SplitCor4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Auto => "auto",
            StrategyKind::Beta => "beta",
            StrategyKind::Alpha => "alpha",
            StrategyKind::InflateFull => "inflate_full",
            StrategyKind::GapMaximal => "gap_maximal",
            StrategyKind::GapCycles => "gap_cycles",
            StrategyKind::SplitCor4 => "split_cor4",
            StrategyKind::Nested => "nested",
            StrategyKind::Pointed => "pointed",
        }
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StrategyKind::BUILDABLE.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            let names: Vec<&str> = StrategyKind::BUILDABLE.iter().map(|k| k.name()).collect();
            format!("unknown strategy `{s}` (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strategy {
    pub kind: StrategyKind,
    /// Largest allowed `|target| - |s|` for any inflation.
    pub gap_max: usize,
    /// Cap on `2^k · |S|`.
    pub blowup_budget: u128,
    pub cycle_cap: usize,
    /// Inflate only the largest edge of a component whose β-cycles are all
    /// equivalent.
    pub equivalent_cycles: bool,
    /// Totally ordered inflation targets for `split_cor4`; defaults to
    /// `{U, V}` with `U` the union of the edges too small for `V`.
    pub targets: Option<Vec<NodeSet>>,
}

impl Strategy {
    pub fn new(kind: StrategyKind) -> Self {
        Strategy {
            kind,
            gap_max: DEFAULT_GAP_MAX,
            blowup_budget: DEFAULT_BLOWUP_BUDGET,
            cycle_cap: DEFAULT_CYCLE_CAP,
            equivalent_cycles: false,
            targets: None,
        }
    }

    pub fn validate(&self) -> Result<(), BuildError> {
        let bad = |m: &str| Err(BuildError::BadParameters(m.into()));
        if matches!(self.kind, StrategyKind::Nested | StrategyKind::Pointed) {
            return bad("nested and pointed are construction labels, not strategies");
        }
        if self.gap_max > 63 {
            return bad("gap_max must be at most 63");
        }
        if self.cycle_cap == 0 {
            return bad("cycle_cap must be positive");
        }
        if self.blowup_budget == 0 {
            return bad("blowup_budget must be positive");
        }
        if let Some(t) = &self.targets {
            if self.kind != StrategyKind::SplitCor4 {
                return bad("targets only apply to split_cor4");
            }
            let mut sorted = t.clone();
            sorted.sort_by_key(BTreeSet::len);
            if sorted.iter().any(|e| e.len() < 2) {
                return bad("targets need at least two nodes");
            }
            if sorted.windows(2).any(|w| !w[0].is_subset(&w[1])) {
                return bad("targets must be totally ordered by inclusion");
            }
        }
        Ok(())
    }
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::new(StrategyKind::Auto)
    }
}

fn inapplicable(reason: impl Into<String>) -> BuildError {
    BuildError::StrategyInapplicable(reason.into())
}

fn cap_to_inapplicable(e: AcyclicityError) -> BuildError {
    match e {
        AcyclicityError::CapExceeded { cap } => inapplicable(format!("more than {cap} beta-cycles")),
        other => other.into(),
    }
}

pub fn rid_build(h: &SignedHypergraph, strategy: &Strategy) -> Result<ExtendedFormulation, BuildError> {
    strategy.validate()?;
    info!("building {} formulation for |V|={} |S|={}", strategy.kind, h.nodes().len(), h.edges().len());
    match strategy.kind {
        StrategyKind::Auto => {
            let mut trail = Vec::new();
            let attempt = |kind: StrategyKind, trail: &mut Vec<String>| match rid_build(
                h,
                &Strategy { kind, ..strategy.clone() },
            ) {
                Ok(ef) => {
                    trail.push(format!("auto: {kind} gives {} vars, {} rows", ef.report.variables, ef.report.rows));
                    Ok(Some(ef))
                }
                Err(BuildError::StrategyInapplicable(reason)) => {
                    debug!("auto: {kind} inapplicable: {reason}");
                    trail.push(format!("auto: {kind} inapplicable: {reason}"));
                    Ok(None)
                }
                Err(e) => Err(e),
            };
            // β-acyclic inputs need no inflation; otherwise keep the
            // smallest of the inflating builders.
            let mut best = attempt(StrategyKind::Beta, &mut trail)?;
            if best.is_none() {
                for kind in [StrategyKind::GapCycles, StrategyKind::GapMaximal, StrategyKind::Alpha] {
                    if let Some(ef) = attempt(kind, &mut trail)? {
                        let size = |e: &ExtendedFormulation| e.report.variables + e.report.rows;
                        if best.as_ref().is_none_or(|b| size(&ef) < size(b)) {
                            best = Some(ef);
                        }
                    }
                }
            }
            if best.is_none() {
                best = attempt(StrategyKind::InflateFull, &mut trail)?;
            }
            let Some(mut ef) = best else { return Err(inapplicable(trail.join("; "))) };
            trail.push(format!("auto: chose {}", ef.report.strategy));
            ef.report.notes.splice(0..0, trail);
            Ok(ef)
        }
        StrategyKind::Beta => build_beta(h),
        StrategyKind::GapMaximal => build_gap_maximal(h, strategy),
        StrategyKind::GapCycles => build_gap_cycles(h, strategy),
        StrategyKind::Alpha => build_alpha(h),
        StrategyKind::InflateFull => build_inflate_full(h, strategy),
        StrategyKind::SplitCor4 => build_split(h, strategy),
        StrategyKind::Nested | StrategyKind::Pointed => unreachable!("rejected by validate"),
    }
}

fn pow2(k: usize) -> u128 {
    1u128.checked_shl(k as u32).unwrap_or(u128::MAX)
}

fn acyclic_size_checks(label: &str, h: &SignedHypergraph, vars: usize, rows: usize, extra: usize) -> Vec<BoundCheck> {
    let r = h.rank().max(1) as u128;
    let s = h.edges().len() as u128;
    let v = h.nodes().len() as u128;
    let extra = extra as u128;
    vec![
        BoundCheck::at_most(
            format!("{label}: variables ≤ 2r(2|S|+1)|V|"),
            vars as u128,
            2 * r * (2 * s + 1) * v + extra,
        ),
        BoundCheck::at_most(format!("{label}: rows ≤ 4r(2|S|+1)|V|"), rows as u128, 4 * r * (2 * s + 1) * v + extra),
    ]
}

/// Peels β-leaves until no node is left. Nodes never covered by a block
/// get explicit unit bounds.
fn beta_blocks(
    b: &mut Builder,
    mut cur: SignedHypergraph,
    checks: &mut Vec<BoundCheck>,
    covered: &mut NodeSet,
) -> Result<(), BuildError> {
    while !cur.nodes().is_empty() {
        let g = cur.underlying_hypergraph();
        let v = find_beta_leaf(&g).ok_or_else(|| inapplicable(format!("no beta-leaf in {g}")))?;
        peel(b, &mut cur, &v, checks, covered)?;
    }
    Ok(())
}

/// One decomposition step at the β-leaf `v`.
fn peel(
    b: &mut Builder,
    cur: &mut SignedHypergraph,
    v: &NodeId,
    checks: &mut Vec<BoundCheck>,
    covered: &mut NodeSet,
) -> Result<(), BuildError> {
    let added: Vec<SignedEdge> = projections(cur, v).into_iter().filter(|p| !cur.contains_edge(p)).collect();
    for p in &added {
        cur.insert_edge(p.clone())?;
    }
    b.steps.push(Step::Decompose { node: v.clone(), added_projections: added.len() });
    let star: Vec<SignedEdge> = cur.edges_containing(v).cloned().collect();
    if star.is_empty() {
        if covered.insert(v.clone()) {
            b.unit_bounds(v)?;
            b.steps.push(Step::NodeBounds { node: v.clone() });
        }
    } else {
        let top = star.iter().max_by_key(|s| s.len()).unwrap().underlying();
        let block_edges: BTreeSet<SignedEdge> = star.iter().cloned().chain(projections(cur, v)).collect();
        let h1 = SignedHypergraph::new(top.iter().cloned(), block_edges.into_iter().collect())?;
        let stats = pointed_block(b, &h1, v)?;
        checks.extend(block_checks(v, stats, h1.nodes().len(), h1.edges().len()));
        covered.extend(top);
    }
    *cur = cur.remove_node(v)?;
    Ok(())
}

fn build_beta(h: &SignedHypergraph) -> Result<ExtendedFormulation, BuildError> {
    if !is_beta_acyclic(&h.underlying_hypergraph()) {
        return Err(inapplicable("underlying hypergraph is not beta-acyclic"));
    }
    let mut b = Builder::new(h);
    let mut checks = Vec::new();
    beta_blocks(&mut b, h.clone(), &mut checks, &mut NodeSet::new())?;
    checks.extend(acyclic_size_checks("beta-acyclic", h, b.var_count(), b.row_count(), 0));
    let mut report = BuildReport::new(StrategyKind::Beta);
    report.bound_checks = checks;
    Ok(b.finish(report))
}

/// Inflation plan: edge → target, applied in edge order.
type Plan = BTreeMap<SignedEdge, NodeSet>;

fn plan_gap(plan: &Plan) -> usize {
    plan.iter().map(|(s, t)| t.len() - s.len()).max().unwrap_or(0)
}

fn check_budget(plan: &Plan, h: &SignedHypergraph, strategy: &Strategy) -> Result<usize, BuildError> {
    let k = plan_gap(plan);
    if k > strategy.gap_max {
        return Err(inapplicable(format!("inflation gap {k} exceeds gap_max {}", strategy.gap_max)));
    }
    let blowup = pow2(k).saturating_mul(h.edges().len().max(1) as u128);
    if blowup > strategy.blowup_budget {
        return Err(inapplicable(format!("2^{k}|S| = {blowup} exceeds budget {}", strategy.blowup_budget)));
    }
    Ok(k)
}

fn apply_plan(b: &mut Builder, h: &SignedHypergraph, plan: &Plan) -> Result<SignedHypergraph, BuildError> {
    let mut cur = h.clone();
    for (s, target) in plan {
        cur = inflate_in(b, &cur, s, target)?;
    }
    Ok(cur)
}

/// Inflate-then-β checks: the β bound on the inflated hypergraph plus one
/// link row and one variable per inflated edge, and the stated headline.
fn inflated_beta_checks(
    label: &str,
    inflated: &SignedHypergraph,
    original: &SignedHypergraph,
    links: usize,
    k: usize,
    vars: usize,
    rows: usize,
) -> Vec<BoundCheck> {
    let mut out = acyclic_size_checks(&format!("{label} (inflated hypergraph)"), inflated, vars, rows, links);
    let r = inflated.rank().max(1) as u128;
    let v = original.nodes().len() as u128;
    let s = original.edges().len() as u128;
    let core = 2 * r * v * (pow2(k + 1) * s + 1);
    out.push(BoundCheck::at_most(format!("{label}: variables ≤ 2r|V|(2^(k+1)|S|+1)+|S|"), vars as u128, core + s));
    out.push(BoundCheck::at_most(format!("{label}: rows ≤ 4r|V|(2^(k+1)|S|+1)+|S|"), rows as u128, 2 * core + s));
    out
}

fn build_gap_maximal(h: &SignedHypergraph, strategy: &Strategy) -> Result<ExtendedFormulation, BuildError> {
    let maximal: BTreeSet<NodeSet> = {
        let all: BTreeSet<NodeSet> = h.edges().iter().map(SignedEdge::underlying).collect();
        all.iter().filter(|e| !all.iter().any(|f| f.len() > e.len() && e.is_subset(f))).cloned().collect()
    };
    let mut plan = Plan::new();
    for s in h.edges() {
        let u = s.underlying();
        if maximal.contains(&u) {
            continue;
        }
        let f = maximal
            .iter()
            .filter(|m| u.is_subset(m))
            .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .expect("every edge lies in a maximal edge");
        plan.insert(s.clone(), f.clone());
    }
    let skeleton = crate::hypergraph::Hypergraph::new(h.nodes().iter().cloned(), maximal.into_iter().collect())?;
    if !is_beta_acyclic(&skeleton) {
        return Err(inapplicable("maximal edges contain a beta-cycle"));
    }
    let k = check_budget(&plan, h, strategy)?;
    let mut b = Builder::new(h);
    let inflated = apply_plan(&mut b, h, &plan)?;
    let mut checks = Vec::new();
    beta_blocks(&mut b, inflated.clone(), &mut checks, &mut NodeSet::new())?;
    checks.extend(inflated_beta_checks("maximal-edge gaps", &inflated, h, plan.len(), k, b.var_count(), b.row_count()));
    let mut report = BuildReport::new(StrategyKind::GapMaximal);
    report.bound_checks = checks;
    report.notes.push(format!("inflated {} edges, gap k = {k}", plan.len()));
    Ok(b.finish(report))
}

fn build_gap_cycles(h: &SignedHypergraph, strategy: &Strategy) -> Result<ExtendedFormulation, BuildError> {
    let g = h.underlying_hypergraph();
    let comps = beta_cycle_support_components(&g, strategy.cycle_cap).map_err(cap_to_inapplicable)?;
    let mut notes = Vec::new();
    let full_plan = |comps: &[crate::acyclicity::CycleComponent], refine: bool, notes: &mut Vec<String>| {
        let mut plan = Plan::new();
        for c in comps {
            let report = gap(&c.edges).expect("components have edges");
            let equivalent = c.cycles.iter().all(|x| x.is_equivalent(&c.cycles[0]));
            if refine && equivalent {
                let f = c.edges.iter().max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a))).expect("nonempty");
                notes.push(format!(
                    "component {}: all cycles equivalent, inflating {} only",
                    fmt_set(&c.nodes),
                    fmt_set(f)
                ));
                for s in h.edges().iter().filter(|s| s.underlying() == *f && f.len() < c.nodes.len()) {
                    plan.insert(s.clone(), c.nodes.clone());
                }
            } else {
                notes.push(format!("component {}: gap {}", fmt_set(&c.nodes), report.gap));
                for s in h.edges().iter().filter(|s| s.is_subset_of_set(&c.nodes) && s.len() < c.nodes.len()) {
                    plan.insert(s.clone(), c.nodes.clone());
                }
            }
        }
        plan
    };
    let inflated_hypergraph = |plan: &Plan| -> Result<SignedHypergraph, BuildError> {
        let mut cur = h.clone();
        for (s, t) in plan {
            cur = super::inflate(&cur, s, t)?.hypergraph;
        }
        Ok(cur)
    };
    let mut plan = full_plan(&comps, strategy.equivalent_cycles, &mut notes);
    if strategy.equivalent_cycles && !is_beta_acyclic(&inflated_hypergraph(&plan)?.underlying_hypergraph()) {
        notes.push("refined inflation left a beta-cycle; inflating whole components".into());
        plan = full_plan(&comps, false, &mut notes);
    }
    if !is_beta_acyclic(&inflated_hypergraph(&plan)?.underlying_hypergraph()) {
        return Err(inapplicable("component inflation left a beta-cycle"));
    }
    let k = check_budget(&plan, h, strategy)?;
    let mut b = Builder::new(h);
    let inflated = apply_plan(&mut b, h, &plan)?;
    let mut checks = Vec::new();
    beta_blocks(&mut b, inflated.clone(), &mut checks, &mut NodeSet::new())?;
    checks.extend(inflated_beta_checks(
        "cycle-component gaps",
        &inflated,
        h,
        plan.len(),
        k,
        b.var_count(),
        b.row_count(),
    ));
    let mut report = BuildReport::new(StrategyKind::GapCycles);
    report.bound_checks = checks;
    report.notes = notes;
    Ok(b.finish(report))
}

/// Blow-up of making `v` a β-leaf by inflating its edges to the witness.
fn alpha_cost(h: &SignedHypergraph, v: &NodeId, witness: &NodeSet) -> u128 {
    h.edges_containing(v)
        .filter(|s| s.len() < witness.len())
        .map(|s| pow2(witness.len() - s.len()))
        .fold(0u128, u128::saturating_add)
}

fn build_alpha(h: &SignedHypergraph) -> Result<ExtendedFormulation, BuildError> {
    let mut b = Builder::new(h);
    let mut cur = h.clone();
    let mut checks = Vec::new();
    let mut covered = NodeSet::new();
    let mut inflations = 0;
    while !cur.nodes().is_empty() {
        let g = cur.underlying_hypergraph();
        let mut best: Option<(u128, NodeId, Option<NodeSet>)> = None;
        for v in g.nodes() {
            let Some(witness) = alpha_witness(&g, v) else { continue };
            let cost = match &witness {
                Some(w) if !is_beta_leaf(&g, v) => alpha_cost(&cur, v, w),
                _ => 0,
            };
            if best.as_ref().is_none_or(|(c, _, _)| cost < *c) {
                best = Some((cost, v.clone(), witness));
            }
        }
        let (cost, v, witness) = best.ok_or_else(|| inapplicable("underlying hypergraph is not alpha-acyclic"))?;
        if cost > 0 {
            let w = witness.expect("positive cost needs a witness");
            let small: Vec<SignedEdge> = cur.edges_containing(&v).filter(|s| s.len() < w.len()).cloned().collect();
            for s in small {
                cur = inflate_in(&mut b, &cur, &s, &w)?;
                inflations += 1;
            }
        }
        peel(&mut b, &mut cur, &v, &mut checks, &mut covered)?;
    }
    let r = h.rank().max(2) as u128;
    let v = h.nodes().len() as u128;
    let base = 2 * 3u128.pow(r as u32 - 1);
    let var_bound = (base + (r - 2) * (pow2(r as usize) + 1)) * v;
    let row_bound = (base + 2 * (r - 1) * (pow2(r as usize) + 1)) * v;
    checks.push(BoundCheck::at_most(
        "alpha-acyclic: variables ≤ (2·3^(r-1)+(r-2)(2^r+1))|V|",
        b.var_count() as u128,
        var_bound,
    ));
    checks.push(BoundCheck::at_most(
        "alpha-acyclic: rows ≤ (2·3^(r-1)+2(r-1)(2^r+1))|V|",
        b.row_count() as u128,
        row_bound,
    ));
    let mut report = BuildReport::new(StrategyKind::Alpha);
    report.bound_checks = checks;
    report.notes.push(format!("{inflations} inflations"));
    Ok(b.finish(report))
}

/// Inflates every edge to the smallest target containing it, then writes
/// one nested system for the resulting chain.
fn build_chain(
    h: &SignedHypergraph,
    strategy: &Strategy,
    targets: &[NodeSet],
    kind: StrategyKind,
) -> Result<ExtendedFormulation, BuildError> {
    let mut sorted: Vec<NodeSet> = targets.to_vec();
    sorted.sort_by_key(BTreeSet::len);
    sorted.dedup();
    let mut plan = Plan::new();
    for s in h.edges() {
        let t = sorted
            .iter()
            .find(|t| s.is_subset_of_set(t))
            .ok_or_else(|| inapplicable(format!("no target contains {s}")))?;
        if t.len() > s.len() {
            plan.insert(s.clone(), t.clone());
        }
    }
    let k = check_budget(&plan, h, strategy)?;
    let mut b = Builder::new(h);
    let inflated = apply_plan(&mut b, h, &plan)?;
    let links = plan.len();
    let mut covered = NodeSet::new();
    let mut report = BuildReport::new(kind);
    if !inflated.edges().is_empty() {
        let block = b.next_block();
        let chain: Vec<SignedEdge> = inflated.edges().iter().cloned().collect();
        let nested = complete(&chain, false)?;
        let rows = nested_rows(&nested, &|e| inflated.contains_edge(e))?;
        let start = b.row_count();
        emit(&mut b, &rows, |b, x| match x {
            NVar::Node(n) => b.node(n),
            NVar::Edge(e) if inflated.contains_edge(e) => b.edge(e),
            NVar::Edge(e) => b.nested_aux(block, e),
        })?;
        let vars = super::builder::distinct_vars(b.rows_since(start));
        b.steps.push(Step::NestedBlock { nodes: nested.order.clone(), vars, rows: b.row_count() - start });
        covered = nested.nodes();
        let s = inflated.edges().len() as u128;
        let n = covered.len() as u128;
        report.bound_checks.push(BoundCheck::at_most(
            "nested chain: variables ≤ 2|S'|(|V|-1)+|V|",
            vars as u128,
            2 * s * (n - 1) + n,
        ));
        report.bound_checks.push(BoundCheck::at_most(
            "nested chain: rows ≤ 4|S'|(|V|-1)+2|V|",
            (b.row_count() - start) as u128,
            4 * s * (n - 1) + 2 * n,
        ));
    }
    for v in h.nodes() {
        if !covered.contains(v) {
            b.unit_bounds(v)?;
            b.steps.push(Step::NodeBounds { node: v.clone() });
        }
    }
    let s = h.edges().len() as u128;
    let v = h.nodes().len() as u128;
    report.bound_checks.push(BoundCheck::at_most(
        "chain inflation: variables ≤ 2^(k+1)|S|(|V|-1)+|V|+|S|",
        b.var_count() as u128,
        pow2(k + 1) * s * (v.max(1) - 1) + v + s,
    ));
    report.bound_checks.push(BoundCheck::at_most(
        "chain inflation: rows ≤ 2^(k+2)|S|(|V|-1)+2|V|+|S|",
        b.row_count() as u128,
        pow2(k + 2) * s * (v.max(1) - 1) + 2 * v + s,
    ));
    report.notes.push(format!("{links} inflations, k = {k}"));
    Ok(b.finish(report))
}

fn build_inflate_full(h: &SignedHypergraph, strategy: &Strategy) -> Result<ExtendedFormulation, BuildError> {
    build_chain(h, strategy, &[h.nodes().clone()], StrategyKind::InflateFull)
}

fn build_split(h: &SignedHypergraph, strategy: &Strategy) -> Result<ExtendedFormulation, BuildError> {
    let targets = match &strategy.targets {
        Some(t) => t.clone(),
        None => {
            let n = h.nodes().len();
            let small: NodeSet =
                h.edges().iter().filter(|s| s.len() + strategy.gap_max < n).flat_map(|s| s.nodes().cloned()).collect();
            if small.len() >= 2 && small.len() < n {
                vec![small, h.nodes().clone()]
            } else {
                vec![h.nodes().clone()]
            }
        }
    };
    build_chain(h, strategy, &targets, StrategyKind::SplitCor4)
}
