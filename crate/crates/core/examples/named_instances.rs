//! The three bundled instances, each with the strategy suited to it.

use pbp::analysis::analyze;
use pbp::formulation::{rid_build, Strategy, StrategyKind};
use pbp::hypergraph::SignedHypergraph;
use pbp::instances::{overlapping_pairs, two_components, LongCycle};
use pbp::verify::verify_hull;

fn run(name: &str, h: SignedHypergraph, kind: StrategyKind) {
    let a = analyze(&h, 10_000).unwrap();
    let ef = rid_build(&h, &Strategy::new(kind)).unwrap();
    let report = verify_hull(&h, &ef, 20, 0).unwrap();
    println!(
        "{name}: |V|={} |S|={} beta={} alpha={} -> {kind}: {} vars, {} rows, {}",
        a.nodes,
        a.edges,
        a.beta_acyclic,
        a.alpha_acyclic,
        ef.report.variables,
        ef.report.rows,
        if report.all_pass { "ok" } else { "FAIL" }
    );
    for step in ef.report.steps.iter().filter(|s| matches!(s, pbp::formulation::Step::Inflate { .. })) {
        println!("    {}", serde_json::to_string(step).unwrap());
    }
    assert!(report.all_pass);
}

pub fn run_example() {
    run("long cycle", LongCycle::new(4).signed(), StrategyKind::GapMaximal);
    run("two components", two_components(12), StrategyKind::GapCycles);
    run("overlapping pairs", overlapping_pairs(5), StrategyKind::Beta);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
