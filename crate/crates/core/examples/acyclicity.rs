//! Leaf elimination, β-cycles and gaps on the long-cycle family.

use pbp::acyclicity::{
    alpha_elimination_order, beta_cycle_support_components, beta_elimination_order, enumerate_beta_cycles, gap,
    DEFAULT_CYCLE_CAP,
};
use pbp::analysis::analyze;
use pbp::hypergraph::fmt_set;
use pbp::instances::LongCycle;

pub fn run_example() {
    let lc = LongCycle::new(4);
    let g = lc.hypergraph();
    println!("{} nodes, {} edges, rank {}", g.nodes().len(), g.edges().len(), g.rank());

    let beta = beta_elimination_order(&g);
    let alpha = alpha_elimination_order(&g);
    println!("beta-acyclic: {} (eliminated {} of {})", beta.complete, beta.order.len(), g.nodes().len());
    println!("alpha-acyclic: {}", alpha.complete);
    assert!(!beta.complete && alpha.complete);
    assert!(alpha.replay(&g));

    let cycles = enumerate_beta_cycles(&g, DEFAULT_CYCLE_CAP).unwrap();
    let longest = cycles.iter().max_by_key(|c| c.len()).unwrap();
    println!("{} beta-cycles, longest has length {}", cycles.len(), longest.len());

    for comp in beta_cycle_support_components(&g, DEFAULT_CYCLE_CAP).unwrap() {
        println!(
            "component {} with {} edges, gap {}",
            fmt_set(&comp.nodes),
            comp.edges.len(),
            gap(&comp.edges).unwrap().gap
        );
    }
    for i in 0..4 {
        println!("gap(f{}, e{}) = {}", i + 1, i + 1, gap([&lc.f[i], &lc.e[i]]).unwrap().gap);
    }

    let summary = analyze(&lc.signed(), DEFAULT_CYCLE_CAP).unwrap();
    println!("{}", serde_json::to_string_pretty(&summary.maximal_gaps).unwrap());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
