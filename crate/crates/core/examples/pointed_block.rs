//! Formulations for hypergraphs pointed at a node, parallel and not.

use pbp::formulation::{augment_with_projections, pointed_formulation, Step};
use pbp::hypergraph::{NodeId, SignedHypergraph};
use pbp::verify::verify_hull;

/// `edges` all contain `v`; their projections are added before building.
fn show(label: &str, edges: &[&str], v: &str) {
    let v = NodeId::new(v);
    let h = augment_with_projections(&SignedHypergraph::parse_edges(edges).unwrap(), &v).unwrap();
    let ef = pointed_formulation(&h, &v).unwrap();
    let parallel = ef.report.steps.iter().any(|s| matches!(s, Step::PointedBlock { parallel: true, .. }));
    let report = verify_hull(&h, &ef, 40, 1).unwrap();
    println!(
        "{label}: |S|={} -> {} vars, {} rows, parallel={parallel}, hull {}",
        h.edges().len(),
        ef.variables.len(),
        ef.rows.len(),
        if report.all_pass { "ok" } else { "FAIL" }
    );
    assert!(report.all_pass);
}

pub fn run_example() {
    show("chain", &["v+ a+", "v+ a+ b-", "v+ a+ b- c+"], "v");
    show("both signs of v", &["v+ a+ b+", "v- a+", "v- a-"], "v");
    show("parallel", &["v+ a+ b+", "v+ a- b+", "v+ a+ b-"], "v");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
