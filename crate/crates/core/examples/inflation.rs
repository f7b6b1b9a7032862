//! Inflating an edge to a larger target and linking the copies.

use pbp::formulation::{augment_with_projections, inflate, rid_build, Strategy, StrategyKind};
use pbp::hypergraph::{NodeId, NodeSet, SignedEdge, SignedHypergraph};
use pbp::verify::verify_hull;

pub fn run_example() {
    let h = SignedHypergraph::parse_edges(&["a+ b+", "b+ c-", "a- c+", "a+ b+ c+ d-"]).unwrap();
    let s = SignedEdge::parse("a+ b+").unwrap();
    let target: NodeSet = ["a", "b", "c", "d"].into_iter().map(NodeId::new).collect();

    let inf = inflate(&h, &s, &target).unwrap();
    println!("{s} -> {} members over {{a,b,c,d}}", inf.members.len());
    for (e, c) in inf.link_terms() {
        println!("  {c:+} z[{e}]");
    }
    println!("inflated hypergraph has {} edges", inf.hypergraph.edges().len());

    let aug = augment_with_projections(&h, &NodeId::new("d")).unwrap();
    println!("adding projections at d: {} -> {} edges", h.edges().len(), aug.edges().len());

    let ef = rid_build(&h, &Strategy::new(StrategyKind::InflateFull)).unwrap();
    let report = verify_hull(&h, &ef, 50, 2).unwrap();
    println!("inflate_full: {} vars, {} rows; {}", ef.report.variables, ef.report.rows, report.summary());
    assert!(report.all_pass);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
