//! The nested-chain system on a twelve-edge instance whose constraint
//! matrix is not totally unimodular.

use pbp::formulation::{nested_order, nested_system, Relation};
use pbp::instances::{nested_twelve, nested_twelve_edge};
use pbp::verify::verify_hull;

pub fn run_example() {
    let h = nested_twelve();
    let chain = [nested_twelve_edge(1), nested_twelve_edge(5), nested_twelve_edge(9)];
    let order = nested_order(&chain).unwrap();
    println!("node order: {:?}", order.iter().map(|n| n.as_str()).collect::<Vec<_>>());

    let ef = nested_system(&h).unwrap();
    let eq = ef.rows.iter().filter(|r| r.relation == Relation::Eq).count();
    println!("{} variables, {} rows ({} equalities)", ef.variables.len(), ef.rows.len(), eq);
    for c in &ef.report.bound_checks {
        println!("  {}: {} <= {} {}", c.name, c.value, c.bound, if c.pass { "ok" } else { "FAIL" });
    }
    assert!(ef.is_unit());

    let report = verify_hull(&h, &ef, 100, 7).unwrap();
    println!("{}", report.summary());
    assert!(report.all_pass);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
