//! Every buildable strategy on one small cyclic instance.

use pbp::formulation::{rid_build, Strategy, StrategyKind};
use pbp::hypergraph::SignedHypergraph;
use pbp::verify::verify_hull;

pub fn run_example() {
    let h = SignedHypergraph::parse_edges(&["a+ b+", "b+ c-", "a- c+", "a+ b- c+", "c+ d+"]).unwrap();
    println!("{:<14} {:>5} {:>5}  result", "strategy", "vars", "rows");
    for kind in StrategyKind::BUILDABLE {
        match rid_build(&h, &Strategy::new(kind)) {
            Ok(ef) => {
                let ok = verify_hull(&h, &ef, 30, 9).unwrap().all_pass;
                println!(
                    "{:<14} {:>5} {:>5}  {}",
                    kind.name(),
                    ef.report.variables,
                    ef.report.rows,
                    if ok { "ok" } else { "FAIL" }
                );
                assert!(ok);
                if kind == StrategyKind::Auto {
                    for note in &ef.report.notes {
                        println!("    {note}");
                    }
                }
            }
            Err(e) => println!("{:<14}     -     -  {e}", kind.name()),
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
