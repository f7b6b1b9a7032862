//! Brute-force hull check, and what it reports when a row goes missing.

use pbp::formulation::{rid_build, Strategy};
use pbp::instances::{random_beta_acyclic, RandomShape};
use pbp::verify::{enumerate_pbs, verify_hull};
use rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

pub fn run_example() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(42);
    let h = random_beta_acyclic(&mut rng, RandomShape { max_nodes: 6, max_edges: 8, max_rank: 4 });
    println!("instance: {h}");
    println!("{} binary points", enumerate_pbs(&h).unwrap().len());

    let ef = rid_build(&h, &Strategy::default()).unwrap();
    let report = verify_hull(&h, &ef, 50, 0).unwrap();
    println!("{}", report.summary());
    assert!(report.all_pass);

    // drop every inequality: the LP becomes unbounded or too large
    let broken = ef.without_rows(|r| r.rhs == 0 && r.relation != pbp::formulation::Relation::Eq);
    let report = verify_hull(&h, &broken, 50, 0).unwrap();
    println!("without homogeneous inequalities: {}", if report.all_pass { "pass" } else { "caught" });
    if let Some(t) = report.first_mismatch() {
        println!("  objective {:?}: {:?} vs brute {}", t.objective, t.lp_status, t.brute_value);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
