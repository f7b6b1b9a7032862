use pbp::formulation::{nested_system, pointed_formulation, rid_build, Strategy, StrategyKind};
use pbp::hypergraph::{NodeId, SignedHypergraph};
use pbp::instances::{self, RandomShape};
use pbp::verify::verify_hull;
use rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

fn check(h: &SignedHypergraph, kind: StrategyKind, trials: usize) {
    let ef = rid_build(h, &Strategy::new(kind)).unwrap_or_else(|e| panic!("{kind} on {h}: {e}"));
    let report = verify_hull(h, &ef, trials, 11).unwrap();
    assert!(report.all_pass, "{kind} on {h}:\n{}\n{:?}", report.summary(), report.failed_bounds);
}

#[test]
fn beta_builds_match_brute_force() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(1);
    let shape = RandomShape { max_nodes: 7, max_edges: 10, max_rank: 5 };
    for _ in 0..40 {
        check(&instances::random_beta_acyclic(&mut rng, shape), StrategyKind::Beta, 20);
    }
}

#[test]
fn alpha_builds_match_brute_force() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(2);
    let shape = RandomShape { max_nodes: 6, max_edges: 8, max_rank: 4 };
    for _ in 0..30 {
        check(&instances::random_alpha_acyclic(&mut rng, shape), StrategyKind::Alpha, 20);
    }
}

#[test]
fn auto_handles_arbitrary_small_instances() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(3);
    let shape = RandomShape { max_nodes: 5, max_edges: 6, max_rank: 3 };
    for _ in 0..30 {
        check(&instances::random_signed(&mut rng, shape), StrategyKind::Auto, 20);
    }
}

#[test]
fn chain_strategies_match_brute_force() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(4);
    let shape = RandomShape { max_nodes: 5, max_edges: 5, max_rank: 3 };
    for _ in 0..20 {
        let h = instances::random_signed(&mut rng, shape);
        check(&h, StrategyKind::InflateFull, 15);
        check(&h, StrategyKind::SplitCor4, 15);
    }
}

#[test]
fn nested_and_pointed_match_brute_force() {
    let h = instances::nested_twelve();
    let ef = nested_system(&h).unwrap();
    assert!(verify_hull(&h, &ef, 50, 5).unwrap().all_pass);
    let quad = SignedHypergraph::parse_edges(&["a+ b+", "a- b+", "a+ b-", "a- b-"]).unwrap();
    let ef = nested_system(&quad).unwrap();
    assert!(verify_hull(&quad, &ef, 50, 5).unwrap().all_pass);
    let star = SignedHypergraph::parse_edges(&["a+ b+ v+", "a+ b+"]).unwrap();
    let ef = pointed_formulation(&star, &NodeId::new("v")).unwrap();
    assert!(verify_hull(&star, &ef, 50, 5).unwrap().all_pass);
}
