use std::collections::BTreeSet;

use pbp::formulation::{
    formulation_from_json, formulation_to_json, inflation_members, lift_binary_point, rid_build, variable_name,
    Strategy as Build, StrategyKind, VarId,
};
use pbp::hypergraph::{expand_signed_term, NodeId, NodeSet, SignedEdge, SignedHypergraph};
use pbp::instances::{random_beta_acyclic, random_signed, RandomShape};
use pbp::verify::enumerate_pbs;
use proptest::prelude::*;
use rand_core::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

const SHAPE: RandomShape = RandomShape { max_nodes: 5, max_edges: 6, max_rank: 3 };

fn instance(seed: u64) -> SignedHypergraph {
    random_signed(&mut Xoshiro256PlusPlus::seed_from_u64(seed), SHAPE)
}

fn kind() -> impl Strategy<Value = StrategyKind> {
    prop::sample::select(StrategyKind::BUILDABLE.to_vec())
}

fn value(e: &SignedEdge, z: &impl Fn(&NodeId) -> bool) -> bool {
    e.entries().iter().all(|(n, s)| s.literal(z(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn builds_are_deterministic(seed in any::<u64>(), kind in kind()) {
        let h = instance(seed);
        let a = rid_build(&h, &Build::new(kind));
        let b = rid_build(&h, &Build::new(kind));
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            _ => prop_assert!(false, "one build failed, the other did not"),
        }
    }

    #[test]
    fn built_formulations_are_unit_bounded_and_lift(seed in any::<u64>(), kind in kind()) {
        let h = instance(seed);
        let Ok(ef) = rid_build(&h, &Build::new(kind)) else { return Ok(()) };
        prop_assert!(ef.is_unit());
        prop_assert!(ef.report.bounds_pass(), "{:?}", ef.report.bound_checks);
        prop_assert_eq!(ef.report.rows, ef.rows.len());
        prop_assert_eq!(ef.report.variables, ef.variables.len());
        for p in enumerate_pbs(&h).unwrap() {
            let x = lift_binary_point(&ef, &p).unwrap();
            prop_assert!(ef.rows.iter().all(|r| r.is_satisfied(&x)));
        }
    }

    #[test]
    fn auto_always_builds(seed in any::<u64>()) {
        let h = instance(seed);
        prop_assert!(rid_build(&h, &Build::default()).is_ok());
    }

    #[test]
    fn beta_acyclic_inputs_accept_beta(seed in any::<u64>()) {
        let h = random_beta_acyclic(&mut Xoshiro256PlusPlus::seed_from_u64(seed), SHAPE);
        prop_assert!(rid_build(&h, &Build::new(StrategyKind::Beta)).is_ok());
    }

    #[test]
    fn json_round_trip_and_unique_names(seed in any::<u64>()) {
        let h = instance(seed);
        let ef = rid_build(&h, &Build::default()).unwrap();
        prop_assert_eq!(formulation_from_json(&formulation_to_json(&ef)).unwrap(), ef.clone());
        let names: BTreeSet<String> = (0..ef.variables.len()).map(|i| variable_name(&ef, VarId(i))).collect();
        prop_assert_eq!(names.len(), ef.variables.len());
    }

    #[test]
    fn inflation_splits_the_product(signs in prop::collection::vec(any::<bool>(), 2..4), extra in 1usize..3, bits in any::<u16>()) {
        let s = SignedEdge::new(signs.iter().enumerate().map(|(i, &p)| {
            (NodeId::new(format!("n{i}")), if p { pbp::hypergraph::Sign::Pos } else { pbp::hypergraph::Sign::Neg })
        })).unwrap();
        let target: NodeSet = (0..signs.len() + extra).map(|i| NodeId::new(format!("n{i}"))).collect();
        let members = inflation_members(&s, &target).unwrap();
        prop_assert_eq!(members.len(), 1 << extra);
        let z = |n: &NodeId| {
            let i: usize = n.as_str()[1..].parse().unwrap();
            bits >> i & 1 == 1
        };
        let covered = members.iter().filter(|m| value(m, &z)).count();
        prop_assert_eq!(covered, value(&s, &z) as usize);
    }

    #[test]
    fn expansion_matches_product(signs in prop::collection::vec(any::<bool>(), 2..6), bits in any::<u8>()) {
        let s = SignedEdge::new(signs.iter().enumerate().map(|(i, &p)| {
            (NodeId::new(format!("n{i}")), if p { pbp::hypergraph::Sign::Pos } else { pbp::hypergraph::Sign::Neg })
        })).unwrap();
        let z = |n: &NodeId| {
            let i: usize = n.as_str()[1..].parse().unwrap();
            bits >> i & 1 == 1
        };
        prop_assert_eq!(expand_signed_term(&s).evaluate(z), value(&s, &z) as i64);
    }
}
