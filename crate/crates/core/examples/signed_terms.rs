//! Signed edges as products of literals, and the multilinear rewrite.

use std::collections::BTreeMap;

use pbp::acyclicity::is_beta_acyclic;
use pbp::hypergraph::{expand_signed_term, multilinear_hypergraph, to_multilinear_problem, NodeId, SignedEdge};
use pbp::instances::overlapping_pairs;

pub fn run_example() {
    let s = SignedEdge::parse("a+ b- c-").unwrap();
    let poly = expand_signed_term(&s);
    println!("{s} expands to constant {} and {} monomials", poly.constant, poly.monomials.len());
    for bits in 0..8u8 {
        let z = |n: &NodeId| match n.as_str() {
            "a" => bits & 1 != 0,
            "b" => bits & 2 != 0,
            _ => bits & 4 != 0,
        };
        let direct = s.entries().iter().all(|(n, sign)| sign.literal(z(n))) as i64;
        assert_eq!(poly.evaluate(z), direct);
    }

    // β-acyclic as a signed hypergraph, cyclic once expanded.
    let h = overlapping_pairs(5);
    let mh = multilinear_hypergraph(&h);
    println!("H: {} edges, beta-acyclic {}", h.edges().len(), is_beta_acyclic(&h.underlying_hypergraph()));
    println!("mh(H): {} edges, beta-acyclic {}", mh.edges().len(), is_beta_acyclic(&mh));

    let costs: BTreeMap<SignedEdge, i64> = h.edges().iter().map(|e| (e.clone(), 1)).collect();
    let p = to_multilinear_problem(&h, &BTreeMap::new(), &costs);
    println!("multilinear objective: {} monomials, constant {}", p.edge_costs.len(), p.constant);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
