//! Named instances and random generators used by the examples, tests and
//! the `demo` command.

use rand_core::Rng;

use crate::acyclicity::{is_alpha_acyclic, is_beta_acyclic};
use crate::hypergraph::{Hypergraph, NodeId, NodeSet, Sign, SignedEdge, SignedHypergraph};

fn v(i: usize) -> NodeId {
    NodeId::new(format!("v{i}"))
}

fn set(ids: impl IntoIterator<Item = usize>) -> NodeSet {
    ids.into_iter().map(v).collect()
}

fn positive(g: &Hypergraph) -> SignedHypergraph {
    let edges = g
        .edges()
        .iter()
        .map(|e| SignedEdge::uniform(e.iter().cloned(), Sign::Pos).expect("edges have two or more nodes"))
        .collect();
    SignedHypergraph::new(g.nodes().iter().cloned(), edges).expect("valid hypergraph")
}

/// The long β-cycle family on `2n` nodes: `e_i`, `f_i`, `g_i`.
#[derive(Clone, Debug)]
pub struct LongCycle {
    pub e: Vec<NodeSet>,
    pub f: Vec<NodeSet>,
    pub g: Vec<NodeSet>,
}

impl LongCycle {
    pub fn new(n: usize) -> LongCycle {
        assert!(n >= 3, "needs n >= 3");
        let mut e = vec![set([1, 2, 3])];
        e.extend((2..n).map(|i| set([2 * i - 2, 2 * i - 1, 2 * i, 2 * i + 1])));
        e.push(set([2 * n - 2, 2 * n - 1, 2 * n]));
        let mut f = vec![set([1, 2])];
        f.extend((2..=n).map(|i| set([2 * i - 2, 2 * i])));
        let mut g: Vec<NodeSet> = (1..n).map(|i| set([2 * i - 1, 2 * i + 1])).collect();
        g.push(set([2 * n - 1, 2 * n]));
        LongCycle { e, f, g }
    }

    pub fn hypergraph(&self) -> Hypergraph {
        let n = self.e.len();
        let edges = self.e.iter().chain(&self.f).chain(&self.g).cloned().collect();
        Hypergraph::new((1..=2 * n).map(v), edges).expect("valid hypergraph")
    }

    pub fn signed(&self) -> SignedHypergraph {
        positive(&self.hypergraph())
    }
}

/// Two β-cycle components under one spanning edge, `n >= 12` nodes.
pub fn two_components(n: usize) -> SignedHypergraph {
    assert!(n >= 12, "needs n >= 12");
    let mut edges = vec![(1..=n).collect::<Vec<_>>()];
    for e in [
        vec![1, 2],
        vec![2, 3],
        vec![4, 5],
        vec![5, 6],
        vec![4, 7],
        vec![6, 7],
        vec![4, 5, 6],
        vec![8, 9],
        vec![9, 10],
        vec![8, 10],
        vec![9, 11, 12],
        vec![10, 11, 12],
    ] {
        edges.push(e);
    }
    let g = Hypergraph::new((1..=n).map(v), edges.into_iter().map(set).collect()).expect("valid hypergraph");
    positive(&g)
}

/// Four signed edges on two overlapping sets of size `n - 1`; the
/// underlying hypergraph is β-acyclic while the multilinear one is not.
pub fn overlapping_pairs(n: usize) -> SignedHypergraph {
    assert!(n >= 4, "needs n >= 4");
    let signed = |nodes: std::ops::RangeInclusive<usize>, negative: usize| {
        SignedEdge::new(nodes.map(|i| (v(i), if i == negative { Sign::Neg } else { Sign::Pos }))).expect("valid edge")
    };
    let edges = vec![signed(1..=n - 1, n - 1), signed(1..=n - 1, 2), signed(2..=n, n - 1), signed(2..=n, 2)];
    SignedHypergraph::new((1..=n).map(v), edges).expect("valid hypergraph")
}

const NESTED_TWELVE: [&str; 12] = [
    "v1+ v2+",
    "v1- v2+",
    "v1+ v2-",
    "v1- v2-",
    "v1+ v2+ v3+",
    "v1+ v2+ v3-",
    "v1- v2+ v3-",
    "v1- v2+ v3+",
    "v1+ v2+ v3- v4+",
    "v1+ v2+ v3- v4-",
    "v1- v2+ v3+ v4+",
    "v1- v2+ v3+ v4-",
];

/// A nested signed hypergraph on four nodes with twelve edges whose
/// constraint matrix is not totally unimodular.
pub fn nested_twelve() -> SignedHypergraph {
    SignedHypergraph::parse_edges(&NESTED_TWELVE).expect("valid hypergraph")
}

/// Edge `s_i` (1-based) of [`nested_twelve`].
pub fn nested_twelve_edge(i: usize) -> SignedEdge {
    SignedEdge::parse(NESTED_TWELVE[i - 1]).expect("valid literal")
}

fn below<R: Rng>(rng: &mut R, n: usize) -> usize {
    (rng.next_u64() % n as u64) as usize
}

fn random_edge<R: Rng>(rng: &mut R, nodes: usize, min: usize, max: usize) -> NodeSet {
    let size = min + below(rng, max - min + 1);
    let mut ids: Vec<usize> = (1..=nodes).collect();
    for i in 0..size {
        let j = i + below(rng, nodes - i);
        ids.swap(i, j);
    }
    set(ids[..size].iter().copied())
}

fn random_signs<R: Rng>(rng: &mut R, e: &NodeSet) -> SignedEdge {
    SignedEdge::new(e.iter().map(|n| (n.clone(), if rng.next_u64() & 1 == 0 { Sign::Pos } else { Sign::Neg })))
        .expect("edge has two or more nodes")
}

/// Shape limits for the random generators.
#[derive(Clone, Copy, Debug)]
pub struct RandomShape {
    pub max_nodes: usize,
    pub max_edges: usize,
    pub max_rank: usize,
}

/// Random signed hypergraph whose underlying hypergraph passes `keep`:
/// candidate edges are added one at a time and kept only if the
/// hypergraph still passes. Some edges reuse an existing support with
/// fresh signs.
fn grow<R: Rng>(rng: &mut R, shape: RandomShape, spanning: bool, keep: fn(&Hypergraph) -> bool) -> SignedHypergraph {
    let nodes = 2 + below(rng, shape.max_nodes - 1);
    let rank = shape.max_rank.min(nodes);
    let target = 1 + below(rng, shape.max_edges);
    let mut supports: Vec<NodeSet> = Vec::new();
    let mut edges: Vec<SignedEdge> = Vec::new();
    if spanning && rank >= 3 {
        let e = random_edge(rng, nodes, rank, rank);
        edges.push(random_signs(rng, &e));
        supports.push(e);
    }
    let mut attempts = 0;
    while edges.len() < target && attempts < 20 * shape.max_edges {
        attempts += 1;
        let reuse = !supports.is_empty() && below(rng, 4) == 0;
        let e = if reuse { supports[below(rng, supports.len())].clone() } else { random_edge(rng, nodes, 2, rank) };
        let s = random_signs(rng, &e);
        if edges.contains(&s) {
            continue;
        }
        if !supports.contains(&e) {
            let mut trial = supports.clone();
            trial.push(e.clone());
            let g = Hypergraph::new((1..=nodes).map(v), trial).expect("valid hypergraph");
            if !keep(&g) {
                continue;
            }
            supports.push(e);
        }
        edges.push(s);
    }
    SignedHypergraph::new((1..=nodes).map(v), edges).expect("valid hypergraph")
}

pub fn random_beta_acyclic<R: Rng>(rng: &mut R, shape: RandomShape) -> SignedHypergraph {
    grow(rng, shape, false, is_beta_acyclic)
}

/// Random α-acyclic instance; half of them start from a spanning edge of
/// full rank, which lets β-cycles appear underneath it.
pub fn random_alpha_acyclic<R: Rng>(rng: &mut R, shape: RandomShape) -> SignedHypergraph {
    let spanning = rng.next_u64() & 1 == 0;
    grow(rng, shape, spanning, is_alpha_acyclic)
}

/// Random signed hypergraph with no acyclicity requirement.
pub fn random_signed<R: Rng>(rng: &mut R, shape: RandomShape) -> SignedHypergraph {
    grow(rng, shape, false, |_| true)
}
