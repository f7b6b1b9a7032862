//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use pbp::acyclicity::{enumerate_beta_cycles, gap, is_beta_acyclic, AcyclicityError};
use pbp::formulation::{
    nested_system, pointed_formulation, rid_build, ExtendedFormulation, LinRow, Relation, Strategy, StrategyKind,
    VarRole,
};
use pbp::hypergraph::{NodeId, SignedEdge, SignedHypergraph};
use pbp::instances::{self, LongCycle, RandomShape};
use pbp::lp::{simplex_max, Bound, LinearProgram, LpRow, LpStatus, Rational};
use pbp::verify::{verify_hull, VerificationReport};
use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

const TRIALS: usize = 50;

/// Counters shared by the size-bound, unit-row and lift criteria.
#[derive(Default)]
struct Ledger {
    builds: usize,
    bound_checks: usize,
    bound_failures: Vec<String>,
    rows: usize,
    non_unit_rows: usize,
    lifts: usize,
    lift_failures: Vec<String>,
}

impl Ledger {
    fn record(&mut self, label: &str, ef: &ExtendedFormulation) {
        self.builds += 1;
        self.bound_checks += ef.report.bound_checks.len();
        for c in ef.report.failed_checks() {
            self.bound_failures.push(format!("{label}: {} ({} > {})", c.name, c.value, c.bound));
        }
        self.rows += ef.rows.len();
        self.non_unit_rows += ef.rows.iter().filter(|r| !r.is_unit()).count();
    }

    fn record_report(&mut self, label: &str, r: &VerificationReport) {
        self.lifts += r.lift_checked;
        self.lift_failures.extend(r.lift_failures.iter().map(|f| format!("{label}: {f}")));
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn build_and_verify(
    ledger: &mut Ledger,
    label: &str,
    h: &SignedHypergraph,
    kind: StrategyKind,
) -> Result<VerificationReport, String> {
    let ef = rid_build(h, &Strategy::new(kind)).map_err(|e| format!("{label}: {e}"))?;
    ledger.record(label, &ef);
    let report = verify_hull(h, &ef, TRIALS, 7).map_err(|e| format!("{label}: {e}"))?;
    ledger.record_report(label, &report);
    Ok(report)
}

fn random_family(ledger: &mut Ledger, seed: u64, count: usize, max_rank: usize, kind: StrategyKind) -> Outcome {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let shape = RandomShape { max_nodes: 8, max_edges: 12, max_rank };
    let mut failures = Vec::new();
    let mut cyclic = 0;
    for i in 0..count {
        let h = match kind {
            StrategyKind::Alpha => instances::random_alpha_acyclic(&mut rng, shape),
            _ => instances::random_beta_acyclic(&mut rng, shape),
        };
        if !is_beta_acyclic(&h.underlying_hypergraph()) {
            cyclic += 1;
        }
        match build_and_verify(ledger, &format!("{kind} #{i}"), &h, kind) {
            Ok(r) if r.all_pass => {}
            Ok(r) => failures.push(format!("#{i} {h}: {}", r.summary())),
            Err(e) => failures.push(e),
        }
    }
    let mut detail = format!("{} of {count} instances pass with {TRIALS} objectives each", count - failures.len());
    if kind == StrategyKind::Alpha {
        detail.push_str(&format!(", {cyclic} of them not beta-acyclic"));
    }
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first failure {f}"));
    }
    outcome(failures.is_empty(), detail)
}

fn named_instances(ledger: &mut Ledger) -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    let lc = LongCycle::new(4);
    let n = lc.e.len();
    let gaps = |side: &[BTreeSet<NodeId>]| -> Vec<usize> {
        (0..n).map(|i| gap([&side[i], &lc.e[i]]).expect("nonempty").gap).collect()
    };
    let expected: Vec<usize> = (0..n).map(|i| if i == 0 || i == n - 1 { 1 } else { 2 }).collect();
    let (fg, gg) = (gaps(&lc.f), gaps(&lc.g));
    pass &= fg == expected && gg == expected;
    notes.push(format!("long cycle gaps f {fg:?} g {gg:?}"));
    for (label, h, kind) in [
        ("long cycle n=4", lc.signed(), StrategyKind::GapMaximal),
        ("two components n=12", instances::two_components(12), StrategyKind::GapCycles),
        ("overlapping pairs n=5", instances::overlapping_pairs(5), StrategyKind::Beta),
    ] {
        match build_and_verify(ledger, label, &h, kind) {
            Ok(r) => {
                pass &= r.all_pass;
                notes.push(format!("{label} via {kind}: {}", if r.all_pass { "pass" } else { "FAIL" }));
            }
            Err(e) => {
                pass = false;
                notes.push(e);
            }
        }
    }
    outcome(pass, notes.join("; "))
}

fn size_bounds(ledger: &mut Ledger) -> Outcome {
    // pointed blocks on their own
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(40);
    let mut pointed = 0;
    while pointed < 100 {
        let width = 3 + (rng.next_u64() % 4) as usize;
        let nodes: Vec<NodeId> = (1..=width).map(|i| NodeId::new(format!("v{i}"))).collect();
        let v = nodes[width - 1].clone();
        let mut edges = BTreeSet::new();
        let count = 1 + rng.next_u64() % 5;
        let mut last_size = width;
        for j in 0..count {
            let size = if j == 0 { width } else { 2 + (rng.next_u64() as usize) % (last_size - 1) };
            last_size = size;
            let mut members: Vec<NodeId> = nodes[width - size..].to_vec();
            members.sort();
            let s = SignedEdge::new(members.into_iter().map(|n| {
                (n, if rng.next_u64() & 1 == 0 { pbp::hypergraph::Sign::Pos } else { pbp::hypergraph::Sign::Neg })
            }))
            .unwrap();
            edges.insert(s);
        }
        let mut all: BTreeSet<SignedEdge> = edges.clone();
        for s in &edges {
            if let Some(pbp::hypergraph::Signed::Edge(p)) = s.minus(&v) {
                all.insert(p);
            }
        }
        let h = SignedHypergraph::new(nodes, all.into_iter().collect()).unwrap();
        let Ok(ef) = pointed_formulation(&h, &v) else { continue };
        ledger.record(&format!("pointed #{pointed}"), &ef);
        pointed += 1;
    }
    // every strategy on small random instances
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(41);
    let shape = RandomShape { max_nodes: 7, max_edges: 9, max_rank: 4 };
    let mut strategy_builds = 0;
    for i in 0..60 {
        let h = instances::random_signed(&mut rng, shape);
        for kind in StrategyKind::BUILDABLE {
            if let Ok(ef) = rid_build(&h, &Strategy::new(kind)) {
                ledger.record(&format!("{kind} on random #{i}"), &ef);
                strategy_builds += 1;
            }
        }
    }
    outcome(
        ledger.bound_failures.is_empty(),
        format!(
            "{} bound checks over {} builds ({pointed} pointed blocks, {strategy_builds} strategy builds), {} violations{}",
            ledger.bound_checks,
            ledger.builds,
            ledger.bound_failures.len(),
            ledger.bound_failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c].clone();
        for r in c + 1..n {
            let f = m[r][c].clone() / m[c][c].clone();
            for k in c..n {
                let t = m[c][k].clone() * f.clone();
                m[r][k] -= t;
            }
        }
    }
    d
}

fn non_tu_witness() -> Outcome {
    let h = instances::nested_twelve();
    let ef = nested_system(&h).expect("nested");
    let s = |i: usize| ef.edge_var(&instances::nested_twelve_edge(i)).expect("edge var");
    let node = |n: &str| ef.node_var(&NodeId::new(n)).expect("node var");
    let wanted: Vec<Vec<(usize, i64)>> = vec![
        vec![(s(5).0, 1), (s(6).0, 1), (s(1).0, -1)],
        vec![(s(9).0, 1), (s(10).0, 1), (s(6).0, -1)],
        vec![(s(11).0, 1), (s(12).0, 1), (s(8).0, -1)],
        vec![(s(5).0, 1), (s(8).0, 1), (node("v3").0, -1)],
        vec![(s(9).0, 1), (s(11).0, 1), (node("v4").0, -1)],
    ];
    let normalized = |r: &LinRow| -> BTreeSet<(usize, i64)> { r.coeffs.iter().map(|(v, a)| (v.0, *a)).collect() };
    let found: Vec<Option<&LinRow>> = wanted
        .iter()
        .map(|w| {
            let w: BTreeSet<(usize, i64)> = w.iter().copied().collect();
            let neg: BTreeSet<(usize, i64)> = w.iter().map(|(v, a)| (*v, -a)).collect();
            ef.rows.iter().find(|r| normalized(r) == w || normalized(r) == neg)
        })
        .collect();
    if found.iter().any(Option::is_none) {
        return outcome(false, "the five listed rows are not all present");
    }
    let cols = [s(5), s(6), s(8), s(9), s(11)];
    let m: Vec<Vec<BigRational>> = found
        .iter()
        .map(|r| {
            let r = r.unwrap();
            cols.iter()
                .map(|c| {
                    let a = r.coeffs.iter().find(|(v, _)| v == c).map_or(0, |(_, a)| *a);
                    BigRational::from_integer(BigInt::from(a))
                })
                .collect()
        })
        .collect();
    let d = det(m);
    outcome(
        d.abs() == BigRational::from_integer(BigInt::from(2)),
        format!("determinant {d} on columns s5 s6 s8 s9 s11"),
    )
}

fn lift_soundness(ledger: &Ledger) -> Outcome {
    outcome(
        ledger.lift_failures.is_empty(),
        format!(
            "{} binary points lifted, {} infeasible{}",
            ledger.lifts,
            ledger.lift_failures.len(),
            ledger.lift_failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

/// Independent oracle: every basis of the box-bounded system solved with
/// big rationals; the best feasible vertex is the optimum.
fn vertex_max(lp: &LinearProgram, c: &[BigRational]) -> Option<BigRational> {
    let n = lp.num_vars;
    let big = |r: &Rational| r.to_big();
    let mut planes: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for row in &lp.rows {
        let mut a = vec![BigRational::zero(); n];
        for (j, v) in &row.coeffs {
            a[*j] += big(v);
        }
        planes.push((a, big(&row.rhs)));
    }
    for (j, b) in lp.bounds.iter().enumerate() {
        for bound in [&b.lo, &b.hi].into_iter().flatten() {
            let mut a = vec![BigRational::zero(); n];
            a[j] = BigRational::one();
            planes.push((a, big(bound)));
        }
    }
    let feasible =
        |x: &[BigRational]| {
            lp.rows.iter().all(|r| {
                let lhs: BigRational = r.coeffs.iter().map(|(j, v)| big(v) * x[*j].clone()).sum();
                let rhs = big(&r.rhs);
                match r.relation {
                    Relation::Le => lhs <= rhs,
                    Relation::Ge => lhs >= rhs,
                    Relation::Eq => lhs == rhs,
                }
            }) && lp.bounds.iter().enumerate().all(|(j, b)| {
                b.lo.as_ref().is_none_or(|l| x[j] >= big(l)) && b.hi.as_ref().is_none_or(|h| x[j] <= big(h))
            })
        };
    let mut best: Option<BigRational> = None;
    let m = planes.len();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let mut a: Vec<Vec<BigRational>> =
            idx.iter().map(|&i| planes[i].0.iter().cloned().chain([planes[i].1.clone()]).collect()).collect();
        let mut ok = true;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                ok = false;
                break;
            };
            a.swap(p, col);
            let inv = BigRational::one() / a[col][col].clone();
            for k in col..=n {
                a[col][k] = a[col][k].clone() * inv.clone();
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for k in col..=n {
                        let t = a[col][k].clone() * f.clone();
                        a[r][k] -= t;
                    }
                }
            }
        }
        if ok {
            let x: Vec<BigRational> = a.iter().map(|row| row[n].clone()).collect();
            if feasible(&x) {
                let val: BigRational = c.iter().zip(&x).map(|(ci, xi)| ci.clone() * xi.clone()).sum();
                if best.as_ref().is_none_or(|b| val > *b) {
                    best = Some(val);
                }
            }
        }
        // next n-subset of 0..m
        let mut i = n;
        while i > 0 && idx[i - 1] == m - n + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return best;
        }
        idx[i - 1] += 1;
        for k in i..n {
            idx[k] = idx[k - 1] + 1;
        }
    }
}

fn exact_lp() -> Outcome {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(80);
    let mut pick = |k: u64| (rng.next_u64() % k) as i64;
    let mut mismatches = Vec::new();
    let (mut optimal, mut infeasible) = (0, 0);
    for t in 0..100 {
        let n = 1 + pick(5) as usize;
        let m = pick(9) as usize;
        let rows = (0..m)
            .map(|_| {
                let coeffs =
                    (0..n).map(|j| (j, Rational::from_integer(pick(3) - 1))).filter(|(_, a)| !a.is_zero()).collect();
                let rel = [Relation::Le, Relation::Le, Relation::Le, Relation::Ge, Relation::Eq][pick(5) as usize];
                LpRow::new(coeffs, rel, Rational::from_integer(pick(4) - 1))
            })
            .collect();
        let bounds = (0..n)
            .map(|_| Bound::between(Rational::from_integer(-pick(3)), Rational::from_integer(1 + pick(3))))
            .collect();
        let lp = LinearProgram { num_vars: n, rows, bounds };
        let c: Vec<Rational> = (0..n).map(|_| Rational::new(pick(7) - 3, 1 + pick(3))).collect();
        let got = simplex_max(&lp, &c).expect("well-formed");
        let want = vertex_max(&lp, &c.iter().map(Rational::to_big).collect::<Vec<_>>());
        let same = match (&got.status, &want) {
            (LpStatus::Optimal, Some(w)) => got.value.as_ref().map(Rational::to_big).as_ref() == Some(w),
            (LpStatus::Infeasible, None) => true,
            _ => false,
        };
        match got.status {
            LpStatus::Optimal => optimal += 1,
            _ => infeasible += 1,
        }
        if !same {
            mismatches.push(format!("LP #{t}: simplex {:?} {:?}, vertices {want:?}", got.status, got.value));
        }
    }
    outcome(
        mismatches.is_empty(),
        format!(
            "100 random LPs ({optimal} optimal, {infeasible} infeasible), {} mismatches{}",
            mismatches.len(),
            mismatches.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum RowClass {
    Recursion,
    Nonnegativity,
    UpperChain,
    LowerChain,
    Base,
}

fn classify(ef: &ExtendedFormulation, r: &LinRow) -> RowClass {
    let nodes: Vec<i64> =
        r.coeffs.iter().filter(|(v, _)| matches!(ef.variables[v.0].role, VarRole::Node(_))).map(|(_, a)| *a).collect();
    match (r.relation, nodes.as_slice(), r.coeffs.len()) {
        (Relation::Eq, [], _) => RowClass::Recursion,
        (Relation::Eq, _, _) => RowClass::Base,
        (_, [], 1) => RowClass::Nonnegativity,
        (_, [-1], _) if r.rhs == 0 => RowClass::UpperChain,
        (_, [1], _) if r.rhs == 1 => RowClass::LowerChain,
        _ => panic!("unexpected nested row {r:?}"),
    }
}

fn mutation() -> Outcome {
    let suite = [
        instances::nested_twelve(),
        SignedHypergraph::parse_edges(&["a+ b+", "a- b+", "a+ b-", "a- b-", "a+ b+ c+", "a+ b+ c-"]).unwrap(),
        SignedHypergraph::parse_edges(&[
            "a+ b+",
            "a- b+",
            "a+ b-",
            "a- b-",
            "a+ b- c-",
            "a+ b- c+",
            "a+ b- c- d+",
            "a+ b- c- d-",
        ])
        .unwrap(),
    ];
    let classes =
        [RowClass::Recursion, RowClass::Nonnegativity, RowClass::UpperChain, RowClass::LowerChain, RowClass::Base];
    let mut caught = Vec::new();
    let mut intact = true;
    for class in classes {
        let mut hit = false;
        for h in &suite {
            let ef = nested_system(h).expect("nested");
            intact &= verify_hull(h, &ef, TRIALS, 9).map(|r| r.all_pass).unwrap_or(false);
            let broken = ef.without_rows(|r| classify(&ef, r) == class);
            if broken.rows.len() == ef.rows.len() {
                continue;
            }
            let report = verify_hull(h, &broken, TRIALS, 9).expect("enumerable");
            if !report.all_pass {
                hit = true;
                break;
            }
        }
        caught.push((class, hit));
    }
    let pass = intact && caught.iter().all(|(_, hit)| *hit);
    let detail: Vec<String> =
        caught.iter().map(|(c, hit)| format!("{c:?} {}", if *hit { "caught" } else { "MISSED" })).collect();
    outcome(pass, format!("intact systems pass: {intact}; dropped classes: {}", detail.join(", ")))
}

fn acyclicity_cross_check() -> Outcome {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(100);
    let shape = RandomShape { max_nodes: 8, max_edges: 10, max_rank: 5 };
    let mut disagreements = Vec::new();
    let mut acyclic = 0;
    for i in 0..300 {
        let g = instances::random_signed(&mut rng, shape).underlying_hypergraph();
        let by_elimination = is_beta_acyclic(&g);
        let no_cycles = match enumerate_beta_cycles(&g, 1) {
            Ok(c) => c.is_empty(),
            Err(AcyclicityError::CapExceeded { .. }) => false,
            Err(e) => panic!("{e}"),
        };
        acyclic += by_elimination as usize;
        if by_elimination != no_cycles {
            disagreements.push(format!("#{i} {g}"));
        }
    }
    outcome(
        disagreements.is_empty(),
        format!("300 random hypergraphs ({acyclic} beta-acyclic), {} disagreements", disagreements.len()),
    )
}

fn main() -> ExitCode {
    let mut ledger = Ledger::default();
    let started = Instant::now();
    let mut lines: Vec<(usize, &str, Outcome)> = Vec::new();
    let mut run = |n: usize, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        println!(
            "criterion {n:>2} {}: {name}: {} [{:.1}s]",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
        lines.push((n, name, o));
    };
    run(1, "hull equality on random beta-acyclic instances", &mut || {
        random_family(&mut ledger, 1, 200, 5, StrategyKind::Beta)
    });
    run(2, "hull equality on random alpha-acyclic instances", &mut || {
        random_family(&mut ledger, 2, 100, 4, StrategyKind::Alpha)
    });
    run(3, "worked examples end to end", &mut || named_instances(&mut ledger));
    run(4, "size bounds", &mut || size_bounds(&mut ledger));
    run(5, "0/±1 rows", &mut || {
        outcome(
            ledger.non_unit_rows == 0,
            format!("{} rows over {} builds, {} outside 0/±1", ledger.rows, ledger.builds, ledger.non_unit_rows),
        )
    });
    run(6, "non-TU witness in the nested system", &mut non_tu_witness);
    run(7, "lift soundness", &mut || lift_soundness(&ledger));
    run(8, "exact LP against vertex enumeration", &mut exact_lp);
    run(9, "mutation sensitivity", &mut mutation);
    run(10, "beta-acyclicity cross-validation", &mut acyclicity_cross_check);
    let failed = lines.iter().filter(|(_, _, o)| !o.pass).count();
    println!(
        "acceptance: {}/{} criteria pass in {:.1}s",
        lines.len() - failed,
        lines.len(),
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
