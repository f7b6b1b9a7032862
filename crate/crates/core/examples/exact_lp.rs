//! The exact rational simplex, one-shot and with a warm-started session.

use pbp::lp::{simplex_max, Bound, LinearProgram, LpRow, LpSession, Rational, Relation};

fn r(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn run_example() {
    // max x + y  s.t.  3x + 2y <= 7, x - y <= 1/2, 0 <= x, y <= 2
    let lp = LinearProgram {
        num_vars: 2,
        rows: vec![
            LpRow::new(vec![(0, r(3)), (1, r(2))], Relation::Le, 7),
            LpRow::new(vec![(0, r(1)), (1, r(-1))], Relation::Le, Rational::new(1, 2)),
        ],
        bounds: vec![Bound::between(0, 2), Bound::between(0, 2)],
    };
    let out = simplex_max(&lp, &[r(1), r(1)]).unwrap();
    println!("{:?} value {} at {:?}", out.status, out.value.as_ref().unwrap(), out.witness.as_ref().unwrap());
    assert_eq!(out.value, Some(r(3)));

    let mut session = LpSession::new(&lp).unwrap().expect("feasible");
    for c in [[1, 0], [0, 1], [-1, -1], [2, 1]] {
        let out = session.maximize(&[r(c[0]), r(c[1])]).unwrap();
        println!("c = {c:?}: {}", out.value.unwrap());
    }
    println!("{} pivots in total", session.num_pivots());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
