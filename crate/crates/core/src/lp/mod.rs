//! Exact rational linear programming.

mod rational;
mod simplex;

pub use rational::{ParseRationalError, Rational};
pub use simplex::{simplex_max, Bound, LinearProgram, LpError, LpOutcome, LpRow, LpSession, LpStatus, Relation};
