//! Exact, polynomial-size extended formulations for pseudo-Boolean
//! polytopes of signed hypergraphs, with a brute-force verifier built on an
//! exact rational simplex.

pub mod acyclicity;
pub mod analysis;
pub mod cli;
pub mod formulation;
pub mod hypergraph;
pub mod instances;
pub mod lp;
pub mod verify;
