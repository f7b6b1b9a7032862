// Runs every example so they stay in sync with the library.

#[path = "../examples/acyclicity.rs"]
mod acyclicity;

#[path = "../examples/signed_terms.rs"]
mod signed_terms;

#[path = "../examples/nested_system.rs"]
mod nested_system;

#[path = "../examples/pointed_block.rs"]
mod pointed_block;

#[path = "../examples/inflation.rs"]
mod inflation;

#[path = "../examples/strategies.rs"]
mod strategies;

#[path = "../examples/verification.rs"]
mod verification;

#[path = "../examples/lp_export.rs"]
mod lp_export;

#[path = "../examples/exact_lp.rs"]
mod exact_lp;

#[path = "../examples/named_instances.rs"]
mod named_instances;

#[test]
fn example_acyclicity() {
    acyclicity::run_example();
}

#[test]
fn example_signed_terms() {
    signed_terms::run_example();
}

#[test]
fn example_nested_system() {
    nested_system::run_example();
}

#[test]
fn example_pointed_block() {
    pointed_block::run_example();
}

#[test]
fn example_inflation() {
    inflation::run_example();
}

#[test]
fn example_strategies() {
    strategies::run_example();
}

#[test]
fn example_verification() {
    verification::run_example();
}

#[test]
fn example_lp_export() {
    lp_export::run_example();
}

#[test]
fn example_exact_lp() {
    exact_lp::run_example();
}

#[test]
fn example_named_instances() {
    named_instances::run_example();
}
