//! LP text and JSON output of a built formulation.

use pbp::formulation::{formulation_from_json, formulation_to_json, rid_build, to_lp_format, Strategy};
use pbp::hypergraph::{hypergraph_from_json, hypergraph_to_json};

pub fn run_example() {
    let text = r#"{"nodes":["x","y","z"],"edges":[{"x":1,"y":-1},{"y":1,"z":1},{"x":1,"y":1,"z":-1}]}"#;
    let h = hypergraph_from_json(text).unwrap();
    assert_eq!(hypergraph_from_json(&hypergraph_to_json(&h)).unwrap(), h);

    let ef = rid_build(&h, &Strategy::default()).unwrap();
    let lp = to_lp_format(&ef);
    println!("{lp}");

    let json = formulation_to_json(&ef);
    let back = formulation_from_json(&json).unwrap();
    assert_eq!(back, ef);
    println!("json: {} bytes, round trip ok", json.len());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
