//! LP-file and JSON output.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::{ExtendedFormulation, Relation, VarId, VarRole};

/// `x_<node>`, `z_e<hash>` or `aux_<index>`. Node names keep ASCII
/// alphanumerics; any other byte is written as `_xx` hex.
pub fn variable_name(ef: &ExtendedFormulation, var: VarId) -> String {
    match &ef.variables[var.0].role {
        VarRole::Node(n) => {
            let mut out = String::from("x_");
            for b in n.as_str().bytes() {
                if b.is_ascii_alphanumeric() {
                    out.push(b as char);
                } else {
                    let _ = write!(out, "_{b:02x}");
                }
            }
            out
        }
        VarRole::Edge(s) => {
            let digest = Sha256::digest(s.to_string().as_bytes());
            let hex: String = digest[..6].iter().map(|b| format!("{b:02x}")).collect();
            format!("z_e{hex}")
        }
        VarRole::Aux(_) => format!("aux_{}", var.0),
    }
}

fn term(out: &mut String, first: bool, coeff: i64, name: &str) {
    let sign = if coeff < 0 {
        "-"
    } else if first {
        ""
    } else {
        "+"
    };
    let mag = coeff.unsigned_abs();
    let lead = if first { "" } else { " " };
    if mag == 1 {
        let _ = write!(out, "{lead}{sign} {name}");
    } else {
        let _ = write!(out, "{lead}{sign} {mag} {name}");
    }
}

/// Conventional LP text: zero objective, one named row per constraint,
/// every variable free (the bounds are rows of the system).
pub fn to_lp_format(ef: &ExtendedFormulation) -> String {
    let names: Vec<String> = (0..ef.variables.len()).map(|i| variable_name(ef, VarId(i))).collect();
    let mut out = String::new();
    let _ = writeln!(out, "\\ {} variables, {} rows, strategy {}", names.len(), ef.rows.len(), ef.report.strategy);
    for (name, var) in names.iter().zip(&ef.variables) {
        let _ = writeln!(out, "\\ {name}: {}", var.origin);
    }
    out.push_str("Maximize\n obj:");
    match names.first() {
        Some(n) => {
            let _ = writeln!(out, " 0 {n}");
        }
        None => out.push_str(" 0\n"),
    }
    out.push_str("Subject To\n");
    for (i, row) in ef.rows.iter().enumerate() {
        let _ = write!(out, " r{i}: ");
        for (j, (v, a)) in row.coeffs.iter().enumerate() {
            term(&mut out, j == 0, *a, &names[v.0]);
        }
        let rel = match row.relation {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        };
        let _ = writeln!(out, " {rel} {}", row.rhs);
    }
    out.push_str("Bounds\n");
    for n in &names {
        let _ = writeln!(out, " {n} free");
    }
    out.push_str("End\n");
    out
}

pub fn formulation_to_json(ef: &ExtendedFormulation) -> String {
    serde_json::to_string_pretty(ef).expect("formulations always serialize")
}

pub fn formulation_from_json(text: &str) -> Result<ExtendedFormulation, serde_json::Error> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::formulation::{rid_build, Strategy};
    use crate::hypergraph::{NodeId, SignedEdge, SignedHypergraph};

    fn sample() -> ExtendedFormulation {
        let h = SignedHypergraph::new(
            ["a", "b c", "d"],
            vec![
                SignedEdge::new([
                    ("a", crate::hypergraph::Sign::Pos),
                    ("b c", crate::hypergraph::Sign::Neg),
                    ("d", crate::hypergraph::Sign::Pos),
                ])
                .unwrap(),
                SignedEdge::parse("a- d+").unwrap(),
            ],
        )
        .unwrap();
        rid_build(&h, &Strategy::default()).unwrap()
    }

    #[test]
    fn names_are_unique_and_escaped() {
        let ef = sample();
        let names: BTreeSet<String> = (0..ef.variables.len()).map(|i| variable_name(&ef, VarId(i))).collect();
        assert_eq!(names.len(), ef.variables.len());
        assert!(names.contains("x_b_20c"));
        assert_eq!(variable_name(&ef, ef.node_var(&NodeId::new("a")).unwrap()), "x_a");
    }

    #[test]
    fn lp_text_parses() {
        let ef = sample();
        let text = to_lp_format(&ef);
        let parsed = lp_parser_rs::problem::LpProblem::parse(&text).unwrap();
        assert_eq!(parsed.constraint_count(), ef.rows.len());
        assert_eq!(text, to_lp_format(&sample()));
    }

    #[test]
    fn json_round_trip() {
        let ef = sample();
        let back = formulation_from_json(&formulation_to_json(&ef)).unwrap();
        assert_eq!(back, ef);
    }
}
