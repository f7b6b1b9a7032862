use super::{AuxKind, BuildError, ExtendedFormulation, VarRole};
use crate::verify::PbsPoint;

/// Extends a point of `PBS(H)` to every variable of the formulation: each
/// edge-like variable is its signed product, each face copy is
/// `value(of) · z_pivot`.
pub fn lift_binary_point(ef: &ExtendedFormulation, point: &PbsPoint) -> Result<Vec<i64>, BuildError> {
    point.check(&ef.input).map_err(BuildError::NotInPbs)?;
    let value = |n: &crate::hypergraph::NodeId| point.nodes[n];
    let mut out: Vec<i64> = Vec::with_capacity(ef.variables.len());
    for var in &ef.variables {
        let x = match &var.role {
            VarRole::Node(n) => value(n) as i64,
            VarRole::Edge(s) | VarRole::Aux(AuxKind::NestedEdge { edge: s, .. }) => s.evaluate(value) as i64,
            VarRole::Aux(AuxKind::BalasCopy { pivot, of, .. }) => out[of.0] * value(pivot) as i64,
        };
        out.push(x);
    }
    Ok(out)
}
