//! `{"nodes":["a","b"],"edges":[{"a":1,"b":-1}]}` instance format.

use serde_json::{Map, Value};

use super::{HypergraphError, NodeId, Sign, SignedEdge, SignedHypergraph};

/// Parses the JSON instance format. Errors carry the JSON position or the
/// offending field (`edges[3].b`).
pub fn hypergraph_from_json(text: &str) -> Result<SignedHypergraph, HypergraphError> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| HypergraphError::Input(format!("line {} column {}: {}", e.line(), e.column(), e)))?;
    let obj = root.as_object().ok_or_else(|| input("top level must be an object"))?;
    let nodes =
        obj.get("nodes").and_then(Value::as_array).ok_or_else(|| input("field `nodes` must be an array of strings"))?;
    let mut names = Vec::with_capacity(nodes.len());
    for (i, n) in nodes.iter().enumerate() {
        let name = n.as_str().ok_or_else(|| input(format!("nodes[{i}] must be a string")))?;
        names.push(NodeId::new(name));
    }
    let edges =
        obj.get("edges").and_then(Value::as_array).ok_or_else(|| input("field `edges` must be an array of objects"))?;
    let mut parsed = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let map = e.as_object().ok_or_else(|| input(format!("edges[{i}] must be an object")))?;
        let mut entries = Vec::with_capacity(map.len());
        for (name, sign) in map {
            let sign = sign
                .as_i64()
                .and_then(Sign::from_int)
                .ok_or_else(|| input(format!("edges[{i}].{name}: sign must be 1 or -1, got {sign}")))?;
            entries.push((NodeId::new(name), sign));
        }
        let edge = SignedEdge::new(entries).map_err(|err| input(format!("edges[{i}]: {err}")))?;
        parsed.push(edge);
    }
    SignedHypergraph::new(names, parsed).map_err(|err| match err {
        HypergraphError::DuplicateEdge(e) => {
            let idx = edges_index_of(edges, &e);
            input(format!("edges[{idx}]: duplicate identical signed edge {e}"))
        }
        other => other,
    })
}

fn edges_index_of(raw: &[Value], edge: &SignedEdge) -> usize {
    let mut seen = 0;
    for (i, e) in raw.iter().enumerate() {
        let Some(map) = e.as_object() else { continue };
        let matches = map.len() == edge.len()
            && edge.entries().iter().all(|(n, s)| map.get(n.as_str()).and_then(Value::as_i64) == Some(s.to_int()));
        if matches {
            seen += 1;
            if seen == 2 {
                return i;
            }
        }
    }
    0
}

pub fn hypergraph_to_json(h: &SignedHypergraph) -> String {
    let nodes: Vec<Value> = h.nodes().iter().map(|n| Value::String(n.as_str().to_string())).collect();
    let edges: Vec<Value> = h
        .edges()
        .iter()
        .map(|e| {
            let map: Map<String, Value> =
                e.entries().iter().map(|(n, s)| (n.as_str().to_string(), Value::from(s.to_int()))).collect();
            Value::Object(map)
        })
        .collect();
    let mut root = Map::new();
    root.insert("nodes".into(), Value::Array(nodes));
    root.insert("edges".into(), Value::Array(edges));
    serde_json::to_string(&Value::Object(root)).expect("json values always serialize")
}

fn input(msg: impl Into<String>) -> HypergraphError {
    HypergraphError::Input(msg.into())
}
