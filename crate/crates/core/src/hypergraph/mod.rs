//! Signed hypergraphs and the elementary operations on them.

mod edge;
mod expansion;
mod json;
mod node;
mod plain;
mod signed;

use std::collections::BTreeSet;

use thiserror::Error;

pub use edge::{fmt_set, Sign, Signed, SignedEdge};
pub use expansion::{
    expand_signed_term, multilinear_hypergraph, to_multilinear_problem, MultilinearProblem, SignedTermExpansion,
};
pub use json::{hypergraph_from_json, hypergraph_to_json};
pub use node::NodeId;
pub use plain::Hypergraph;
pub use signed::SignedHypergraph;

pub type NodeSet = BTreeSet<NodeId>;

#[derive(Debug, Error)]
pub enum HypergraphError {
    #[error("signed edge needs at least two nodes, got {0}")]
    EdgeTooSmall(usize),
    #[error("node {0} appears twice in one edge")]
    RepeatedNode(NodeId),
    #[error("edge references unknown node {0}")]
    UnknownNode(NodeId),
    #[error("duplicate identical signed edge {0}")]
    DuplicateEdge(SignedEdge),
    #[error("cannot parse signed edge literal `{0}`")]
    BadEdgeLiteral(String),
    #[error("invalid input: {0}")]
    Input(String),
}
