use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{HypergraphError, NodeId, NodeSet};

/// Polarity of a node inside a signed edge: `Pos` contributes `z_v`,
/// `Neg` contributes `1 - z_v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Neg,
    #[serde(rename = "+")]
    Pos,
}

impl Sign {
    pub fn from_int(value: i64) -> Option<Sign> {
        match value {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn to_int(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// The literal `σ(z)` for a binary value.
    pub fn literal(self, value: bool) -> bool {
        match self {
            Sign::Pos => value,
            Sign::Neg => !value,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Pos => '+',
            Sign::Neg => '-',
        }
    }
}

/// A signed node set, stored sorted by node. Two signed edges are equal
/// exactly when they are identical (same nodes, same signs).
///
/// The public model only admits cardinality ≥ 2; [`SignedEdge::minus`]
/// returns a [`Signed`] value that may be a loop.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<(NodeId, Sign)>", into = "Vec<(NodeId, Sign)>")]
pub struct SignedEdge {
    entries: Vec<(NodeId, Sign)>,
}

/// Result of dropping a node from a signed edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Signed {
    Edge(SignedEdge),
    Loop(NodeId, Sign),
}

impl SignedEdge {
    pub fn new<I, N>(entries: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = (N, Sign)>,
        N: Into<NodeId>,
    {
        let mut entries: Vec<(NodeId, Sign)> = entries.into_iter().map(|(n, s)| (n.into(), s)).collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        for pair in entries.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(HypergraphError::RepeatedNode(pair[0].0.clone()));
            }
        }
        if entries.len() < 2 {
            return Err(HypergraphError::EdgeTooSmall(entries.len()));
        }
        Ok(SignedEdge { entries })
    }

    /// All nodes with the same sign.
    pub fn uniform<I, N>(nodes: I, sign: Sign) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = N>,
        N: Into<NodeId>,
    {
        SignedEdge::new(nodes.into_iter().map(|n| (n, sign)))
    }

    /// Parses the compact notation `a+ b- c+` (whitespace or comma separated).
    pub fn parse(text: &str) -> Result<Self, HypergraphError> {
        let mut entries = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (name, sign) = match token.chars().last() {
                Some('+') => (&token[..token.len() - 1], Sign::Pos),
                Some('-') => (&token[..token.len() - 1], Sign::Neg),
                _ => return Err(HypergraphError::BadEdgeLiteral(token.to_string())),
            };
            if name.is_empty() {
                return Err(HypergraphError::BadEdgeLiteral(token.to_string()));
            }
            entries.push((NodeId::new(name), sign));
        }
        SignedEdge::new(entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(NodeId, Sign)] {
        &self.entries
    }

    pub fn nodes(&self) -> impl Iterator<Item = &NodeId> + '_ {
        self.entries.iter().map(|(n, _)| n)
    }

    pub fn underlying(&self) -> NodeSet {
        self.nodes().cloned().collect()
    }

    pub fn contains(&self, node: &NodeId) -> bool {
        self.sign_of(node).is_some()
    }

    pub fn sign_of(&self, node: &NodeId) -> Option<Sign> {
        self.entries.binary_search_by(|(n, _)| n.cmp(node)).ok().map(|i| self.entries[i].1)
    }

    pub fn is_parallel(&self, other: &SignedEdge) -> bool {
        self.entries.len() == other.entries.len() && self.entries.iter().zip(&other.entries).all(|(a, b)| a.0 == b.0)
    }

    /// Underlying-set inclusion.
    pub fn is_subset_of(&self, other: &SignedEdge) -> bool {
        self.nodes().all(|n| other.contains(n))
    }

    pub fn is_subset_of_set(&self, set: &NodeSet) -> bool {
        self.nodes().all(|n| set.contains(n))
    }

    /// `s - v`.
    pub fn minus(&self, node: &NodeId) -> Option<Signed> {
        if !self.contains(node) {
            return None;
        }
        let rest: Vec<(NodeId, Sign)> = self.entries.iter().filter(|(n, _)| n != node).cloned().collect();
        Some(if rest.len() == 1 {
            let (n, s) = rest.into_iter().next().unwrap();
            Signed::Loop(n, s)
        } else {
            Signed::Edge(SignedEdge { entries: rest })
        })
    }

    /// `s + v^sign`; `None` if the node is already present.
    pub fn plus(&self, node: &NodeId, sign: Sign) -> Option<SignedEdge> {
        match self.entries.binary_search_by(|(n, _)| n.cmp(node)) {
            Ok(_) => None,
            Err(at) => {
                let mut entries = self.entries.clone();
                entries.insert(at, (node.clone(), sign));
                Some(SignedEdge { entries })
            }
        }
    }

    /// Copy with the sign of `node` flipped.
    pub fn flipped(&self, node: &NodeId) -> Option<SignedEdge> {
        let i = self.entries.binary_search_by(|(n, _)| n.cmp(node)).ok()?;
        let mut entries = self.entries.clone();
        entries[i].1 = entries[i].1.flip();
        Some(SignedEdge { entries })
    }

    pub fn negative_count(&self) -> usize {
        self.entries.iter().filter(|(_, s)| *s == Sign::Neg).count()
    }

    /// `∏ σ_s(z_v)` under a node assignment.
    pub fn evaluate<F: Fn(&NodeId) -> bool>(&self, value: F) -> bool {
        self.entries.iter().all(|(n, s)| s.literal(value(n)))
    }

    /// All signed edges on `target` that agree with `self` on its nodes,
    /// in canonical order. `target` must strictly contain `self`.
    pub fn sign_extensions(&self, target: &NodeSet) -> Vec<SignedEdge> {
        let extra: Vec<&NodeId> = target.iter().filter(|n| !self.contains(n)).collect();
        let mut out = Vec::with_capacity(1 << extra.len());
        for mask in 0u64..(1u64 << extra.len()) {
            let mut entries = self.entries.clone();
            for (bit, node) in extra.iter().enumerate() {
                let sign = if mask >> bit & 1 == 1 { Sign::Neg } else { Sign::Pos };
                entries.push(((*node).clone(), sign));
            }
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            out.push(SignedEdge { entries });
        }
        out.sort();
        out
    }
}

impl TryFrom<Vec<(NodeId, Sign)>> for SignedEdge {
    type Error = HypergraphError;

    fn try_from(entries: Vec<(NodeId, Sign)>) -> Result<Self, Self::Error> {
        SignedEdge::new(entries)
    }
}

impl From<SignedEdge> for Vec<(NodeId, Sign)> {
    fn from(edge: SignedEdge) -> Self {
        edge.entries
    }
}

impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (n, s)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}{}", n, s.symbol())?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formats a node set as `{a,b,c}`.
pub fn fmt_set(set: &BTreeSet<NodeId>) -> String {
    let names: Vec<&str> = set.iter().map(NodeId::as_str).collect();
    format!("{{{}}}", names.join(","))
}
