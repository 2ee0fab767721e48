//! Finite simple graphs with canonical vertex labels and adjacency bitsets.

use std::collections::BTreeMap;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::bits::BitSet;
use crate::error::FamilyError;

/// Where a graph came from: constructing family, its parameters, and the
/// sampling seed when one was used. Carried into DIMACS sidecar files so a
/// run can be reproduced bit-for-bit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub seed: Option<u64>,
}

impl Provenance {
    pub fn new(family: &str) -> Self {
        Provenance {
            family: family.to_string(),
            parameters: BTreeMap::new(),
            seed: None,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// A finite simple graph. Vertices are `0..n` in the canonical order fixed by
/// the constructing operation; `labels[v]` is the human-readable descriptor.
///
/// Adjacency is symmetric and loop-free by construction. Two graphs compare
/// equal when their labels and adjacency agree; provenance is not part of
/// equality.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<BitSet>,
    provenance: Provenance,
}

impl Graph {
    /// Creates an edgeless graph on the given labels. Labels must be pairwise
    /// distinct.
    pub fn new(labels: Vec<String>, provenance: Provenance) -> Result<Self, FamilyError> {
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(FamilyError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![BitSet::new(n); n],
            provenance,
        })
    }

    pub fn from_edges(
        labels: Vec<String>,
        edges: &[(usize, usize)],
        provenance: Provenance,
    ) -> Result<Self, FamilyError> {
        let mut g = Graph::new(labels, provenance)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts the undirected edge `{u, v}`. Loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), FamilyError> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(FamilyError::VertexOutOfRange {
                vertex: u.max(v),
                n,
            });
        }
        if u == v {
            return Err(FamilyError::LoopEdge(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Neighborhood of `v` as a bitset over the canonical vertex order.
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, ascending lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph({} [{}], n={}, m={})",
            self.provenance.family,
            self.provenance
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(","),
            self.vertex_count(),
            self.edge_count()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn edges_are_symmetric_and_loopless() {
        let mut g = Graph::new(labels(4), Provenance::new("test")).unwrap();
        g.add_edge(0, 2).unwrap();
        g.add_edge(3, 1).unwrap();
        assert!(g.adjacent(2, 0) && g.adjacent(0, 2));
        assert!(g.adjacent(1, 3));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges(), vec![(0, 2), (1, 3)]);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 4).is_err());
    }

    #[test]
    fn duplicate_labels_rejected() {
        let err = Graph::new(vec!["a".into(), "a".into()], Provenance::new("test"));
        assert!(err.is_err());
    }

    #[test]
    fn equality_ignores_provenance() {
        let g = Graph::from_edges(labels(2), &[(0, 1)], Provenance::new("a")).unwrap();
        let h = Graph::from_edges(labels(2), &[(0, 1)], Provenance::new("b")).unwrap();
        assert_eq!(g, h);
    }
}
