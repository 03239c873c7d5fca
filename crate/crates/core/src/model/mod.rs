//! Hypergraph and graph data types, structural transforms, instance
//! generators, and the text/JSON serialization formats.
//!
//! Vertices are dense integer ids `0..n`; display labels are optional and
//! presentation-only. The hyperedge list is a multiset: duplicate hyperedges
//! are preserved everywhere and never merged implicitly (use
//! [`Hypergraph::dedup_edges`] explicitly when you want a set).
//!
//! All types are immutable after construction and safe to share across
//! threads.

mod generators;
mod io;
mod transforms;

pub use generators::{gen_latin_square_hypergraph, gen_random_hypergraph, gen_star_hypergraph};
pub use io::{parse_graph, parse_hypergraph, serialize_graph, serialize_hypergraph, ParseError};
pub use transforms::{
    closed_neighborhood_hypergraph, dual, incidence_graph, open_neighborhood_hypergraph,
    remove_vertices, triangle_gluing, weak_induced, Reindexed,
};

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("vertex id {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("parallel edge {u} {v}")]
    ParallelEdge { u: usize, v: usize },
    #[error("edge {u} {v} does not cross the bipartition")]
    EdgeInsidePart { u: usize, v: usize },
    #[error("bipartition has {got} labels, expected {expected}")]
    PartLength { got: usize, expected: usize },
    #[error("label list has {got} entries, expected {expected}")]
    LabelsLength { got: usize, expected: usize },
    #[error("generator parameter out of range: {0}")]
    BadParameter(String),
}

/// Side of a bipartition. Incidence graphs put original hypergraph vertices
/// in [`Side::Left`] and hyperedges in [`Side::Right`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Serialize for Side {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(match self {
            Side::Left => 0,
            Side::Right => 1,
        })
    }
}

impl<'de> Deserialize<'de> for Side {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(Side::Left),
            1 => Ok(Side::Right),
            other => Err(serde::de::Error::custom(format!(
                "bipartition label must be 0 or 1, got {other}"
            ))),
        }
    }
}

/// A set of vertex ids. Canonical serialization is the sorted id list.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    /// Ids in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.difference(&other.0).copied().collect())
    }

    /// `{0, .., n-1}` minus this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        (0..n).filter(|v| !self.contains(*v)).collect()
    }

    /// Errors if any member is `>= n`.
    pub fn check_within(&self, n: usize) -> Result<(), ModelError> {
        match self.0.iter().next_back() {
            Some(&v) if v >= n => Err(ModelError::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl std::fmt::Display for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", ids.join(", "))
    }
}

#[derive(Deserialize)]
struct RawHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl TryFrom<RawHypergraph> for Hypergraph {
    type Error = ModelError;
    fn try_from(raw: RawHypergraph) -> Result<Self, ModelError> {
        let h = Hypergraph::new(raw.n, raw.edges)?;
        match raw.labels {
            Some(labels) => h.with_labels(labels),
            None => Ok(h),
        }
    }
}

/// A hypergraph: `n` vertices with ids `0..n` and an ordered multiset of
/// hyperedges, each stored as a strictly increasing list of vertex ids.
///
/// Singleton edges are permitted; empty edges are not. Isolated vertices
/// (vertices in no edge) are permitted — they can never burn by propagation,
/// so every burning set must contain them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHypergraph")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl Hypergraph {
    /// Builds a hypergraph, sorting each edge. Rejects empty edges, repeated
    /// vertices inside an edge, and out-of-range ids. Duplicate edges are
    /// kept (the edge list is a multiset).
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, ModelError> {
        let mut edges = edges;
        for (j, e) in edges.iter_mut().enumerate() {
            if e.is_empty() {
                return Err(ModelError::EmptyEdge { edge: j });
            }
            e.sort_unstable();
            for w in e.windows(2) {
                if w[0] == w[1] {
                    return Err(ModelError::RepeatedVertex { edge: j, vertex: w[0] });
                }
            }
            let &last = e.last().expect("nonempty");
            if last >= n {
                return Err(ModelError::VertexOutOfRange { vertex: last, n });
            }
        }
        Ok(Hypergraph { n, edges, labels: None })
    }

    /// Attaches display labels (one per vertex). Labels never affect any
    /// computation.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, ModelError> {
        if labels.len() != self.n {
            return Err(ModelError::LabelsLength { got: labels.len(), expected: self.n });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, j: usize) -> &[usize] {
        &self.edges[j]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Vertex degrees (number of incident edges, counting multiplicity).
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// For each vertex, the increasing list of incident edge indices.
    pub fn incidence_lists(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (j, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(j);
            }
        }
        inc
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 0)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).min()
    }

    pub fn max_edge_size(&self) -> Option<usize> {
        self.edges.iter().map(Vec::len).max()
    }

    /// λ̄: the maximum number of vertices shared by two distinct hyperedges
    /// (edge-list positions, so duplicate edges intersect in their full
    /// size). Zero when there are fewer than two edges.
    pub fn max_edge_overlap(&self) -> usize {
        let m = self.edges.len();
        let mut best = 0;
        for i in 0..m {
            for j in (i + 1)..m {
                best = best.max(sorted_intersection_size(&self.edges[i], &self.edges[j]));
            }
        }
        best
    }

    /// λ: the maximum number of hyperedges containing any fixed pair of
    /// distinct vertices. Zero when no pair co-occurs.
    pub fn max_pair_multiplicity(&self) -> usize {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in &self.edges {
            for a in 0..e.len() {
                for b in (a + 1)..e.len() {
                    *counts.entry((e[a], e[b])).or_insert(0) += 1;
                }
            }
        }
        counts.values().copied().max().unwrap_or(0)
    }

    /// A hypergraph is linear when any two edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.max_edge_overlap() <= 1
    }

    /// Removes duplicate hyperedges, keeping the first occurrence of each.
    /// Never applied implicitly anywhere in this crate.
    pub fn dedup_edges(&self) -> Hypergraph {
        let mut seen: BTreeSet<&[usize]> = BTreeSet::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            if seen.insert(e.as_slice()) {
                edges.push(e.clone());
            }
        }
        Hypergraph { n: self.n, edges, labels: self.labels.clone() }
    }

    /// The same hypergraph with all singleton edges dropped. This is the
    /// instance the original burning model (no spontaneous burning) actually
    /// plays on.
    pub fn drop_singleton_edges(&self) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: self.edges.iter().filter(|e| e.len() > 1).cloned().collect(),
            labels: self.labels.clone(),
        }
    }
}

fn sorted_intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                k += 1;
                i += 1;
                j += 1;
            }
        }
    }
    k
}

#[derive(Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    part: Option<Vec<Side>>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = ModelError;
    fn try_from(raw: RawGraph) -> Result<Self, ModelError> {
        match raw.part {
            Some(part) => Graph::with_bipartition(raw.n, &raw.edges, part),
            None => Graph::new(raw.n, &raw.edges),
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let fields = if self.part.is_some() { 3 } else { 2 };
        let mut st = s.serialize_struct("Graph", fields)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &self.edge_list())?;
        if let Some(part) = &self.part {
            st.serialize_field("part", part)?;
        }
        st.end()
    }
}

/// A simple undirected graph with an optional bipartition marking.
///
/// When `part` is present, every edge joins the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
    part: Option<Vec<Side>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, parallel edges
    /// and out-of-range ids. Edge orientation does not matter.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, ModelError> {
        let mut adj = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(ModelError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(ModelError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(ModelError::SelfLoop { vertex: u });
            }
            if !adj[u].insert(v) {
                return Err(ModelError::ParallelEdge { u: u.min(v), v: u.max(v) });
            }
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, part: None })
    }

    /// Builds a graph and validates that every edge crosses the given
    /// two-coloring.
    pub fn with_bipartition(
        n: usize,
        edges: &[(usize, usize)],
        part: Vec<Side>,
    ) -> Result<Self, ModelError> {
        if part.len() != n {
            return Err(ModelError::PartLength { got: part.len(), expected: n });
        }
        let g = Graph::new(n, edges)?;
        for &(u, v) in edges {
            if part[u] == part[v] {
                return Err(ModelError::EdgeInsidePart { u, v });
            }
        }
        Ok(Graph { part: Some(part), ..g })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn part(&self) -> Option<&[Side]> {
        self.part.as_deref()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in self.adj[u].range((u + 1)..) {
                out.push((u, v));
            }
        }
        out
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    #[test]
    fn hypergraph_sorts_and_validates() {
        let h = Hypergraph::new(5, vec![vec![2, 0, 1], vec![3]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1, 2], vec![3]]);
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 2);

        assert_eq!(
            Hypergraph::new(3, vec![vec![]]),
            Err(ModelError::EmptyEdge { edge: 0 })
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![1, 1]]),
            Err(ModelError::RepeatedVertex { edge: 0, vertex: 1 })
        );
        assert_eq!(
            Hypergraph::new(3, vec![vec![0, 3]]),
            Err(ModelError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn duplicate_edges_are_kept_and_dedup_is_explicit() {
        let h = Hypergraph::new(2, vec![vec![0, 1], vec![0, 1], vec![0]]).unwrap();
        assert_eq!(h.edge_count(), 3);
        let d = h.dedup_edges();
        assert_eq!(d.edges(), &[vec![0, 1], vec![0]]);
        // dedup keeps the host unchanged
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn degree_and_overlap_statistics() {
        // the worked three-edge chain on five vertices
        let h = fig2();
        assert_eq!(h.degrees(), vec![1, 2, 3, 2, 1]);
        assert_eq!(h.max_edge_overlap(), 2);
        assert_eq!(h.max_pair_multiplicity(), 2);
        assert!(!h.is_linear());
        assert!(h.isolated_vertices().is_empty());
        assert_eq!(h.min_edge_size(), Some(3));
        assert_eq!(h.max_edge_size(), Some(3));
    }

    #[test]
    fn graph_rejects_loops_and_parallels() {
        assert_eq!(
            Graph::new(2, &[(0, 0)]),
            Err(ModelError::SelfLoop { vertex: 0 })
        );
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(ModelError::ParallelEdge { u: 0, v: 1 })
        );
        let g = Graph::new(3, &[(2, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_list(), vec![(0, 2), (1, 2)]);
        assert_eq!(g.degree(2), 2);
    }

    #[test]
    fn bipartition_is_validated() {
        let part = vec![Side::Left, Side::Right];
        assert!(Graph::with_bipartition(2, &[(0, 1)], part.clone()).is_ok());
        let bad = Graph::with_bipartition(2, &[(0, 1)], vec![Side::Left, Side::Left]);
        assert_eq!(bad, Err(ModelError::EdgeInsidePart { u: 0, v: 1 }));
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = vec![3, 1, 1].into();
        assert_eq!(s.to_vec(), vec![1, 3]);
        assert_eq!(s.complement(5).to_vec(), vec![0, 2, 4]);
        assert!(s.check_within(4).is_ok());
        assert_eq!(
            s.check_within(3),
            Err(ModelError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(format!("{s}"), "{1, 3}");
    }

    #[test]
    fn hypergraph_json_round_trip() {
        let h = fig2();
        let js = serde_json::to_string(&h).unwrap();
        assert_eq!(js, r#"{"n":5,"edges":[[0,1,2],[1,2,3],[2,3,4]]}"#);
        let back: Hypergraph = serde_json::from_str(&js).unwrap();
        assert_eq!(back, h);
        // deserialization revalidates
        assert!(serde_json::from_str::<Hypergraph>(r#"{"n":2,"edges":[[0,5]]}"#).is_err());
    }

    pub(crate) fn fig2() -> Hypergraph {
        Hypergraph::new(5, vec![vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4]]).unwrap()
    }
}
