//! Structural transforms between hypergraphs and graphs.

use super::{Graph, Hypergraph, ModelError, Side, VertexSet};

/// A re-indexed structure together with the maps back to the original ids.
///
/// `vertex_map[new] = old` and `edge_map[new] = old`; both are increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reindexed {
    pub hypergraph: Hypergraph,
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

/// The incidence (Levi) graph of `h`: a bipartite graph on
/// `vertex_count + edge_count` vertices. Vertex `i < n` is hypergraph vertex
/// `i` ([`Side::Left`]); vertex `n + j` is hyperedge `j` ([`Side::Right`]);
/// graph edge `(i, n + j)` iff `i ∈ edge j`.
pub fn incidence_graph(h: &Hypergraph) -> Graph {
    let n = h.vertex_count();
    let m = h.edge_count();
    let mut edges = Vec::new();
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            edges.push((v, n + j));
        }
    }
    let mut part = vec![Side::Left; n];
    part.extend(std::iter::repeat(Side::Right).take(m));
    Graph::with_bipartition(n + m, &edges, part).expect("incidence graph is always bipartite")
}

/// The dual hypergraph: one vertex per hyperedge of `h`, and for each
/// non-isolated vertex `v` of `h` (in increasing order) the hyperedge
/// `{j : v ∈ edge j}`. Isolated vertices contribute no dual hyperedge, so
/// they are lost under dualization; duplicate neighborhoods are kept.
pub fn dual(h: &Hypergraph) -> Hypergraph {
    let edges: Vec<Vec<usize>> = h
        .incidence_lists()
        .into_iter()
        .filter(|inc| !inc.is_empty())
        .collect();
    Hypergraph::new(h.edge_count(), edges).expect("incidence lists are valid dual edges")
}

/// The subhypergraph weakly induced by `u`: vertex set `u` (re-indexed
/// `0..|u|`), edges `{h ∩ u : h ∈ E, h ∩ u ≠ ∅}` as a multiset.
pub fn weak_induced(h: &Hypergraph, u: &VertexSet) -> Result<Reindexed, ModelError> {
    let n = h.vertex_count();
    u.check_within(n)?;
    let vertex_map = u.to_vec();
    let mut rank = vec![usize::MAX; n];
    for (new, &old) in vertex_map.iter().enumerate() {
        rank[old] = new;
    }
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (j, e) in h.edges().iter().enumerate() {
        let inter: Vec<usize> = e.iter().filter(|&&v| rank[v] != usize::MAX).map(|&v| rank[v]).collect();
        if !inter.is_empty() {
            edges.push(inter);
            edge_map.push(j);
        }
    }
    let mut sub = Hypergraph::new(vertex_map.len(), edges)?;
    if let Some(labels) = h.labels() {
        sub = sub.with_labels(vertex_map.iter().map(|&v| labels[v].clone()).collect())?;
    }
    Ok(Reindexed { hypergraph: sub, vertex_map, edge_map })
}

/// `h` with the vertices of `l` deleted: the subhypergraph weakly induced by
/// the complement of `l`.
pub fn remove_vertices(h: &Hypergraph, l: &VertexSet) -> Result<Reindexed, ModelError> {
    l.check_within(h.vertex_count())?;
    weak_induced(h, &l.complement(h.vertex_count()))
}

/// The open neighborhood hypergraph of `g`: one hyperedge `N(v)` per vertex
/// `v` with positive degree, in increasing `v` order. Isolated graph
/// vertices contribute no hyperedge (empty edges are forbidden).
pub fn open_neighborhood_hypergraph(g: &Graph) -> Hypergraph {
    let edges: Vec<Vec<usize>> = (0..g.vertex_count())
        .filter(|&v| g.degree(v) > 0)
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    Hypergraph::new(g.vertex_count(), edges).expect("neighborhoods are valid edges")
}

/// The closed neighborhood hypergraph of `g`: one hyperedge
/// `N[v] = N(v) ∪ {v}` per vertex `v`, in increasing `v` order.
pub fn closed_neighborhood_hypergraph(g: &Graph) -> Hypergraph {
    let edges: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| {
            let mut e: Vec<usize> = g.neighbors(v).iter().copied().collect();
            e.push(v);
            e
        })
        .collect();
    Hypergraph::new(g.vertex_count(), edges).expect("closed neighborhoods are valid edges")
}

/// Glues a triangle to every vertex of `g`: vertex `(v, i)` of the result
/// has id `3v + (i - 1)` for `i ∈ {1, 2, 3}`; the original edges live on
/// layer 1 and each vertex gains the triangle on its three copies. The
/// result has `3n` vertices and `|E| + 3n` edges.
pub fn triangle_gluing(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize)> = g.edge_list().iter().map(|&(u, v)| (3 * u, 3 * v)).collect();
    for v in 0..n {
        edges.push((3 * v, 3 * v + 1));
        edges.push((3 * v, 3 * v + 2));
        edges.push((3 * v + 1, 3 * v + 2));
    }
    Graph::new(3 * n, &edges).expect("triangle gluing preserves simplicity")
}
