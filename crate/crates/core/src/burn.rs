//! Lazy burning propagation, burning-set verification, and the
//! singleton-peeling core.
//!
//! Two models are supported everywhere. In the spontaneous model (the
//! default) a singleton hyperedge burns its vertex unconditionally; in the
//! original model singleton hyperedges of the input never spread burning.
//! The two coincide on hypergraphs without singleton edges, and in
//! particular on cores.
//!
//! Tie-breaking is deterministic throughout: lowest vertex id first, then
//! lowest edge index.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{remove_vertices, weak_induced, Hypergraph, ModelError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnError {
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// An ordered certificate of a burning process: entries `(edge, vertex)`
/// such that each edge's other vertices are already burned when the entry
/// fires (the prefix property).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChronList {
    pub entries: Vec<(usize, usize)>,
}

impl ChronList {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The burned vertices in list order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&(_, v)| v)
    }

    /// Checks the defining conditions against `h` and `seed`: membership,
    /// distinct new vertices, and the prefix property. Returns the index of
    /// the first violated entry.
    pub fn check(&self, h: &Hypergraph, seed: &VertexSet) -> Result<(), usize> {
        let n = h.vertex_count();
        let mut burned = vec![false; n];
        for v in seed.iter() {
            burned[v] = true;
        }
        for (i, &(e, v)) in self.entries.iter().enumerate() {
            if e >= h.edge_count() || v >= n || !h.edge(e).contains(&v) || burned[v] {
                return Err(i);
            }
            if h.edge(e).iter().any(|&u| u != v && !burned[u]) {
                return Err(i);
            }
            burned[v] = true;
        }
        Ok(())
    }
}

/// The full record of one lazy burning run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BurnTrace {
    /// The set burned in round 1.
    pub seed: VertexSet,
    /// Vertices newly burned in each propagation round; every round is
    /// nonempty.
    pub rounds: Vec<VertexSet>,
    /// Everything burned at the fixpoint.
    pub burned: VertexSet,
    /// Deterministic serialization of the burns: (round, vertex id)
    /// lexicographic, each witnessed by the lowest-index qualifying edge.
    pub chron: ChronList,
    /// Whether every vertex burned.
    pub complete: bool,
}

/// Outcome of [`chronological_list`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChronOutcome {
    /// `seed` is a burning set; the certificate has length `n - |seed|`.
    Complete(ChronList),
    /// `seed` is not a burning set; carries the maximal burned set.
    Stalled(VertexSet),
}

/// The core of a hypergraph plus the removal order that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreResult {
    /// The core, re-indexed to `0..core_vertices.len()`.
    pub core: Hypergraph,
    /// `core_vertices[new] = old`: increasing list of surviving vertex ids.
    pub core_vertices: Vec<usize>,
    /// Removed vertices (original ids) in removal order.
    pub removals: Vec<usize>,
    /// For each removal, the index of a hyperedge that was the singleton
    /// `{r_i}` at removal time.
    pub removal_edges: Vec<usize>,
}

/// Runs lazy burning from `seed` to the fixpoint. Each round burns, for
/// every hyperedge with exactly one unburned vertex, that vertex; all burns
/// in a round are simultaneous. With `spontaneous` unset, singleton
/// hyperedges of `h` are ignored entirely.
pub fn propagate(
    h: &Hypergraph,
    seed: &VertexSet,
    spontaneous: bool,
) -> Result<BurnTrace, BurnError> {
    let n = h.vertex_count();
    seed.check_within(n)?;

    let mut burned = vec![false; n];
    let mut burned_count = 0usize;
    for v in seed.iter() {
        burned[v] = true;
        burned_count += 1;
    }

    // live[j] = unburned vertices remaining in edge j; usize::MAX marks a
    // singleton ignored under the original model.
    let mut live: Vec<usize> = h
        .edges()
        .iter()
        .map(|e| {
            if !spontaneous && e.len() == 1 {
                usize::MAX
            } else {
                e.iter().filter(|&&v| !burned[v]).count()
            }
        })
        .collect();

    let incidence = h.incidence_lists();
    let mut pending: Vec<usize> = (0..h.edge_count()).filter(|&j| live[j] == 1).collect();
    let mut rounds = Vec::new();
    let mut chron = ChronList::default();

    while !pending.is_empty() {
        // claims[v] = lowest-index edge that burns v this round; entries can
        // go stale when an edge lost several vertices in the previous round
        let mut claims: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
        for &j in &pending {
            if live[j] != 1 {
                continue;
            }
            let v = *h.edge(j).iter().find(|&&v| !burned[v]).expect("live count is 1");
            claims.entry(v).and_modify(|e| *e = (*e).min(j)).or_insert(j);
        }
        if claims.is_empty() {
            break;
        }
        let mut next = Vec::new();
        let mut newly = VertexSet::new();
        for (&v, &e) in &claims {
            burned[v] = true;
            burned_count += 1;
            newly.insert(v);
            chron.entries.push((e, v));
            for &f in &incidence[v] {
                if live[f] != usize::MAX {
                    live[f] -= 1;
                    if live[f] == 1 {
                        next.push(f);
                    }
                }
            }
        }
        rounds.push(newly);
        pending = next;
    }

    Ok(BurnTrace {
        seed: seed.clone(),
        rounds,
        burned: (0..n).filter(|&v| burned[v]).collect(),
        chron,
        complete: burned_count == n,
    })
}

/// Burned-vertex flags of the propagation fixpoint, without building a
/// trace. Same semantics as [`propagate`].
pub(crate) fn closure_flags(h: &Hypergraph, seed: &[bool], spontaneous: bool) -> (Vec<bool>, usize) {
    let mut burned = seed.to_vec();
    let mut count = burned.iter().filter(|&&b| b).count();
    let mut live: Vec<usize> = h
        .edges()
        .iter()
        .map(|e| {
            if !spontaneous && e.len() == 1 {
                usize::MAX
            } else {
                e.iter().filter(|&&v| !burned[v]).count()
            }
        })
        .collect();
    let incidence = h.incidence_lists();
    let mut queue: Vec<usize> = (0..h.edge_count()).filter(|&j| live[j] == 1).collect();
    while let Some(j) = queue.pop() {
        if live[j] != 1 {
            continue;
        }
        let v = *h.edge(j).iter().find(|&&v| !burned[v]).expect("live count is 1");
        burned[v] = true;
        count += 1;
        for &f in &incidence[v] {
            if live[f] != usize::MAX {
                live[f] -= 1;
                if live[f] == 1 {
                    queue.push(f);
                }
            }
        }
        debug_assert_eq!(live[j], 0);
    }
    (burned, count)
}

/// Whether `b` is a lazy burning set for `h`, decided through degeneracy:
/// removing `b` must leave a hypergraph whose core is empty. Under the
/// original model the singleton edges of `h` are dropped first. Agrees with
/// `propagate(h, b, spontaneous).complete` on every input.
pub fn is_lazy_burning_set(
    h: &Hypergraph,
    b: &VertexSet,
    spontaneous: bool,
) -> Result<bool, BurnError> {
    b.check_within(h.vertex_count())?;
    let stripped;
    let host = if spontaneous {
        h
    } else {
        stripped = h.drop_singleton_edges();
        &stripped
    };
    let rest = remove_vertices(host, b).expect("b was range-checked");
    Ok(is_degenerate(&rest.hypergraph))
}

/// Computes the core by iteratively deleting the vertex of a singleton
/// hyperedge, smallest vertex id first. Per-edge live counters keep the
/// total work at `O(sum of edge sizes + n log n)`.
pub fn core(h: &Hypergraph) -> CoreResult {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let n = h.vertex_count();
    let mut live: Vec<usize> = h.edges().iter().map(Vec::len).collect();
    let incidence = h.incidence_lists();
    let mut removed = vec![false; n];

    let mut pool: BinaryHeap<Reverse<(usize, usize)>> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.len() == 1)
        .map(|(j, e)| Reverse((e[0], j)))
        .collect();

    let mut removals = Vec::new();
    let mut removal_edges = Vec::new();
    while let Some(Reverse((v, j))) = pool.pop() {
        if removed[v] {
            continue;
        }
        debug_assert_eq!(live[j], 1);
        removed[v] = true;
        removals.push(v);
        removal_edges.push(j);
        for &f in &incidence[v] {
            live[f] -= 1;
            if live[f] == 1 {
                let u = *h.edge(f).iter().find(|&&u| !removed[u]).expect("live count is 1");
                pool.push(Reverse((u, f)));
            }
            // an edge shrinking to zero here is simply gone (it can happen
            // with duplicate singletons)
        }
    }

    let survivors: VertexSet = (0..n).filter(|&v| !removed[v]).collect();
    let sub = weak_induced(h, &survivors).expect("survivors are in range");
    CoreResult {
        core: sub.hypergraph,
        core_vertices: sub.vertex_map,
        removals,
        removal_edges,
    }
}

/// A hypergraph is degenerate when its core has no vertices.
pub fn is_degenerate(h: &Hypergraph) -> bool {
    core(h).core.vertex_count() == 0
}

/// Extracts the chronological list certifying that `seed` burns `h`, or
/// reports the maximal burned set if it does not.
pub fn chronological_list(
    h: &Hypergraph,
    seed: &VertexSet,
    spontaneous: bool,
) -> Result<ChronOutcome, BurnError> {
    let trace = propagate(h, seed, spontaneous)?;
    if trace.complete {
        Ok(ChronOutcome::Complete(trace.chron))
    } else {
        Ok(ChronOutcome::Stalled(trace.burned))
    }
}
