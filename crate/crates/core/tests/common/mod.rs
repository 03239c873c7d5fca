//! Shared helpers and independent oracles for the integration tests.
//!
//! Everything here stays deliberately naive: direct definitions, subset
//! enumeration, and subset DP. None of it shares code with the solver or
//! the engines it validates.

#![allow(dead_code)]

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lazyburn::model::{Graph, Hypergraph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random graph: each pair an independent coin with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let thr = (p * u64::MAX as f64) as u64;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if r.next_u64() < thr {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are simple")
}

/// Random subset: each vertex an independent coin.
pub fn random_subset(n: usize, p: f64, seed: u64) -> VertexSet {
    let mut r = rng(seed);
    let thr = (p * u64::MAX as f64) as u64;
    (0..n).filter(|_| r.next_u64() < thr).collect()
}

/// Random permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut r = rng(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (r.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

/// Applies a vertex permutation to a hypergraph: vertex `v` becomes
/// `perm[v]`.
pub fn permute_hypergraph(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
    let edges = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|&v| perm[v]).collect())
        .collect();
    Hypergraph::new(h.vertex_count(), edges).expect("permutation preserves validity")
}

/// Maximum C-matching size by subset DP over matched-vertex sets, walking
/// the matching backwards: a set `S` of already-placed (later) vertices can
/// be extended by `(v, h)` whenever `v ∈ h` and `h ∩ S = ∅`. Edge reuse is
/// impossible because a used edge always contains a placed vertex.
pub fn max_cmatching_size_dp(h: &Hypergraph) -> usize {
    let n = h.vertex_count();
    assert!(n <= 20, "DP oracle is for small instances");
    let edge_masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let mut reachable = vec![false; 1usize << n];
    reachable[0] = true;
    let mut best = 0;
    for mask in 0..(1u32 << n) {
        if !reachable[mask as usize] {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        for &em in &edge_masks {
            if em & mask == 0 {
                let mut rest = em;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    reachable[(mask | (1 << v)) as usize] = true;
                    rest &= rest - 1;
                }
            }
        }
    }
    best
}

/// Maximum C-matching size by exhaustive search over ordered incidence
/// sequences, appended left to right: a new pair `(v, h)` needs `v ∈ h` and
/// `v` outside every earlier edge. Which vertex of `h` is matched does not
/// change the set of vertices forbidden afterwards (the whole of `h` is),
/// so one representative per edge suffices. Exponential; tiny instances
/// only.
pub fn max_cmatching_size_dfs(h: &Hypergraph) -> usize {
    fn extend(h: &Hypergraph, used_union: &mut Vec<bool>, depth: usize, best: &mut usize) {
        *best = (*best).max(depth);
        for e in h.edges() {
            if e.iter().all(|&u| used_union[u]) {
                continue; // no matchable vertex left in this edge
            }
            let newly: Vec<usize> = e.iter().copied().filter(|&u| !used_union[u]).collect();
            for &u in &newly {
                used_union[u] = true;
            }
            extend(h, used_union, depth + 1, best);
            for &u in &newly {
                used_union[u] = false;
            }
        }
    }
    let mut best = 0;
    let mut used_union = vec![false; h.vertex_count()];
    extend(h, &mut used_union, 0, &mut best);
    best
}

/// Minimum number of hyperedges covering every vertex, by subset
/// enumeration; `None` when no cover exists (isolated vertices).
pub fn min_edge_cover_bruteforce(h: &Hypergraph) -> Option<usize> {
    let n = h.vertex_count();
    let m = h.edge_count();
    assert!(m <= 20);
    let full = if n == 0 { 0u32 } else { u32::MAX >> (32 - n) };
    let edge_masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |msk, &v| msk | (1 << v)))
        .collect();
    let mut best: Option<usize> = None;
    for pick in 0..(1u32 << m) {
        let covered = (0..m)
            .filter(|&j| pick >> j & 1 == 1)
            .fold(0u32, |msk, j| msk | edge_masks[j]);
        if covered == full {
            let k = pick.count_ones() as usize;
            best = Some(best.map_or(k, |b| b.min(k)));
        }
    }
    best
}

/// Every hyperedge meets `cover`.
pub fn is_vertex_cover(h: &Hypergraph, cover: &VertexSet) -> bool {
    h.edges().iter().all(|e| e.iter().any(|&v| cover.contains(v)))
}
