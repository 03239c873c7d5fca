//! C-matchings on incidence graphs.
//!
//! A C-matching is an ordered list of incidence-graph edges
//! `(v_1 h_1, ..., v_k h_k)` such that no edge `h_i` contains a
//! later-matched vertex `v_j` (`j > i`). They are exactly the chronological
//! lists of lazy burning read backwards-compatibly: the maximum size equals
//! `|V(H)| - b_L(H)`.

use serde::Serialize;
use thiserror::Error;

use crate::burn::{propagate, ChronList};
use crate::model::{dual, Hypergraph, VertexSet};
use crate::solve::{b_lazy, SolveError, SolveLimits};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CmatchError {
    #[error("pair {index} out of range: vertex {vertex}, edge {edge}")]
    PairOutOfRange { index: usize, vertex: usize, edge: usize },
    #[error("host dimensions ({host_n}, {host_m}) do not match the hypergraph ({n}, {m})")]
    HostMismatch { host_n: usize, host_m: usize, n: usize, m: usize },
    #[error("chronological list violated at entry {index}")]
    InvalidChron { index: usize },
    #[error("the pair list is not a C-matching")]
    NotACMatching,
    #[error("maximum C-matching needs an optimal burning set: {0}")]
    Solve(#[from] SolveError),
    #[error("solver hit its search budget before proving optimality")]
    SearchBudget,
}

/// An ordered list of `(vertex, edge)` pairs together with the dimensions
/// of the hypergraph they live on. The host dimensions let the retrograde
/// re-host the same pairs on the dual without carrying a structure
/// reference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CMatching {
    /// Pairs `(v_i, h_i)`, in matching order.
    pub pairs: Vec<(usize, usize)>,
    /// `(vertex_count, edge_count)` of the host hypergraph.
    #[serde(skip)]
    pub host: (usize, usize),
}

impl CMatching {
    pub fn new(pairs: Vec<(usize, usize)>, host: (usize, usize)) -> Self {
        CMatching { pairs, host }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The matched vertices, in matching order.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(v, _)| v)
    }
}

/// True iff every pair is an incidence of `h` and no edge `h_i` contains a
/// later vertex `v_j`. Out-of-range indices and host mismatches are errors,
/// not `false`.
pub fn validate_cmatching(h: &Hypergraph, m: &CMatching) -> Result<bool, CmatchError> {
    let (n, ec) = (h.vertex_count(), h.edge_count());
    if m.host != (n, ec) {
        return Err(CmatchError::HostMismatch { host_n: m.host.0, host_m: m.host.1, n, m: ec });
    }
    for (index, &(v, e)) in m.pairs.iter().enumerate() {
        if v >= n || e >= ec {
            return Err(CmatchError::PairOutOfRange { index, vertex: v, edge: e });
        }
    }
    // walk backwards keeping the set of later-matched vertices
    let mut later = vec![false; n];
    for &(v, e) in m.pairs.iter().rev() {
        if !h.edge(e).contains(&v) {
            return Ok(false);
        }
        if h.edge(e).iter().any(|&u| later[u]) {
            return Ok(false);
        }
        later[v] = true;
    }
    Ok(true)
}

/// Reinterprets a chronological list for `seed` as a C-matching. The input
/// is fully checked; the first violated entry index is reported on failure.
pub fn cmatching_from_chron(
    h: &Hypergraph,
    seed: &VertexSet,
    chron: &ChronList,
) -> Result<CMatching, CmatchError> {
    chron.check(h, seed).map_err(|index| CmatchError::InvalidChron { index })?;
    Ok(CMatching::new(
        chron.entries.iter().map(|&(e, v)| (v, e)).collect(),
        (h.vertex_count(), h.edge_count()),
    ))
}

/// Inverse of [`cmatching_from_chron`]: recovers the seed `V \ M_V` and the
/// chronological list of a valid C-matching.
pub fn chron_from_cmatching(
    h: &Hypergraph,
    m: &CMatching,
) -> Result<(VertexSet, ChronList), CmatchError> {
    if !validate_cmatching(h, m)? {
        return Err(CmatchError::NotACMatching);
    }
    let matched: VertexSet = m.vertices().collect();
    let seed = matched.complement(h.vertex_count());
    let chron = ChronList { entries: m.pairs.iter().map(|&(v, e)| (e, v)).collect() };
    debug_assert!(chron.check(h, &seed).is_ok());
    Ok((seed, chron))
}

/// The retrograde of `m`: the pair list reversed and swapped, re-hosted on
/// `dual(h)`. Dual vertex ids are original edge indices; dual edge indices
/// are the ranks of the original vertices among non-isolated vertices.
pub fn retrograde(h: &Hypergraph, m: &CMatching) -> Result<CMatching, CmatchError> {
    if !validate_cmatching(h, m)? {
        return Err(CmatchError::NotACMatching);
    }
    let degrees = h.degrees();
    let mut dual_edge_rank = vec![usize::MAX; h.vertex_count()];
    let mut next = 0;
    for v in 0..h.vertex_count() {
        if degrees[v] > 0 {
            dual_edge_rank[v] = next;
            next += 1;
        }
    }
    let pairs = m
        .pairs
        .iter()
        .rev()
        .map(|&(v, e)| (e, dual_edge_rank[v]))
        .collect();
    let out = CMatching::new(pairs, (h.edge_count(), next));
    debug_assert_eq!(validate_cmatching(&dual(h), &out), Ok(true));
    Ok(out)
}

/// A maximum-cardinality C-matching, obtained from an optimal burning set:
/// its size is `|V(H)| - b_L(H)` under the spontaneous model. A vertex whose
/// burn is witnessed by a singleton edge pairs with that edge.
pub fn max_cmatching(h: &Hypergraph) -> Result<CMatching, CmatchError> {
    let solved = b_lazy(h, true, &SolveLimits::default())?;
    if !solved.optimal {
        return Err(CmatchError::SearchBudget);
    }
    let trace = propagate(h, &solved.witness, true).expect("witness is in range");
    debug_assert!(trace.complete);
    cmatching_from_chron(h, &solved.witness, &trace.chron)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::tests::fig2;
    use crate::model::gen_star_hypergraph;

    fn fig2_matching() -> CMatching {
        // the circled size-3 matching: c into the first edge, d into the
        // second, e into the third
        CMatching::new(vec![(2, 0), (3, 1), (4, 2)], (5, 3))
    }

    #[test]
    fn figure_matching_validates() {
        assert_eq!(validate_cmatching(&fig2(), &fig2_matching()), Ok(true));
    }

    #[test]
    fn empty_matching_validates() {
        let m = CMatching::new(vec![], (5, 3));
        assert_eq!(validate_cmatching(&fig2(), &m), Ok(true));
    }

    #[test]
    fn later_vertex_in_earlier_edge_fails() {
        // (b, e2) then (c, e1): e2 contains c, which is matched later
        let m = CMatching::new(vec![(1, 1), (2, 0)], (5, 3));
        assert_eq!(validate_cmatching(&fig2(), &m), Ok(false));
    }

    #[test]
    fn membership_failures_and_range_errors() {
        let not_member = CMatching::new(vec![(0, 2)], (5, 3));
        assert_eq!(validate_cmatching(&fig2(), &not_member), Ok(false));
        let out_of_range = CMatching::new(vec![(0, 7)], (5, 3));
        assert!(matches!(
            validate_cmatching(&fig2(), &out_of_range),
            Err(CmatchError::PairOutOfRange { .. })
        ));
        let wrong_host = CMatching::new(vec![], (4, 3));
        assert!(matches!(
            validate_cmatching(&fig2(), &wrong_host),
            Err(CmatchError::HostMismatch { .. })
        ));
    }

    #[test]
    fn chron_round_trip_on_the_figure() {
        let h = fig2();
        let seed: VertexSet = vec![0, 1].into();
        let chron = ChronList { entries: vec![(0, 2), (1, 3), (2, 4)] };
        let m = cmatching_from_chron(&h, &seed, &chron).unwrap();
        assert_eq!(m, fig2_matching());
        let (seed_back, chron_back) = chron_from_cmatching(&h, &m).unwrap();
        assert_eq!(seed_back, seed);
        assert_eq!(chron_back, chron);
    }

    #[test]
    fn empty_chron_gives_empty_matching() {
        let h = fig2();
        let m = cmatching_from_chron(&h, &VertexSet::full(5), &ChronList::default()).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn invalid_chron_reports_first_bad_index() {
        let h = fig2();
        let seed: VertexSet = vec![0, 1].into();
        let bad = ChronList { entries: vec![(0, 2), (2, 4), (1, 3)] };
        assert_eq!(
            cmatching_from_chron(&h, &seed, &bad),
            Err(CmatchError::InvalidChron { index: 1 })
        );
    }

    #[test]
    fn retrograde_of_figure_matching() {
        let h = fig2();
        let r = retrograde(&h, &fig2_matching()).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.host, (3, 5));
        assert_eq!(r.pairs, vec![(2, 4), (1, 3), (0, 2)]);
        assert_eq!(validate_cmatching(&dual(&h), &r), Ok(true));
    }

    #[test]
    fn retrograde_is_an_involution_on_pairs() {
        let h = fig2();
        let m = fig2_matching();
        let rr = retrograde(&dual(&h), &retrograde(&h, &m).unwrap()).unwrap();
        let mut expected: Vec<(usize, usize)> = m.pairs.clone();
        expected.sort_unstable();
        let mut got = rr.pairs.clone();
        got.sort_unstable();
        assert_eq!(got, expected);
    }

    #[test]
    fn retrograde_of_empty() {
        let h = fig2();
        let r = retrograde(&h, &CMatching::new(vec![], (5, 3))).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn max_cmatching_sizes() {
        assert_eq!(max_cmatching(&fig2()).unwrap().len(), 3);
        let star = gen_star_hypergraph(2, 2).unwrap();
        assert_eq!(max_cmatching(&star).unwrap().len(), 5 - 3);
        let edgeless = Hypergraph::new(4, vec![]).unwrap();
        assert_eq!(max_cmatching(&edgeless).unwrap().len(), 0);
    }

    #[test]
    fn singleton_vertex_pairs_with_its_edge() {
        let h = Hypergraph::new(2, vec![vec![0, 1], vec![1]]).unwrap();
        let m = max_cmatching(&h).unwrap();
        assert_eq!(validate_cmatching(&h, &m), Ok(true));
        assert!(m.pairs.contains(&(1, 1)));
        assert_eq!(m.len(), 2);
    }
}
