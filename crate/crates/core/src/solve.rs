//! Exact computation of the lazy burning number.
//!
//! The pipeline reduces to the core first (removed vertices burn for free
//! and optimal seeds never use them), seeds the incumbent with a greedy
//! burning set, and then runs a depth-first branch-and-bound over the core
//! vertices with two residual lower bounds. A second, id-ascending search
//! pass at the proven optimum extracts the lexicographically least witness.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::burn::{self, ChronList};
use crate::model::{Hypergraph, ModelError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("core has {core_size} vertices, above the search limit {limit}")]
    CoreTooLarge { core_size: usize, limit: usize },
    #[error("brute force is capped at 16 vertices, got {n}")]
    TooLargeForBruteForce { n: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Which burning model a result was computed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    /// Singleton hyperedges burn their vertex unconditionally.
    Spontaneous,
    /// Singleton hyperedges never spread burning.
    Original,
}

impl Model {
    pub fn spontaneous(self) -> bool {
        matches!(self, Model::Spontaneous)
    }

    pub fn from_spontaneous(spontaneous: bool) -> Self {
        if spontaneous {
            Model::Spontaneous
        } else {
            Model::Original
        }
    }
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Model::Spontaneous => write!(f, "spontaneous"),
            Model::Original => write!(f, "original"),
        }
    }
}

/// Search budget. Exceeding `max_nodes` or `max_millis` makes the solver
/// return its best incumbent flagged non-optimal; a core larger than
/// `max_core_vertices` is an error instead.
#[derive(Debug, Clone)]
pub struct SolveLimits {
    pub max_nodes: u64,
    pub max_millis: u64,
    pub max_core_vertices: usize,
}

impl Default for SolveLimits {
    fn default() -> Self {
        SolveLimits { max_nodes: 10_000_000, max_millis: 60_000, max_core_vertices: 30 }
    }
}

/// Cores are searched with 128-bit vertex masks.
const HARD_CORE_CAP: usize = 127;

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct SolveStats {
    /// Branch-and-bound nodes expanded (both phases).
    pub nodes: u64,
    /// Wall time. Excluded from determinism comparisons.
    pub millis: u64,
    /// Nodes cut by the residual lower bounds.
    #[serde(skip)]
    pub prunes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveResult {
    /// The lazy burning number (or the best incumbent when not optimal).
    pub value: usize,
    /// A burning set of size `value`; lexicographically least among optimal
    /// sets when `optimal` holds.
    pub witness: VertexSet,
    /// Chronological certificate on the input hypergraph; its length is
    /// `n - value`.
    pub certificate: ChronList,
    /// False only when a node or time budget was exhausted.
    pub optimal: bool,
    #[serde(flatten)]
    pub stats: SolveStats,
    pub model: Model,
}

struct CoreSearch {
    n: usize,
    full: u128,
    edge_masks: Vec<u128>,
    /// Branch order for the bounding phase: degree descending, id ascending.
    order: Vec<usize>,
    nodes: u64,
    prunes: u64,
    node_budget: u64,
    deadline: Option<Instant>,
    aborted: bool,
    best_value: u32,
    best_set: u128,
}

impl CoreSearch {
    fn new(core: &Hypergraph, limits: &SolveLimits, started: Instant) -> Self {
        let n = core.vertex_count();
        let edge_masks: Vec<u128> = core
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u128, |m, &v| m | (1 << v)))
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        let deg = core.degrees();
        order.sort_by_key(|&v| (std::cmp::Reverse(deg[v]), v));
        CoreSearch {
            n,
            full: if n == 0 { 0 } else { u128::MAX >> (128 - n) },
            edge_masks,
            order,
            nodes: 0,
            prunes: 0,
            node_budget: limits.max_nodes,
            deadline: started.checked_add(std::time::Duration::from_millis(limits.max_millis)),
            aborted: false,
            best_value: u32::MAX,
            best_set: 0,
        }
    }

    fn closure(&self, seed: u128) -> u128 {
        let mut black = seed;
        loop {
            let mut newly = 0u128;
            for &em in &self.edge_masks {
                let white = em & !black;
                if white != 0 && white & (white - 1) == 0 {
                    newly |= white;
                }
            }
            if newly == 0 {
                return black;
            }
            black |= newly;
            if black == self.full {
                return black;
            }
        }
    }

    /// max(trivial residual bound, single-edge intersection bound on the
    /// residual): a valid lower bound on the seeds still needed after
    /// everything in `closed` burns.
    fn residual_bound(&self, closed: u128) -> u32 {
        let unburned = (self.full & !closed).count_ones();
        let mut live_edges = 0u32;
        let mut min_live = u32::MAX;
        for &em in &self.edge_masks {
            let w = (em & !closed).count_ones();
            if w > 0 {
                live_edges += 1;
                min_live = min_live.min(w);
            }
        }
        let trivial = unburned.saturating_sub(live_edges);
        let intersect = if min_live == u32::MAX { 0 } else { min_live - 1 };
        trivial.max(intersect)
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if self.nodes >= self.node_budget
            || self.deadline.is_some_and(|d| self.nodes % 1024 == 0 && Instant::now() >= d)
        {
            self.aborted = true;
        }
        self.aborted
    }

    /// Phase 1: establish the optimal value (degree-ordered branching,
    /// include-first).
    fn bound_value(&mut self, in_set: u128, out_set: u128, depth: usize) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        let closed = self.closure(in_set);
        let size = in_set.count_ones();
        if closed == self.full {
            if size < self.best_value {
                self.best_value = size;
                self.best_set = in_set;
            }
            return;
        }
        if size + self.residual_bound(closed) >= self.best_value {
            self.prunes += 1;
            return;
        }
        let mut idx = depth;
        let branch = loop {
            match self.order.get(idx) {
                None => return, // every unburned vertex is committed out
                Some(&v) => {
                    let bit = 1u128 << v;
                    if closed & bit == 0 && out_set & bit == 0 {
                        break bit;
                    }
                    idx += 1;
                }
            }
        };
        self.bound_value(in_set | branch, out_set, idx + 1);
        self.bound_value(in_set, out_set | branch, idx + 1);
    }

    /// Phase 2: first (hence lexicographically least) optimal set in
    /// id-ascending include-first order. Minimum sets never contain a vertex
    /// burned by the rest of the set, so skipping closure vertices loses no
    /// optimum.
    fn lex_witness(&mut self, in_set: u128, out_set: u128, from: usize) -> Option<u128> {
        self.nodes += 1;
        if self.out_of_budget() {
            return None;
        }
        let closed = self.closure(in_set);
        let size = in_set.count_ones();
        if closed == self.full {
            debug_assert_eq!(size, self.best_value);
            return Some(in_set);
        }
        if size + self.residual_bound(closed) > self.best_value {
            self.prunes += 1;
            return None;
        }
        let mut v = from;
        let branch = loop {
            if v >= self.n {
                return None;
            }
            let bit = 1u128 << v;
            if closed & bit == 0 && out_set & bit == 0 {
                break bit;
            }
            v += 1;
        };
        self.lex_witness(in_set | branch, out_set, v + 1)
            .or_else(|| self.lex_witness(in_set, out_set | branch, v + 1))
    }

    fn greedy_incumbent(&mut self) {
        let mut seed = 0u128;
        let mut closed = self.closure(seed);
        while closed != self.full {
            let mut best: Option<(u32, usize)> = None;
            for v in 0..self.n {
                let bit = 1u128 << v;
                if seed & bit != 0 {
                    continue;
                }
                let gain = self.closure(seed | bit).count_ones();
                if best.map_or(true, |(g, _)| gain > g) {
                    best = Some((gain, v));
                }
            }
            let (_, v) = best.expect("incomplete closure leaves candidates");
            seed |= 1 << v;
            closed = self.closure(seed);
        }
        self.best_value = seed.count_ones();
        self.best_set = seed;
    }
}

/// Computes the lazy burning number of `h` under the chosen model, with an
/// optimal witness and a chronological certificate on `h` itself.
///
/// The spontaneous model reduces to the core of `h`; the original model
/// drops singleton edges first and reduces to the core of the remainder (the
/// models coincide there). Either way the removed vertices burn for free and
/// the optimum transfers back unchanged.
pub fn b_lazy(
    h: &Hypergraph,
    spontaneous: bool,
    limits: &SolveLimits,
) -> Result<SolveResult, SolveError> {
    let started = Instant::now();
    let stripped;
    let host = if spontaneous {
        h
    } else {
        stripped = h.drop_singleton_edges();
        &stripped
    };
    let cr = burn::core(host);
    let cap = limits.max_core_vertices.min(HARD_CORE_CAP);
    if cr.core.vertex_count() > cap {
        return Err(SolveError::CoreTooLarge { core_size: cr.core.vertex_count(), limit: cap });
    }

    let mut search = CoreSearch::new(&cr.core, limits, started);
    search.greedy_incumbent();
    search.bound_value(0, 0, 0);
    let optimal = !search.aborted;
    if optimal {
        if let Some(w) = search.lex_witness(0, 0, 0) {
            search.best_set = w;
        }
        // a budget hit inside the witness pass keeps the value optimal and
        // falls back to the bounding-phase witness
    }

    let witness: VertexSet = (0..cr.core.vertex_count())
        .filter(|&v| search.best_set >> v & 1 == 1)
        .map(|v| cr.core_vertices[v])
        .collect();
    let trace = burn::propagate(h, &witness, spontaneous).expect("witness ids come from h");
    debug_assert!(trace.complete, "witness must burn the input");
    let value = search.best_value as usize;
    debug_assert_eq!(witness.len(), value);

    Ok(SolveResult {
        value,
        witness,
        certificate: trace.chron,
        optimal,
        stats: SolveStats {
            nodes: search.nodes,
            millis: started.elapsed().as_millis() as u64,
            prunes: search.prunes,
        },
        model: Model::from_spontaneous(spontaneous),
    })
}

/// Minimum burning-set size by plain subset enumeration over direct
/// propagation. Independent of the core reduction and the branch-and-bound;
/// this is the oracle the solver is validated against. Capped at 16
/// vertices.
pub fn b_lazy_bruteforce(h: &Hypergraph, spontaneous: bool) -> Result<usize, SolveError> {
    let n = h.vertex_count();
    if n > 16 {
        return Err(SolveError::TooLargeForBruteForce { n });
    }
    let full = if n == 0 { 0u32 } else { u32::MAX >> (32 - n) };
    let edge_masks: Vec<u32> = h
        .edges()
        .iter()
        .filter(|e| spontaneous || e.len() > 1)
        .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let burns_all = |seed: u32| -> bool {
        let mut black = seed;
        loop {
            if black == full {
                return true;
            }
            let mut newly = 0u32;
            for &em in &edge_masks {
                let white = em & !black;
                if white != 0 && white & (white - 1) == 0 {
                    newly |= white;
                }
            }
            if newly == 0 {
                return false;
            }
            black |= newly;
        }
    };
    for k in 0..=n {
        let mut found = false;
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let seed = comb.iter().fold(0u32, |m, &v| m | (1 << v));
            if burns_all(seed) {
                found = true;
                break;
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
        if found {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set always burns");
}

/// Advances `comb` to the next k-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - (k - i) {
            comb[i] += 1;
            for j in (i + 1)..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Returns `(b_L(h), b_L(h minus v))`. Vertex removal can lower the lazy
/// burning number by at most one and never raises it.
pub fn b_lazy_monotonicity_check(
    h: &Hypergraph,
    v: usize,
    spontaneous: bool,
    limits: &SolveLimits,
) -> Result<(usize, usize), SolveError> {
    if v >= h.vertex_count() {
        return Err(ModelError::VertexOutOfRange { vertex: v, n: h.vertex_count() }.into());
    }
    let whole = b_lazy(h, spontaneous, limits)?.value;
    let smaller = crate::model::remove_vertices(h, &vec![v].into())?;
    let reduced = b_lazy(&smaller.hypergraph, spontaneous, limits)?.value;
    Ok((whole, reduced))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::tests::fig2;
    use crate::model::{gen_star_hypergraph, VertexSet};

    fn solve(h: &Hypergraph, spontaneous: bool) -> SolveResult {
        b_lazy(h, spontaneous, &SolveLimits::default()).unwrap()
    }

    #[test]
    fn fig2_burning_number_is_two() {
        let r = solve(&fig2(), true);
        assert_eq!(r.value, 2);
        assert!(r.optimal);
        assert_eq!(r.witness.len(), 2);
        assert_eq!(r.certificate.len(), 3);
        assert!(burn::is_lazy_burning_set(&fig2(), &r.witness, true).unwrap());
        // lexicographically least optimal set
        assert_eq!(r.witness, vec![0, 1].into());
    }

    #[test]
    fn star_family_formula() {
        for k in 2..=4 {
            for l in 2..=4 {
                let h = gen_star_hypergraph(k, l).unwrap();
                let r = solve(&h, true);
                assert_eq!(r.value, (k - 1) * l + 1, "star k={k} l={l}");
                assert!(r.optimal);
                assert_eq!(r.certificate.len(), h.vertex_count() - r.value);
            }
        }
    }

    #[test]
    fn singleton_models_differ() {
        let h = Hypergraph::new(1, vec![vec![0]]).unwrap();
        assert_eq!(solve(&h, true).value, 0);
        assert_eq!(solve(&h, false).value, 1);
        assert_eq!(b_lazy_bruteforce(&h, true).unwrap(), 0);
        assert_eq!(b_lazy_bruteforce(&h, false).unwrap(), 1);
    }

    #[test]
    fn brute_force_on_k4_pairs() {
        // the complete graph on 4 vertices as a 2-uniform hypergraph: any
        // single seed leaves each incident pair with one unburned vertex,
        // so everything burns in one round
        let edges = vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]];
        let h = Hypergraph::new(4, edges).unwrap();
        assert_eq!(b_lazy_bruteforce(&h, true).unwrap(), 1);
        assert_eq!(solve(&h, true).value, 1);
    }

    #[test]
    fn edgeless_needs_every_vertex() {
        let h = Hypergraph::new(4, vec![]).unwrap();
        assert_eq!(b_lazy_bruteforce(&h, true).unwrap(), 4);
        let r = solve(&h, true);
        assert_eq!(r.value, 4);
        assert_eq!(r.witness, VertexSet::full(4));
        assert!(r.certificate.is_empty());
    }

    #[test]
    fn empty_hypergraph() {
        let h = Hypergraph::new(0, vec![]).unwrap();
        let r = solve(&h, true);
        assert_eq!(r.value, 0);
        assert!(r.optimal);
    }

    #[test]
    fn witness_avoids_free_vertices() {
        // vertices 0..3 peel away for free; the core is {3,4,5} with one edge
        let h = Hypergraph::new(6, vec![vec![0], vec![0, 1], vec![1, 2], vec![3, 4, 5]]).unwrap();
        let r = solve(&h, true);
        assert_eq!(r.value, 2);
        let removals: VertexSet = burn::core(&h).removals.into_iter().collect();
        assert!(r.witness.iter().all(|v| !removals.contains(v)));
        assert_eq!(r.witness, vec![3, 4].into());
    }

    #[test]
    fn core_size_guard() {
        let h = Hypergraph::new(40, (0..20).map(|i| vec![2 * i, 2 * i + 1]).collect()).unwrap();
        let limits = SolveLimits { max_core_vertices: 10, ..SolveLimits::default() };
        match b_lazy(&h, true, &limits) {
            Err(SolveError::CoreTooLarge { core_size: 40, limit: 10 }) => {}
            other => panic!("expected the core size guard, got {other:?}"),
        }
    }

    #[test]
    fn node_budget_returns_incumbent() {
        let h = gen_star_hypergraph(3, 3).unwrap();
        let limits = SolveLimits { max_nodes: 1, ..SolveLimits::default() };
        let r = b_lazy(&h, true, &limits).unwrap();
        assert!(!r.optimal);
        // the greedy incumbent is still a genuine burning set
        assert!(burn::is_lazy_burning_set(&h, &r.witness, true).unwrap());
        assert_eq!(r.witness.len(), r.value);
    }

    #[test]
    fn monotonicity_on_figure_and_star() {
        let limits = SolveLimits::default();
        let (b, b_removed) = b_lazy_monotonicity_check(&fig2(), 2, true, &limits).unwrap();
        assert_eq!(b, 2);
        assert!(b_removed == 1 || b_removed == 2);

        let star = gen_star_hypergraph(2, 2).unwrap();
        let (b, b_removed) = b_lazy_monotonicity_check(&star, 0, true, &limits).unwrap();
        assert_eq!(b, 3);
        assert!((b - 1..=b).contains(&b_removed));

        let edgeless = Hypergraph::new(3, vec![]).unwrap();
        let (b, b_removed) = b_lazy_monotonicity_check(&edgeless, 1, true, &limits).unwrap();
        assert_eq!((b, b_removed), (3, 2));
    }

    #[test]
    fn certificate_length_and_validity() {
        for (h, spont) in [
            (fig2(), true),
            (gen_star_hypergraph(2, 3).unwrap(), true),
            (Hypergraph::new(3, vec![vec![0], vec![0, 1], vec![1, 2]]).unwrap(), false),
        ] {
            let r = solve(&h, spont);
            assert_eq!(r.certificate.len(), h.vertex_count() - r.value);
            assert!(r.certificate.check(&h, &r.witness).is_ok());
        }
    }

    #[test]
    fn next_combination_enumerates_lexicographically() {
        let mut c = vec![0, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }

    #[test]
    fn determinism_across_runs() {
        let h = gen_star_hypergraph(3, 2).unwrap();
        let a = solve(&h, true);
        let b = solve(&h, true);
        assert_eq!(a.value, b.value);
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.certificate, b.certificate);
        assert_eq!(a.stats.nodes, b.stats.nodes);
    }
}
