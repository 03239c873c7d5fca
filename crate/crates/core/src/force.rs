//! Zero forcing and skew zero forcing on graphs, with exact minimum
//! computations for cross-validation against lazy burning.

use serde::Serialize;
use thiserror::Error;

use crate::model::{Graph, ModelError, VertexSet};
use crate::solve::next_combination;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForceError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("graph has {n} vertices, above the exact-search limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// Exact-search budget for [`z_exact`] and [`z0_exact`]. These problems are
/// NP-complete; the subset search is meant for desk-scale instances and
/// fails loudly beyond the limit (hard cap 63 vertices).
#[derive(Debug, Clone)]
pub struct ForceLimits {
    pub max_vertices: usize,
}

impl Default for ForceLimits {
    fn default() -> Self {
        ForceLimits { max_vertices: 25 }
    }
}

/// One forcing run. Rounds are synchronous: the state at the start of a
/// round determines every force fired in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForceTrace {
    /// Initially black vertices.
    pub seed: VertexSet,
    /// `(forcer, forced)` pairs per round, sorted by forcer id; a shared
    /// target is credited to its lowest forcer.
    pub rounds: Vec<Vec<(usize, usize)>>,
    /// Black vertices at the fixpoint.
    #[serde(skip)]
    pub black: VertexSet,
    pub complete: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Rule {
    /// A black vertex with exactly one white neighbor forces it.
    Zero,
    /// Any vertex with exactly one white neighbor forces it.
    Skew,
}

fn run(g: &Graph, seed: &VertexSet, rule: Rule) -> Result<ForceTrace, ForceError> {
    let n = g.vertex_count();
    seed.check_within(n)?;
    let mut black = vec![false; n];
    for v in seed.iter() {
        black[v] = true;
    }
    let mut rounds = Vec::new();
    loop {
        // claims[forced] = lowest forcer
        let mut claims: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
        for u in 0..n {
            if rule == Rule::Zero && !black[u] {
                continue;
            }
            let mut white = g.neighbors(u).iter().filter(|&&v| !black[v]);
            if let (Some(&v), None) = (white.next(), white.next()) {
                claims.entry(v).or_insert(u);
            }
        }
        if claims.is_empty() {
            break;
        }
        let mut pairs: Vec<(usize, usize)> = claims.iter().map(|(&v, &u)| (u, v)).collect();
        pairs.sort_unstable();
        for &(_, v) in &pairs {
            black[v] = true;
        }
        rounds.push(pairs);
    }
    let black_set: VertexSet = (0..n).filter(|&v| black[v]).collect();
    let complete = black_set.len() == n;
    Ok(ForceTrace { seed: seed.clone(), rounds, black: black_set, complete })
}

/// Zero forcing from `seed` to the fixpoint.
pub fn zero_force(g: &Graph, seed: &VertexSet) -> Result<ForceTrace, ForceError> {
    run(g, seed, Rule::Zero)
}

/// Skew zero forcing from `seed` to the fixpoint: the forcer need not be
/// black.
pub fn skew_zero_force(g: &Graph, seed: &VertexSet) -> Result<ForceTrace, ForceError> {
    run(g, seed, Rule::Skew)
}

fn exact_minimum(g: &Graph, limits: &ForceLimits, rule: Rule) -> Result<(usize, VertexSet), ForceError> {
    let n = g.vertex_count();
    let cap = limits.max_vertices.min(63);
    if n > cap {
        return Err(ForceError::TooLarge { n, limit: cap });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let forces_all = |seed: u64| -> bool {
        let mut black = seed;
        loop {
            if black == full {
                return true;
            }
            let mut newly = 0u64;
            for u in 0..n {
                if rule == Rule::Zero && black >> u & 1 == 0 {
                    continue;
                }
                let white = adj[u] & !black;
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
    // increasing size, lexicographic within each size: the first hit is the
    // lexicographically least witness of minimum size
    for k in 0..=n {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let seed = comb.iter().fold(0u64, |m, &v| m | (1 << v));
            if forces_all(seed) {
                return Ok((k, comb.into_iter().collect()));
            }
            if !next_combination(&mut comb, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set forces everything");
}

/// The zero forcing number with a lexicographically least witness.
pub fn z_exact(g: &Graph, limits: &ForceLimits) -> Result<(usize, VertexSet), ForceError> {
    exact_minimum(g, limits, Rule::Zero)
}

/// The skew zero forcing number with a lexicographically least witness.
/// Always at most [`z_exact`].
pub fn z0_exact(g: &Graph, limits: &ForceLimits) -> Result<(usize, VertexSet), ForceError> {
    exact_minimum(g, limits, Rule::Skew)
}
