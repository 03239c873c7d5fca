//! Closed-form lower and upper bounds on the lazy burning number, their
//! dual forms, and a composite report.
//!
//! Every real-valued bound is ceilinged before reporting since the burning
//! number is an integer. The dual bounds evaluate the primal formulas on the
//! dual's data (degrees and co-occurrence counts of non-isolated vertices)
//! and add the `|V| - |E|` shift; isolated vertices carry no dual hyperedge,
//! so they are excluded from the dual statistics.

use serde::Serialize;
use thiserror::Error;

use crate::burn::closure_flags;
use crate::model::{Hypergraph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("t = {t} outside 1..={max} for the intersection bound")]
    BadT { t: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// One named bound with its applicability flag. `value` is `None` exactly
/// when the bound's hypothesis fails, with the reason in `note`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: BoundKind,
    pub value: Option<i64>,
    pub applicable: bool,
    pub note: String,
}

impl BoundEntry {
    fn applicable(name: &str, kind: BoundKind, value: i64, note: &str) -> Self {
        BoundEntry { name: name.into(), kind, value: Some(value), applicable: true, note: note.into() }
    }

    fn inapplicable(name: &str, kind: BoundKind, note: &str) -> Self {
        BoundEntry { name: name.into(), kind, value: None, applicable: false, note: note.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
    /// Largest applicable lower bound, floored at 0.
    pub best_lower: u64,
    /// Smallest applicable upper bound, capped at the vertex count.
    pub best_upper: u64,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + if a.rem_euclid(b) != 0 { 1 } else { 0 }
}

fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Degrees of the non-isolated vertices — the dual's edge cardinalities —
/// in increasing order.
fn dual_edge_sizes(h: &Hypergraph) -> Vec<usize> {
    let mut d: Vec<usize> = h.degrees().into_iter().filter(|&d| d > 0).collect();
    d.sort_unstable();
    d
}

/// `|V| - |E|`, floored at zero: burning spreads along each hyperedge to at
/// most one new vertex.
pub fn lb_trivial(h: &Hypergraph) -> u64 {
    h.vertex_count().saturating_sub(h.edge_count()) as u64
}

/// The intersection bound at parameter `t`: the `t` smallest edge
/// cardinalities summed, minus the maximal pairwise overlap paid per edge
/// pair, minus `t`. Valid as a lower bound only for `t` up to the maximum
/// C-matching size; `t = 1` is always safe when there is an edge.
pub fn lb_intersection(h: &Hypergraph, t: usize) -> Result<i64, BoundsError> {
    let m = h.edge_count();
    if t < 1 || t > m {
        return Err(BoundsError::BadT { t, max: m });
    }
    let mut sizes: Vec<usize> = h.edges().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    let d_t: i64 = sizes[..t].iter().map(|&s| s as i64).sum();
    let overlap = h.max_edge_overlap() as i64;
    Ok(d_t - overlap * choose2(t as i64) - t as i64)
}

/// The dual intersection bound at parameter `t`: the intersection bound on
/// the dual (degrees play the role of edge sizes, co-occurrence the role of
/// overlap) plus the `|V| - |E|` shift.
pub fn lb_dual_intersection(h: &Hypergraph, t: usize) -> Result<i64, BoundsError> {
    let sizes = dual_edge_sizes(h);
    if t < 1 || t > sizes.len() {
        return Err(BoundsError::BadT { t, max: sizes.len() });
    }
    let d_t: i64 = sizes[..t].iter().map(|&s| s as i64).sum();
    let lambda = h.max_pair_multiplicity() as i64;
    let shift = h.vertex_count() as i64 - h.edge_count() as i64;
    Ok(shift + d_t - lambda * choose2(t as i64) - t as i64)
}

fn uniformity_value(r: i64, lambda: i64) -> i64 {
    // ceil((r-1)^2 / 2λ + (r-1)/2 - 3λ/8) over the common denominator 8λ
    ceil_div(4 * (r - 1) * (r - 1) + 4 * lambda * (r - 1) - 3 * lambda * lambda, 8 * lambda)
}

fn uniformity_hypothesis(r: i64, lambda: i64) -> i64 {
    // ceil((r-1)/λ + 1/2)
    ceil_div(2 * (r - 1) + lambda, 2 * lambda)
}

/// The uniformity bound: applicable when some pair of edges intersects
/// (`λ̄ >= 1`) and the vertex count is at least `ceil((r-1)/λ̄ + 1/2)`, where
/// `r` is the minimum edge cardinality.
pub fn lb_uniformity(h: &Hypergraph) -> Option<i64> {
    let r = h.min_edge_size()? as i64;
    let lambda = h.max_edge_overlap() as i64;
    if lambda < 1 || (h.vertex_count() as i64) < uniformity_hypothesis(r, lambda) {
        return None;
    }
    Some(uniformity_value(r, lambda))
}

/// The dual uniformity bound: minimum non-isolated degree `δ` in place of
/// `r`, co-occurrence `λ` in place of the overlap, at least
/// `ceil((δ-1)/λ + 1/2)` hyperedges, plus the `|V| - |E|` shift.
pub fn lb_dual_uniformity(h: &Hypergraph) -> Option<i64> {
    let delta = *dual_edge_sizes(h).first()? as i64;
    let lambda = h.max_pair_multiplicity() as i64;
    if lambda < 1 || (h.edge_count() as i64) < uniformity_hypothesis(delta, lambda) {
        return None;
    }
    let shift = h.vertex_count() as i64 - h.edge_count() as i64;
    Some(shift + uniformity_value(delta, lambda))
}

/// The linear-hypergraph bound `C(r, 2)`: applicable when edges pairwise
/// share at most one vertex and there are at least `r` of them.
pub fn lb_linear(h: &Hypergraph) -> Option<i64> {
    let r = h.min_edge_size()?;
    if h.max_edge_overlap() <= 1 && h.edge_count() >= r {
        Some(choose2(r as i64))
    } else {
        None
    }
}

/// The dual linear bound `|V| - |E| + C(δ, 2)`: applicable when no vertex
/// pair co-occurs twice and the dual has at least `δ` hyperedges, i.e. at
/// least `δ` non-isolated vertices.
pub fn lb_dual_linear(h: &Hypergraph) -> Option<i64> {
    let sizes = dual_edge_sizes(h);
    let delta = *sizes.first()?;
    if h.max_pair_multiplicity() <= 1 && sizes.len() >= delta {
        Some(h.vertex_count() as i64 - h.edge_count() as i64 + choose2(delta as i64))
    } else {
        None
    }
}

/// The dual corollaries bundled with their applicability flags:
/// `dual_intersection[1]`, `dual_uniformity`, and `dual_linear`.
pub fn lb_dual_family(h: &Hypergraph) -> Vec<BoundEntry> {
    let mut entries = Vec::new();
    entries.push(match lb_dual_intersection(h, 1) {
        Ok(v) => BoundEntry::applicable("dual_intersection[1]", BoundKind::Lower, v, ""),
        Err(_) => BoundEntry::inapplicable(
            "dual_intersection[1]",
            BoundKind::Lower,
            "no non-isolated vertices",
        ),
    });
    entries.push(match lb_dual_uniformity(h) {
        Some(v) => BoundEntry::applicable("dual_uniformity", BoundKind::Lower, v, ""),
        None => BoundEntry::inapplicable(
            "dual_uniformity",
            BoundKind::Lower,
            "needs a co-occurring pair and enough hyperedges",
        ),
    });
    entries.push(match lb_dual_linear(h) {
        Some(v) => BoundEntry::applicable("dual_linear", BoundKind::Lower, v, ""),
        None => BoundEntry::inapplicable(
            "dual_linear",
            BoundKind::Lower,
            "needs pairwise co-occurrence at most one and enough non-isolated vertices",
        ),
    });
    entries
}

/// Vertex-cover upper bound `|V| - ceil(|E| / Δ)`. Needs at least one edge.
pub fn ub_degree(h: &Hypergraph) -> Option<u64> {
    if h.edge_count() == 0 {
        return None;
    }
    let max_deg = h.degrees().into_iter().max().unwrap_or(0) as i64;
    Some((h.vertex_count() as i64 - ceil_div(h.edge_count() as i64, max_deg)) as u64)
}

/// Edge-cover upper bound `|V| - ceil(|V| / Δ̄)`. Needs every vertex covered
/// by some edge.
pub fn ub_cardinality(h: &Hypergraph) -> Option<u64> {
    if h.edge_count() == 0 || !h.isolated_vertices().is_empty() {
        return None;
    }
    let max_size = h.max_edge_size().expect("has edges") as i64;
    Some((h.vertex_count() as i64 - ceil_div(h.vertex_count() as i64, max_size)) as u64)
}

/// Greedy constructive upper bound: repeatedly add the vertex whose
/// addition burns the most (lowest id on ties) until the seed burns
/// everything. Always returns a genuine burning set.
pub fn ub_greedy(h: &Hypergraph, spontaneous: bool) -> (u64, VertexSet) {
    let n = h.vertex_count();
    let mut seed = vec![false; n];
    loop {
        let (_, count) = closure_flags(h, &seed, spontaneous);
        if count == n {
            break;
        }
        let mut best: Option<(usize, usize)> = None;
        for v in 0..n {
            if seed[v] {
                continue;
            }
            seed[v] = true;
            let (_, gain) = closure_flags(h, &seed, spontaneous);
            seed[v] = false;
            if best.map_or(true, |(g, _)| gain > g) {
                best = Some((gain, v));
            }
        }
        let (_, v) = best.expect("unburned vertices remain");
        seed[v] = true;
    }
    let set: VertexSet = (0..n).filter(|&v| seed[v]).collect();
    (set.len() as u64, set)
}

/// Evaluates every bound and assembles the composite report.
///
/// The intersection bounds need `t` at most the maximum C-matching size,
/// which is unknowable without solving; only `t = 1` is auto-included.
/// Supplying a solver-certified maximum C-matching size via `certified_m`
/// opts in to the larger `t`. The greedy upper bound uses the spontaneous
/// model, matching the burning number the other entries bound.
pub fn bound_report(h: &Hypergraph, certified_m: Option<usize>) -> BoundReport {
    let n = h.vertex_count();
    let m = h.edge_count();
    let mut entries = Vec::new();

    entries.push(BoundEntry::applicable("trivial", BoundKind::Lower, lb_trivial(h) as i64, ""));

    let t_hi = certified_m.unwrap_or(1).min(m).max(1);
    for t in 1..=t_hi {
        let name = format!("intersection[{t}]");
        entries.push(match lb_intersection(h, t) {
            Ok(v) => {
                let note = if t > 1 { "caller-certified t" } else { "" };
                BoundEntry::applicable(&name, BoundKind::Lower, v, note)
            }
            Err(_) => BoundEntry::inapplicable(&name, BoundKind::Lower, "no hyperedges"),
        });
    }

    entries.push(match lb_uniformity(h) {
        Some(v) => BoundEntry::applicable("uniformity", BoundKind::Lower, v, ""),
        None => BoundEntry::inapplicable(
            "uniformity",
            BoundKind::Lower,
            "needs an intersecting edge pair and enough vertices",
        ),
    });
    entries.push(match lb_linear(h) {
        Some(v) => BoundEntry::applicable("linear", BoundKind::Lower, v, ""),
        None => BoundEntry::inapplicable(
            "linear",
            BoundKind::Lower,
            "needs a linear hypergraph with at least r hyperedges",
        ),
    });

    let ni = dual_edge_sizes(h).len();
    let dual_t_hi = certified_m.unwrap_or(1).min(ni).max(1);
    for t in 1..=dual_t_hi {
        let name = format!("dual_intersection[{t}]");
        entries.push(match lb_dual_intersection(h, t) {
            Ok(v) => {
                let note = if t > 1 { "caller-certified t" } else { "" };
                BoundEntry::applicable(&name, BoundKind::Lower, v, note)
            }
            Err(_) => BoundEntry::inapplicable(&name, BoundKind::Lower, "no non-isolated vertices"),
        });
    }
    entries.extend(lb_dual_family(h).into_iter().skip(1)); // uniformity + linear

    entries.push(match ub_degree(h) {
        Some(v) => BoundEntry::applicable("degree_upper", BoundKind::Upper, v as i64, ""),
        None => BoundEntry::inapplicable("degree_upper", BoundKind::Upper, "no hyperedges"),
    });
    entries.push(match ub_cardinality(h) {
        Some(v) => BoundEntry::applicable("cardinality_upper", BoundKind::Upper, v as i64, ""),
        None => BoundEntry::inapplicable(
            "cardinality_upper",
            BoundKind::Upper,
            "needs edges and no isolated vertices",
        ),
    });
    let (greedy, _) = ub_greedy(h, true);
    entries.push(BoundEntry::applicable("greedy_upper", BoundKind::Upper, greedy as i64, ""));

    let best_lower = entries
        .iter()
        .filter(|e| e.kind == BoundKind::Lower && e.applicable)
        .filter_map(|e| e.value)
        .max()
        .unwrap_or(0)
        .max(0) as u64;
    let best_upper = entries
        .iter()
        .filter(|e| e.kind == BoundKind::Upper && e.applicable)
        .filter_map(|e| e.value)
        .min()
        .unwrap_or(n as i64)
        .min(n as i64) as u64;

    BoundReport { entries, best_lower, best_upper }
}
