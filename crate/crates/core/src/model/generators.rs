//! Instance generators.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Hypergraph, ModelError};

/// The generalized star with `l` hyperedges of `k` degree-one vertices each,
/// all meeting in the central vertex `0`. The result is `(k+1)`-uniform on
/// `k*l + 1` vertices; its lazy burning number is `(k-1)*l + 1`.
pub fn gen_star_hypergraph(k: usize, l: usize) -> Result<Hypergraph, ModelError> {
    if k < 2 || l < 2 {
        return Err(ModelError::BadParameter(format!(
            "star generator needs k >= 2 and l >= 2, got k = {k}, l = {l}"
        )));
    }
    let n = k * l + 1;
    let edges = (0..l)
        .map(|i| {
            let mut e = vec![0];
            e.extend((0..k).map(|t| 1 + i * k + t));
            e
        })
        .collect();
    Hypergraph::new(n, edges)
}

/// The `n`-uniform hypergraph of the cyclic Latin square
/// `L(i, j) = (i + j) mod n`: one vertex per cell (cell `(i, j)` has id
/// `i*n + j`) and `3n` hyperedges of size `n` — the rows, the columns, and
/// the symbol classes, in that order.
pub fn gen_latin_square_hypergraph(n: usize) -> Result<Hypergraph, ModelError> {
    if n == 0 {
        return Err(ModelError::BadParameter("latin square order must be >= 1".into()));
    }
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((0..n).map(|j| i * n + j).collect());
    }
    for j in 0..n {
        edges.push((0..n).map(|i| i * n + j).collect());
    }
    for s in 0..n {
        edges.push((0..n).map(|i| i * n + (s + n - i % n) % n).collect());
    }
    Hypergraph::new(n * n, edges)
}

/// A seeded random hypergraph: `m` independent hyperedges, each drawn by
/// picking a size `s` uniformly from `[size_min, size_max]` and then `s`
/// distinct vertices uniformly without replacement.
///
/// Deterministic for a fixed seed: the stream is ChaCha8 seeded with
/// `seed`, sizes are `size_min + next_u64() % span`, and members are drawn
/// by rejection (`next_u64() % n`, retrying on repeats within the edge).
pub fn gen_random_hypergraph(
    n: usize,
    m: usize,
    size_min: usize,
    size_max: usize,
    seed: u64,
) -> Result<Hypergraph, ModelError> {
    if size_min < 1 || size_min > size_max || size_max > n {
        return Err(ModelError::BadParameter(format!(
            "need 1 <= size_min <= size_max <= n, got size_min = {size_min}, \
             size_max = {size_max}, n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = (size_max - size_min + 1) as u64;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let s = size_min + (rng.next_u64() % span) as usize;
        let mut picked = std::collections::BTreeSet::new();
        while picked.len() < s {
            picked.insert((rng.next_u64() % n as u64) as usize);
        }
        edges.push(picked.into_iter().collect());
    }
    Hypergraph::new(n, edges)
}
