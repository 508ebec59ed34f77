//! Seeded Erdős–Rényi and Barabási–Albert generators.

use alloc::vec::Vec;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::math::round;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorKind {
    /// `G(n, M)` with `M = round(n ⟨k⟩ / 2)`.
    ErdosRenyi { mean_degree: f64 },
    /// Preferential attachment with `m` edges per new vertex.
    BarabasiAlbert { m: usize },
    /// Preferential attachment where each new vertex draws its `m` from
    /// `(m, weight)` choices.
    BarabasiAlbertMixed { choices: [(usize, f64); 2] },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph> {
        match self.kind {
            GeneratorKind::ErdosRenyi { mean_degree } => generate_er(self.n, mean_degree, self.seed),
            GeneratorKind::BarabasiAlbert { m } => generate_ba(self.n, m, self.seed),
            GeneratorKind::BarabasiAlbertMixed { choices } => {
                generate_ba_mixed(self.n, &choices, self.seed)
            }
        }
    }
}

/// Maps a linear index in `0..n(n-1)/2` to the pair `(i, j)`, `i < j`, in
/// row-major order of the strict upper triangle.
fn pair_from_index(n: usize, k: usize) -> (usize, usize) {
    let row_start = |i: usize| i * (2 * n - i - 1) / 2;
    let (mut lo, mut hi) = (0, n - 1);
    while lo + 1 < hi {
        let mid = (lo + hi) / 2;
        if row_start(mid) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let i = if row_start(hi) <= k { hi } else { lo };
    (i, i + 1 + (k - row_start(i)))
}

/// Uniform simple graph with exactly `round(n · mean_degree / 2)` edges.
pub fn generate_er(n: usize, mean_degree: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter { name: "n", reason: "must be >= 2" });
    }
    if !mean_degree.is_finite() || mean_degree <= 0.0 {
        return Err(Error::InvalidParameter { name: "mean degree", reason: "must be > 0" });
    }
    let pairs = n * (n - 1) / 2;
    let m = round(n as f64 * mean_degree / 2.0);
    if m > pairs as f64 {
        return Err(Error::InvalidParameter {
            name: "mean degree",
            reason: "more edges than vertex pairs",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = index::sample(&mut rng, pairs, m as usize).into_vec();
    chosen.sort_unstable();
    Graph::from_index_edges(n, chosen.into_iter().map(|k| pair_from_index(n, k)))
}

/// Barabási–Albert growth from a complete seed on `m + 1` vertices.
pub fn generate_ba(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter { name: "m", reason: "must be >= 1" });
    }
    if m >= n {
        return Err(Error::InvalidParameter { name: "m", reason: "must be < n" });
    }
    grow(n, m, seed, |_| m)
}

/// Preferential attachment with a per-vertex `m`. With `[(2, 0.6), (3, 0.4)]`
/// the expected mean degree is 4.8.
pub fn generate_ba_mixed(n: usize, choices: &[(usize, f64); 2], seed: u64) -> Result<Graph> {
    let [(m1, w1), (m2, w2)] = *choices;
    if m1 < 1 || m2 < 1 {
        return Err(Error::InvalidParameter { name: "m", reason: "must be >= 1" });
    }
    let top = m1.max(m2);
    if top >= n {
        return Err(Error::InvalidParameter { name: "m", reason: "must be < n" });
    }
    if !(w1 >= 0.0 && w2 >= 0.0 && w1 + w2 > 0.0) {
        return Err(Error::InvalidParameter { name: "weights", reason: "must be >= 0 with positive sum" });
    }
    let p1 = w1 / (w1 + w2);
    // Attachment draws and m draws come from separate streams.
    let mut pick = ChaCha8Rng::seed_from_u64(seed);
    pick.set_stream(1);
    grow(n, top, seed, move |_| if pick.gen::<f64>() < p1 { m1 } else { m2 })
}

fn grow(n: usize, seed_size_m: usize, seed: u64, mut m_for: impl FnMut(usize) -> usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core = seed_size_m + 1;
    let mut edges = Vec::new();
    // Each vertex appears once per incident edge end.
    let mut ends: Vec<usize> = Vec::new();
    for i in 0..core {
        for j in i + 1..core {
            edges.push((i, j));
            ends.push(i);
            ends.push(j);
        }
    }
    let mut targets = Vec::new();
    for v in core..n {
        let m = m_for(v);
        targets.clear();
        while targets.len() < m {
            let t = ends[rng.gen_range(0..ends.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            ends.push(t);
            ends.push(v);
        }
    }
    Graph::from_index_edges(n, edges)
}
