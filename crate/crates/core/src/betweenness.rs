//! Exact edge and vertex betweenness, the multi-scale power means `b_p`,
//! normalized average edge betweenness, and the exponent search that
//! separates graphs whose `b_1` ties.
//!
//! Betweenness sums over unordered pairs of distinct vertices. A pair whose
//! geodesic is a single edge still contributes to that edge, so every edge
//! of a complete graph scores exactly 1 and a path `P_N` averages
//! `N(N+1)/6`. Pairs in different components contribute nothing.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use crate::math::powf;

/// Raw per-edge and per-vertex betweenness of one graph.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct BetweennessProfile {
    /// Indexed by edge id.
    pub edge_values: Vec<f64>,
    /// Pairs containing the vertex itself are excluded.
    pub vertex_values: Vec<f64>,
    pub n: usize,
}

/// Reusable buffers for one single-source accumulation pass.
struct Scratch {
    dist: Vec<u32>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            dist: vec![UNREACHABLE; n],
            sigma: vec![0.0; n],
            delta: vec![0.0; n],
            order: Vec::with_capacity(n),
        }
    }

    fn accumulate(&mut self, g: &Graph, s: usize, edges: &mut [f64], vertices: &mut [f64]) {
        for &v in &self.order {
            self.dist[v] = UNREACHABLE;
            self.sigma[v] = 0.0;
            self.delta[v] = 0.0;
        }
        self.order.clear();

        self.dist[s] = 0;
        self.sigma[s] = 1.0;
        self.order.push(s);
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head];
            head += 1;
            let next = self.dist[v] + 1;
            for &w in g.neighbors(v) {
                if self.dist[w] == UNREACHABLE {
                    self.dist[w] = next;
                    self.order.push(w);
                }
                if self.dist[w] == next {
                    self.sigma[w] += self.sigma[v];
                }
            }
        }

        for &w in self.order.iter().rev() {
            let dw = self.dist[w];
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for (v, e) in g.incident(w) {
                if self.dist[v] != UNREACHABLE && self.dist[v] + 1 == dw {
                    let c = self.sigma[v] * coeff;
                    edges[e] += c;
                    self.delta[v] += c;
                }
            }
            if w != s {
                vertices[w] += self.delta[w];
            }
        }
    }
}

/// Dependency accumulation over the shortest-path DAG of every source.
pub fn edge_betweenness(g: &Graph) -> BetweennessProfile {
    let n = g.n();
    let mut edge_values = vec![0.0; g.edge_count()];
    let mut vertex_values = vec![0.0; n];
    let mut scratch = Scratch::new(n);
    for s in 0..n {
        scratch.accumulate(g, s, &mut edge_values, &mut vertex_values);
    }
    // Every unordered pair was visited from both ends.
    for x in edge_values.iter_mut().chain(vertex_values.iter_mut()) {
        *x *= 0.5;
    }
    BetweennessProfile { edge_values, vertex_values, n }
}

/// Power mean `((1/m) Σ x^p)^(1/p)`, evaluated relative to the maximum so
/// large exponents do not overflow. `p == 1` is the plain mean.
pub fn power_mean(values: &[f64], p: f64) -> f64 {
    let len = values.len() as f64;
    if p == 1.0 {
        return values.iter().sum::<f64>() / len;
    }
    let max = values.iter().copied().fold(0.0, f64::max);
    if max == 0.0 {
        return 0.0;
    }
    let sum: f64 = values.iter().map(|&x| powf(x / max, p)).sum();
    max * powf(sum / len, 1.0 / p)
}

impl BetweennessProfile {
    pub fn compute(g: &Graph) -> Self {
        edge_betweenness(g)
    }

    /// `N(N-1)/2`, the number of unordered vertex pairs.
    pub fn normalization_factor(&self) -> f64 {
        let n = self.n as f64;
        n * (n - 1.0) / 2.0
    }

    pub fn edge_count(&self) -> usize {
        self.edge_values.len()
    }

    /// Edge values divided by the pair count.
    pub fn normalized_edge_values(&self) -> Vec<f64> {
        let f = self.normalization_factor();
        self.edge_values.iter().map(|&b| b / f).collect()
    }

    fn require_edges(&self, metric: &'static str) -> Result<()> {
        if self.edge_values.is_empty() {
            Err(Error::UndefinedMetric { metric, reason: "graph has no edges" })
        } else {
            Ok(())
        }
    }

    /// Average raw edge betweenness.
    pub fn b1(&self) -> Result<f64> {
        self.bp(1.0, false)
    }

    pub fn b1_normalized(&self) -> Result<f64> {
        self.bp(1.0, true)
    }

    /// Multi-scale vulnerability: power mean of the edge betweenness with
    /// exponent `p`, on pair-normalized values when `normalized` is set.
    pub fn bp(&self, p: f64, normalized: bool) -> Result<f64> {
        if !p.is_finite() || p <= 0.0 {
            return Err(Error::InvalidParameter { name: "p", reason: "must be a finite value > 0" });
        }
        self.require_edges("b_p")?;
        if normalized {
            Ok(power_mean(&self.normalized_edge_values(), p))
        } else {
            Ok(power_mean(&self.edge_values, p))
        }
    }

    /// `(b_1 - 1) / (N(N+1)/6 - 1)`: 0 for a complete graph, 1 for a path.
    pub fn b_nor(&self) -> Result<f64> {
        let b1 = self.b1()?;
        if self.n <= 2 {
            return Err(Error::UndefinedMetric {
                metric: "b_nor",
                reason: "needs at least 3 vertices",
            });
        }
        let n = self.n as f64;
        Ok((b1 - 1.0) / (n * (n + 1.0) / 6.0 - 1.0))
    }
}

/// Which argument of [`p_search`] a verdict refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PSearchConfig {
    pub p_max: u32,
    pub tie_eps: f64,
    /// Compare pair-normalized values instead of raw counts.
    pub normalized: bool,
}

impl Default for PSearchConfig {
    fn default() -> Self {
        PSearchConfig { p_max: 50, tie_eps: 1e-12, normalized: false }
    }
}

/// Outcome of a two-graph exponent search.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct PSearchResult {
    pub p_star: u32,
    /// The graph with the larger `b_p` at `p_star`.
    pub more_vulnerable: Side,
    pub b1_a: f64,
    pub b1_b: f64,
    /// `b_p(A)` at `p_star`.
    pub bp_a: f64,
    /// `b_p(B)` at `p_star`.
    pub bp_b: f64,
    /// `(p, f(p))` with `f(p) = (b_p(V) - b_p(R)) / b_p(V)`, `V` the more
    /// vulnerable graph and `R` the other.
    pub f_curve: Vec<(u32, f64)>,
}

/// Exponent search on two graphs.
pub fn p_search(a: &Graph, b: &Graph, cfg: &PSearchConfig) -> Result<PSearchResult> {
    p_search_profiles(&edge_betweenness(a), &edge_betweenness(b), cfg)
}

/// Compares `b_1` first; on a tie scans integer `p = 1..=p_max` and picks
/// the exponent where the relative difference `f(p)` peaks.
pub fn p_search_profiles(
    a: &BetweennessProfile,
    b: &BetweennessProfile,
    cfg: &PSearchConfig,
) -> Result<PSearchResult> {
    if cfg.p_max < 1 {
        return Err(Error::InvalidParameter { name: "p_max", reason: "must be >= 1" });
    }
    if cfg.tie_eps.is_nan() || cfg.tie_eps < 0.0 {
        return Err(Error::InvalidParameter { name: "tie_eps", reason: "must be >= 0" });
    }
    let norm = cfg.normalized;
    let b1_a = a.bp(1.0, norm)?;
    let b1_b = b.bp(1.0, norm)?;

    if (b1_a - b1_b).abs() > cfg.tie_eps {
        let (side, f) = orient(b1_a, b1_b);
        return Ok(PSearchResult {
            p_star: 1,
            more_vulnerable: side,
            b1_a,
            b1_b,
            bp_a: b1_a,
            bp_b: b1_b,
            f_curve: vec![(1, f)],
        });
    }

    let mut samples = Vec::with_capacity(cfg.p_max as usize);
    for p in 1..=cfg.p_max {
        samples.push((p, a.bp(p as f64, norm)?, b.bp(p as f64, norm)?));
    }
    if samples.iter().all(|&(_, x, y)| (x - y).abs() <= cfg.tie_eps) {
        return Err(Error::Indistinguishable {
            curve: samples.iter().map(|&(p, x, y)| (p, x - y)).collect(),
        });
    }

    let rel = |x: f64, y: f64| if x > 0.0 { (x - y) / x } else { 0.0 };
    let best = |side: Side| {
        let mut arg = (0, f64::NEG_INFINITY);
        for &(p, x, y) in &samples {
            let f = if side == Side::A { rel(x, y) } else { rel(y, x) };
            if f > arg.1 {
                arg = (p, f);
            }
        }
        arg
    };
    let (pa, fa) = best(Side::A);
    let (pb, fb) = best(Side::B);
    let (side, p_star) = if fa >= fb { (Side::A, pa) } else { (Side::B, pb) };
    let f_curve = samples
        .iter()
        .map(|&(p, x, y)| (p, if side == Side::A { rel(x, y) } else { rel(y, x) }))
        .collect();
    let (_, bp_a, bp_b) = samples[(p_star - 1) as usize];
    Ok(PSearchResult { p_star, more_vulnerable: side, b1_a, b1_b, bp_a, bp_b, f_curve })
}

fn orient(x: f64, y: f64) -> (Side, f64) {
    if x >= y {
        (Side::A, (x - y) / x)
    } else {
        (Side::B, (y - x) / y)
    }
}
