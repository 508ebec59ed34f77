//! Recalculated-betweenness (RB) attack: repeatedly delete the vertex with
//! the highest current betweenness.

use alloc::string::String;
use alloc::vec::Vec;

use crate::betweenness::BetweennessProfile;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::math::ceil_count;

use super::VulnerabilityReport;

/// How to choose among vertices whose betweenness ties for the maximum.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TieRule {
    #[default]
    SmallestIndex,
    LargestIndex,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RemovedVertex {
    pub label: String,
    /// Index in the original graph.
    pub index: usize,
    /// Vertex betweenness on the residual graph at removal time.
    pub betweenness: f64,
}

/// Post-attack values divided by their pre-attack counterparts; `None`
/// when either side is undefined or the initial value is zero.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct NormalizedPost {
    pub inv_geo: Option<f64>,
    pub lcs: Option<f64>,
    pub b_nor: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct AttackTrace {
    pub fraction: f64,
    pub removed: Vec<RemovedVertex>,
    pub initial: VulnerabilityReport,
    pub post: VulnerabilityReport,
    pub normalized_post: NormalizedPost,
}

/// Relative slack under which two betweenness values count as tied.
const TIE_TOLERANCE: f64 = 1e-9;

fn pick(values: &[f64], rule: TieRule) -> Option<usize> {
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let slack = TIE_TOLERANCE * max.abs().max(1.0);
    let mut tied = values.iter().enumerate().filter(|&(_, &b)| b >= max - slack).map(|(i, _)| i);
    match rule {
        TieRule::SmallestIndex => tied.next(),
        TieRule::LargestIndex => tied.next_back(),
    }
}

fn ratio(post: Option<f64>, initial: Option<f64>) -> Option<f64> {
    match (post, initial) {
        (Some(p), Some(i)) if i != 0.0 => Some(p / i),
        _ => None,
    }
}

/// Removes `⌈fraction · N⌉` vertices, recomputing vertex betweenness on
/// the residual graph before every removal. Post-attack metrics use the
/// residual graph's own vertex count.
pub fn rb_attack(g: &Graph, fraction: f64, rule: TieRule) -> Result<AttackTrace> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::InvalidParameter { name: "fraction", reason: "must lie in (0, 1)" });
    }
    let target = ceil_count(fraction * g.n() as f64);
    if target == 0 {
        return Err(Error::InvalidParameter { name: "fraction", reason: "removes no vertices" });
    }

    let initial_dm = DistanceMatrix::compute(g);
    let initial = VulnerabilityReport::baseline(&initial_dm, &BetweennessProfile::compute(g));

    let mut residual = g.clone();
    let mut original: Vec<usize> = (0..g.n()).collect();
    let mut removed = Vec::with_capacity(target);
    let mut profile = BetweennessProfile::compute(&residual);
    for _ in 0..target {
        let Some(v) = pick(&profile.vertex_values, rule) else { break };
        removed.push(RemovedVertex {
            label: residual.label(v).into(),
            index: original[v],
            betweenness: profile.vertex_values[v],
        });
        residual = residual.without_vertices(&[v]);
        original.remove(v);
        profile = BetweennessProfile::compute(&residual);
    }

    let post = VulnerabilityReport::baseline(&DistanceMatrix::compute(&residual), &profile);
    let normalized_post = NormalizedPost {
        inv_geo: ratio(post.inv_geo, initial.inv_geo),
        lcs: ratio(post.lcs, initial.lcs),
        b_nor: ratio(post.b_nor, initial.b_nor),
    };
    Ok(AttackTrace { fraction, removed, initial, post, normalized_post })
}
