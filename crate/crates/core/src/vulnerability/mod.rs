//! The fractal-weighted index `V_dB` and the baseline robustness metrics it
//! is judged against.

mod attack;

pub use attack::{rb_attack, AttackTrace, NormalizedPost, RemovedVertex, TieRule};

use crate::betweenness::BetweennessProfile;
use crate::error::{Error, Result};
use crate::fractal::{self, BoxCoverConfig, BoxCoverCurve, FitOptions, FractalFit};
use crate::graph::{DistanceMatrix, Graph, UNREACHABLE};

/// Mean of `1/d(v,w)` over ordered distinct pairs; unreachable pairs add 0.
pub fn inverse_geodesic_length(dm: &DistanceMatrix) -> Result<f64> {
    let n = dm.n();
    if n < 2 {
        return Err(Error::UndefinedMetric {
            metric: "inverse geodesic length",
            reason: "needs at least 2 vertices",
        });
    }
    let mut sum = 0.0;
    for v in 0..n {
        for (w, &d) in dm.row(v).iter().enumerate() {
            if w != v && d != UNREACHABLE {
                sum += 1.0 / d as f64;
            }
        }
    }
    let nf = n as f64;
    Ok(sum / (nf * (nf - 1.0)))
}

/// Fraction of vertices in the largest component.
pub fn largest_component_size(dm: &DistanceMatrix) -> Result<f64> {
    let largest = dm.component_sizes().iter().copied().max().ok_or(Error::UndefinedMetric {
        metric: "largest component size",
        reason: "graph has no vertices",
    })?;
    Ok(largest as f64 / dm.n() as f64)
}

/// `b_p` on pair-normalized edge betweenness with `p = d_b`.
pub fn v_db(profile: &BetweennessProfile, d_b: f64) -> Result<f64> {
    if !d_b.is_finite() || d_b <= 0.0 {
        return Err(Error::InvalidParameter { name: "d_B", reason: "must be a finite value > 0" });
    }
    profile.bp(d_b, true)
}

/// Per-graph metric summary. Metrics that are undefined for the graph
/// (no edges, too few vertices) are `None`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct VulnerabilityReport {
    pub n: usize,
    pub edge_count: usize,
    #[cfg_attr(feature = "serde", serde(rename = "vDB", skip_serializing_if = "Option::is_none"))]
    pub v_db: Option<f64>,
    #[cfg_attr(feature = "serde", serde(rename = "dB", skip_serializing_if = "Option::is_none"))]
    pub d_b: Option<f64>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub b1_raw: Option<f64>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub b1_normalized: Option<f64>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub b_nor: Option<f64>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub inv_geo: Option<f64>,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub lcs: Option<f64>,
}

impl VulnerabilityReport {
    /// Everything except the dimension-dependent fields.
    pub fn baseline(dm: &DistanceMatrix, profile: &BetweennessProfile) -> Self {
        VulnerabilityReport {
            n: profile.n,
            edge_count: profile.edge_count(),
            v_db: None,
            d_b: None,
            b1_raw: profile.b1().ok(),
            b1_normalized: profile.b1_normalized().ok(),
            b_nor: profile.b_nor().ok(),
            inv_geo: inverse_geodesic_length(dm).ok(),
            lcs: largest_component_size(dm).ok(),
        }
    }

    pub fn with_dimension(mut self, profile: &BetweennessProfile, d_b: f64) -> Self {
        self.d_b = Some(d_b);
        self.v_db = v_db(profile, d_b).ok();
        self
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct AnalysisOptions {
    pub box_cover: BoxCoverConfig,
    pub fit: FitOptions,
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub report: VulnerabilityReport,
    pub profile: BetweennessProfile,
    pub curve: BoxCoverCurve,
    pub fit: Result<FractalFit>,
}

/// Dimension estimate, betweenness, then the index and baselines.
pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<Analysis> {
    let dm = DistanceMatrix::compute(g);
    let curve = fractal::box_cover_curve_with(&dm, &opts.box_cover)?;
    let fit = fractal::fit_dimension(&curve, &opts.fit);
    let profile = BetweennessProfile::compute(g);
    let mut report = VulnerabilityReport::baseline(&dm, &profile);
    if let Ok(f) = &fit {
        report = report.with_dimension(&profile, f.d_b);
    }
    Ok(Analysis { report, profile, curve, fit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betweenness::edge_betweenness;

    fn complete(n: usize) -> Graph {
        Graph::from_index_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_index_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * a.abs().max(1.0)
    }

    #[test]
    fn inverse_geodesic_cases() {
        let dm = DistanceMatrix::compute(&complete(6));
        assert!(close(inverse_geodesic_length(&dm).unwrap(), 1.0));
        let dm = DistanceMatrix::compute(&Graph::from_index_edges(5, []).unwrap());
        assert_eq!(inverse_geodesic_length(&dm).unwrap(), 0.0);
        let dm = DistanceMatrix::compute(&path(3));
        assert!(close(inverse_geodesic_length(&dm).unwrap(), 5.0 / 6.0));
        let dm = DistanceMatrix::compute(&Graph::from_index_edges(1, []).unwrap());
        assert!(inverse_geodesic_length(&dm).is_err());
    }

    #[test]
    fn largest_component_cases() {
        let dm = DistanceMatrix::compute(&path(4));
        assert_eq!(largest_component_size(&dm).unwrap(), 1.0);
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("d", "e")]).unwrap();
        assert!(close(largest_component_size(&DistanceMatrix::compute(&g)).unwrap(), 0.6));
        // Bowtie minus its shared vertex leaves two disjoint edges.
        let bowtie = Graph::from_index_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
            .unwrap();
        let residual = bowtie.without_vertices(&[2]);
        let dm = DistanceMatrix::compute(&residual);
        assert_eq!(largest_component_size(&dm).unwrap(), 0.5);
    }

    #[test]
    fn v_db_matches_normalized_power_mean() {
        let p = edge_betweenness(&path(12));
        assert_eq!(v_db(&p, 1.0).unwrap(), p.b1_normalized().unwrap());
        assert!(v_db(&p, 0.0).is_err());
        assert!(v_db(&p, -2.0).is_err());
        assert!(v_db(&p, 2.0).unwrap() <= v_db(&p, 3.0).unwrap());
        let cyc = Graph::from_index_edges(9, (0..9).map(|i| (i, (i + 1) % 9))).unwrap();
        let pc = edge_betweenness(&cyc);
        let c = pc.normalized_edge_values()[0];
        for d in [0.7, 1.0, 2.3, 5.0] {
            assert!(close(v_db(&pc, d).unwrap(), c));
        }
    }

    #[test]
    fn report_on_complete_graph() {
        let a = analyze(&complete(5), &AnalysisOptions::default()).unwrap();
        assert_eq!(a.report.b_nor, Some(0.0));
        assert!(close(a.report.inv_geo.unwrap(), 1.0));
        assert_eq!(a.report.lcs, Some(1.0));
        assert!(a.report.v_db.is_some());
    }

    #[test]
    fn report_on_edgeless_graph_omits_undefined() {
        let g = Graph::from_index_edges(3, []).unwrap();
        let a = analyze(&g, &AnalysisOptions::default()).unwrap();
        assert!(a.fit.is_err());
        assert_eq!(a.report.b1_raw, None);
        assert_eq!(a.report.v_db, None);
        assert_eq!(a.report.inv_geo, Some(0.0));
        assert!(close(a.report.lcs.unwrap(), 1.0 / 3.0));
    }
}
