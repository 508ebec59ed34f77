//! Box-covering fractal dimension.
//!
//! A box of size `l_B` is a vertex set whose pairwise distances are all
//! strictly below `l_B`. Covers come from greedy coloring of the dual
//! relation "distance ≥ l_B" (vertices in different components always
//! conflict), run over random vertex orderings. The dimension is the
//! absolute slope of `ln N_B` against `ln l_B`.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::math::{ln, powf};
use crate::regression;

/// One greedy cover: `assignment[v]` is the box of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxCover {
    pub count: usize,
    pub assignment: Vec<usize>,
}

impl BoxCover {
    /// Member lists, one per box.
    pub fn boxes(&self) -> Vec<Vec<usize>> {
        let mut boxes = vec![Vec::new(); self.count];
        for (v, &b) in self.assignment.iter().enumerate() {
            boxes[b].push(v);
        }
        boxes
    }
}

/// Greedy smallest-available-color cover for box size `lb`, visiting
/// vertices in `ordering`.
///
/// The dual relation is never materialized: a vertex joins the first box
/// none of whose members lies at distance `≥ lb`.
pub fn cover_once(dm: &DistanceMatrix, lb: u32, ordering: &[usize]) -> Result<BoxCover> {
    if lb < 1 {
        return Err(Error::InvalidParameter { name: "l_B", reason: "box size must be >= 1" });
    }
    let n = dm.n();
    if ordering.len() != n {
        return Err(Error::InvalidParameter {
            name: "ordering",
            reason: "must be a permutation of the vertices",
        });
    }
    let mut assignment = vec![usize::MAX; n];
    for &v in ordering {
        if v >= n || assignment[v] != usize::MAX {
            return Err(Error::InvalidParameter {
                name: "ordering",
                reason: "must be a permutation of the vertices",
            });
        }
        assignment[v] = 0;
    }

    if lb == 1 {
        // Every pair conflicts, so each vertex opens its own box.
        for (i, &v) in ordering.iter().enumerate() {
            assignment[v] = i;
        }
        return Ok(BoxCover { count: n, assignment });
    }

    let mut boxes: Vec<Vec<usize>> = Vec::new();
    for &v in ordering {
        let row = dm.row(v);
        let slot = boxes
            .iter()
            .position(|members| members.iter().all(|&u| row[u] < lb));
        let b = match slot {
            Some(b) => b,
            None => {
                boxes.push(Vec::new());
                boxes.len() - 1
            }
        };
        boxes[b].push(v);
        assignment[v] = b;
    }
    Ok(BoxCover { count: boxes.len(), assignment })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxCoverConfig {
    /// Random orderings per box size.
    pub runs: usize,
    pub seed: u64,
    /// Keep the best cover found at each size.
    pub keep_assignments: bool,
}

impl Default for BoxCoverConfig {
    fn default() -> Self {
        BoxCoverConfig { runs: 100, seed: 42, keep_assignments: false }
    }
}

/// Box counts for `l_B = 1 ..= diameter + 1`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct BoxCoverCurve {
    #[cfg_attr(feature = "serde", serde(rename = "lB"))]
    pub sizes: Vec<u32>,
    #[cfg_attr(feature = "serde", serde(rename = "meanNB"))]
    pub mean_nb: Vec<f64>,
    /// `raw_nb[i][r]` is the count of run `r` at `sizes[i]`.
    #[cfg_attr(feature = "serde", serde(rename = "rawNB"))]
    pub raw_nb: Vec<Vec<usize>>,
    pub runs: usize,
    pub component_count: usize,
    /// Per size, the assignment of the run with the fewest boxes.
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none"))]
    pub box_assignments: Option<Vec<Vec<usize>>>,
}

/// Generator for one `(size, run)` cell; independent of evaluation order.
fn cell_rng(seed: u64, lb: u32, run: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((u64::from(lb) << 32) | run as u64);
    rng
}

pub fn box_cover_curve(g: &Graph, cfg: &BoxCoverConfig) -> Result<BoxCoverCurve> {
    box_cover_curve_with(&DistanceMatrix::compute(g), cfg)
}

/// Runs `cfg.runs` seeded random-order covers at every size.
///
/// A cover valid at `l_B - 1` is also valid at `l_B`; each run keeps the
/// smaller of its fresh greedy count and its count at the previous size,
/// so every run's sequence (and the mean) is non-increasing.
pub fn box_cover_curve_with(dm: &DistanceMatrix, cfg: &BoxCoverConfig) -> Result<BoxCoverCurve> {
    if cfg.runs < 1 {
        return Err(Error::InvalidParameter { name: "runs", reason: "must be >= 1" });
    }
    let n = dm.n();
    let last = dm.diameter() + 1;
    let mut prev: Vec<Option<BoxCover>> = vec![None; cfg.runs];
    let mut sizes = Vec::new();
    let mut mean_nb = Vec::new();
    let mut raw_nb = Vec::new();
    let mut best = Vec::new();
    let mut ordering: Vec<usize> = (0..n).collect();

    for lb in 1..=last {
        let mut counts = Vec::with_capacity(cfg.runs);
        for (run, slot) in prev.iter_mut().enumerate() {
            ordering.sort_unstable();
            ordering.shuffle(&mut cell_rng(cfg.seed, lb, run));
            let fresh = cover_once(dm, lb, &ordering)?;
            let keep = match slot.take() {
                Some(old) if old.count < fresh.count => old,
                _ => fresh,
            };
            counts.push(keep.count);
            *slot = Some(keep);
        }
        if cfg.keep_assignments {
            let (i, _) = counts
                .iter()
                .enumerate()
                .min_by_key(|&(i, &c)| (c, i))
                .expect("runs >= 1");
            best.push(prev[i].as_ref().map(|c| c.assignment.clone()).unwrap_or_default());
        }
        sizes.push(lb);
        mean_nb.push(counts.iter().sum::<usize>() as f64 / cfg.runs as f64);
        raw_nb.push(counts);
    }

    Ok(BoxCoverCurve {
        sizes,
        mean_nb,
        raw_nb,
        runs: cfg.runs,
        component_count: dm.component_count(),
        box_assignments: cfg.keep_assignments.then_some(best),
    })
}

/// How each size's `N_B` is summarized before taking logs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Averaging {
    /// Arithmetic mean of the raw counts.
    #[default]
    Raw,
    /// Mean of `ln N_B` over runs.
    Log,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FitOptions {
    /// Inclusive `(lo, hi)` box sizes. Defaults to `l_B = 1` through the
    /// first point where `N_B` reaches the component count.
    pub range: Option<(u32, u32)>,
    pub averaging: Averaging,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct FractalFit {
    #[cfg_attr(feature = "serde", serde(rename = "dB"))]
    pub d_b: f64,
    pub intercept: f64,
    pub r2: f64,
    /// Smallest and largest box size that entered the fit.
    pub fit_range: (u32, u32),
    pub points: usize,
}

impl BoxCoverCurve {
    /// Default fit window: drops everything after the curve first reaches
    /// its plateau, keeping that first plateau point.
    pub fn default_fit_range(&self) -> Option<(u32, u32)> {
        let lo = *self.sizes.first()?;
        let plateau = self.component_count as f64;
        let end = self
            .mean_nb
            .iter()
            .position(|&m| m <= plateau)
            .unwrap_or(self.sizes.len() - 1);
        Some((lo, self.sizes[end]))
    }

    fn summary(&self, i: usize, averaging: Averaging) -> f64 {
        match averaging {
            Averaging::Raw => self.mean_nb[i],
            Averaging::Log => {
                let raw = &self.raw_nb[i];
                let s: f64 = raw.iter().map(|&c| ln(c as f64)).sum();
                powf(core::f64::consts::E, s / raw.len() as f64)
            }
        }
    }
}

/// Least-squares fit of `ln N_B` on `ln l_B`; the dimension is `|slope|`.
pub fn fit_dimension(curve: &BoxCoverCurve, opts: &FitOptions) -> Result<FractalFit> {
    let range = match opts.range {
        Some((lo, hi)) if lo > hi || lo < 1 => {
            return Err(Error::InvalidParameter {
                name: "fit range",
                reason: "needs 1 <= lo <= hi",
            })
        }
        Some(r) => r,
        None => curve.default_fit_range().ok_or(Error::Fit { reason: "empty curve" })?,
    };
    let pts: Vec<(f64, f64)> = curve
        .sizes
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l >= range.0 && l <= range.1)
        .map(|(i, &l)| (l as f64, curve.summary(i, opts.averaging)))
        .collect();
    if pts.len() < 2 {
        return Err(Error::Fit { reason: "fewer than two box sizes in the fit range" });
    }
    if !pts.windows(2).any(|w| w[1].1 < w[0].1) {
        return Err(Error::Fit { reason: "N_B never decreases in the fit range" });
    }
    let line = regression::power_law(pts.iter().copied())?;
    let used = (pts[0].0 as u32, pts[pts.len() - 1].0 as u32);
    Ok(FractalFit {
        d_b: line.slope.abs(),
        intercept: line.intercept,
        r2: line.r2,
        fit_range: used,
        points: pts.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_index_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_index_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::from_index_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    fn identity(n: usize) -> Vec<usize> {
        (0..n).collect()
    }

    #[test]
    fn unit_boxes_are_singletons() {
        let g = path(7);
        let dm = DistanceMatrix::compute(&g);
        let c = cover_once(&dm, 1, &[3, 1, 4, 0, 5, 2, 6]).unwrap();
        assert_eq!(c.count, 7);
        assert!(c.boxes().iter().all(|b| b.len() == 1));
    }

    #[test]
    fn star_fits_one_box_at_three() {
        let g = star(5);
        let dm = DistanceMatrix::compute(&g);
        let c = cover_once(&dm, 3, &identity(6)).unwrap();
        assert_eq!(c.count, 1);
    }

    #[test]
    fn path6_pairs_up() {
        let g = path(6);
        let dm = DistanceMatrix::compute(&g);
        let c = cover_once(&dm, 2, &identity(6)).unwrap();
        assert_eq!(c.count, 3);
        assert_eq!(c.assignment, [0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn bad_inputs() {
        let dm = DistanceMatrix::compute(&path(3));
        assert!(cover_once(&dm, 0, &identity(3)).is_err());
        assert!(cover_once(&dm, 2, &[0, 0, 1]).is_err());
        assert!(cover_once(&dm, 2, &[0, 1]).is_err());
        let cfg = BoxCoverConfig { runs: 0, ..Default::default() };
        assert!(box_cover_curve_with(&dm, &cfg).is_err());
    }

    #[test]
    fn complete_graph_curve() {
        let curve = box_cover_curve(&complete(4), &BoxCoverConfig { runs: 7, ..Default::default() })
            .unwrap();
        assert_eq!(curve.sizes, [1, 2]);
        assert_eq!(curve.mean_nb, [4.0, 1.0]);
        let fit = fit_dimension(&curve, &FitOptions::default()).unwrap();
        assert!((fit.d_b - 2.0).abs() < 1e-12);
        assert_eq!(fit.fit_range, (1, 2));
    }

    #[test]
    fn components_never_share_a_box() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("x", "y"), ("y", "z"), ("z", "x")])
            .unwrap();
        let curve = box_cover_curve(&g, &BoxCoverConfig { runs: 5, ..Default::default() }).unwrap();
        assert_eq!(*curve.mean_nb.last().unwrap(), 2.0);
        assert_eq!(curve.component_count, 2);
    }

    #[test]
    fn edgeless_graph_has_single_size() {
        let g = Graph::from_index_edges(4, []).unwrap();
        let curve = box_cover_curve(&g, &BoxCoverConfig { runs: 3, ..Default::default() }).unwrap();
        assert_eq!(curve.sizes, [1]);
        assert!(fit_dimension(&curve, &FitOptions::default()).is_err());
    }

    #[test]
    fn same_seed_same_counts() {
        let g = path(30);
        let cfg = BoxCoverConfig { runs: 10, seed: 9, keep_assignments: true };
        let a = box_cover_curve(&g, &cfg).unwrap();
        let b = box_cover_curve(&g, &cfg).unwrap();
        assert_eq!(a, b);
        let c = box_cover_curve(&g, &BoxCoverConfig { seed: 10, ..cfg }).unwrap();
        assert_eq!(a.sizes, c.sizes);
    }

    #[test]
    fn exact_power_law_curve_fits_exactly() {
        let curve = BoxCoverCurve {
            sizes: vec![1, 2, 4, 8],
            mean_nb: vec![1.0, 0.25, 0.0625, 0.015625],
            raw_nb: vec![vec![1]; 4],
            runs: 1,
            component_count: 0,
            box_assignments: None,
        };
        let fit = fit_dimension(&curve, &FitOptions::default()).unwrap();
        assert!((fit.d_b - 2.0).abs() < 1e-12);
        assert!((fit.r2 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fit_range_override() {
        let curve = box_cover_curve(&path(40), &BoxCoverConfig { runs: 5, ..Default::default() })
            .unwrap();
        let fit = fit_dimension(&curve, &FitOptions { range: Some((2, 5)), ..Default::default() })
            .unwrap();
        assert_eq!(fit.fit_range, (2, 5));
        assert_eq!(fit.points, 4);
        assert!(fit_dimension(&curve, &FitOptions { range: Some((5, 2)), ..Default::default() })
            .is_err());
        assert!(fit_dimension(&curve, &FitOptions { range: Some((3, 3)), ..Default::default() })
            .is_err());
    }

    #[test]
    fn log_averaging_is_geometric_mean() {
        let curve = BoxCoverCurve {
            sizes: vec![1, 2],
            mean_nb: vec![4.0, 2.5],
            raw_nb: vec![vec![4, 4], vec![1, 4]],
            runs: 2,
            component_count: 1,
            box_assignments: None,
        };
        let fit = fit_dimension(&curve, &FitOptions { averaging: Averaging::Log, ..Default::default() })
            .unwrap();
        // Geometric mean at l_B = 2 is 2, so the slope is ln(2/4)/ln 2.
        assert!((fit.d_b - 1.0).abs() < 1e-12);
    }
}
