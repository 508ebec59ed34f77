use netvuln_core::betweenness::PSearchConfig;
use netvuln_core::fractal::{Averaging, BoxCoverConfig, FitOptions};
use netvuln_core::vulnerability::AnalysisOptions;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    /// Aligned text, rounded to 4 decimals.
    Table,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisConfig {
    pub box_runs: usize,
    pub seed: u64,
    pub p_max: u32,
    pub tie_eps: f64,
    pub normalized_compare: bool,
    pub attack_fraction: f64,
    /// Inclusive box-size window; either end may be left open.
    pub fit_range: (Option<u32>, Option<u32>),
    pub log_mean: bool,
    pub output_format: OutputFormat,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            box_runs: 100,
            seed: 42,
            p_max: 50,
            tie_eps: 1e-12,
            normalized_compare: false,
            attack_fraction: 0.01,
            fit_range: (None, None),
            log_mean: false,
            output_format: OutputFormat::Json,
        }
    }
}

impl AnalysisConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Config(m.to_string()));
        if self.box_runs < 1 {
            return bad("--runs must be >= 1");
        }
        if self.p_max < 1 {
            return bad("--pmax must be >= 1");
        }
        if !(self.attack_fraction > 0.0 && self.attack_fraction < 1.0) {
            return bad("--fraction must lie strictly between 0 and 1");
        }
        if self.tie_eps.is_nan() || self.tie_eps < 0.0 {
            return bad("--tie-eps must be >= 0");
        }
        match self.fit_range {
            (Some(0), _) | (_, Some(0)) => bad("fit range bounds must be >= 1"),
            (Some(lo), Some(hi)) if lo > hi => bad("--fit-lo must not exceed --fit-hi"),
            _ => Ok(()),
        }
    }

    pub fn box_cover(&self) -> BoxCoverConfig {
        BoxCoverConfig { runs: self.box_runs, seed: self.seed, keep_assignments: false }
    }

    pub fn fit_options(&self) -> FitOptions {
        let range = match self.fit_range {
            (None, None) => None,
            (lo, hi) => Some((lo.unwrap_or(1), hi.unwrap_or(u32::MAX))),
        };
        let averaging = if self.log_mean { Averaging::Log } else { Averaging::Raw };
        FitOptions { range, averaging }
    }

    pub fn analysis(&self) -> AnalysisOptions {
        AnalysisOptions { box_cover: self.box_cover(), fit: self.fit_options() }
    }

    pub fn p_search(&self) -> PSearchConfig {
        PSearchConfig { p_max: self.p_max, tie_eps: self.tie_eps, normalized: self.normalized_compare }
    }
}
