//! Robustness metrics for simple undirected, unweighted networks.
//!
//! The central quantity is the fractal-weighted vulnerability index
//! [`vulnerability::v_db`]: the power mean of pair-normalized edge
//! betweenness, taken with the network's own box-covering dimension as the
//! exponent. Around it sit the baselines used to judge it: the multi-scale
//! power means `b_p` and the exponent search that resolves `b_1` ties,
//! normalized average edge betweenness, average inverse geodesic length,
//! largest component size, and a recalculated-betweenness attack.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, report
//! serialization and the command line live in the `netvuln` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod betweenness;
mod error;
pub mod fractal;
pub mod generators;
pub mod graph;
mod math;
pub mod regression;
pub mod vulnerability;

pub use betweenness::{BetweennessProfile, PSearchConfig, PSearchResult};
pub use error::{Error, Result};
pub use fractal::{BoxCoverCurve, BoxCoverConfig, FractalFit};
pub use graph::{DistanceMatrix, Graph, GraphBuilder, ShortestPathDag};
pub use vulnerability::{AttackTrace, VulnerabilityReport};
