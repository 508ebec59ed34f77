//! Edge-list IO, report rendering and the `netvuln` command line on top of
//! [`netvuln_core`].

pub mod cli;
pub mod commands;
pub mod config;
pub mod edgelist;
pub mod error;

pub use config::{AnalysisConfig, OutputFormat};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use error::CliError;
