use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use netvuln_core::generators::{generate_ba, generate_ba_mixed, generate_er};

use crate::commands::{run_analyze, run_attack, run_boxcover, run_compare, Input, Render};
use crate::config::{AnalysisConfig, OutputFormat};
use crate::edgelist::write_edge_list;
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "netvuln", version, about = "Vulnerability metrics for undirected networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Seed for box-covering orderings and generators.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Random orderings per box size.
    #[arg(long, global = true, default_value_t = 100)]
    pub runs: usize,
    /// Largest exponent scanned by `compare`.
    #[arg(long, global = true, default_value_t = 50)]
    pub pmax: u32,
    /// Tolerance below which two b_p values count as equal.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tie_eps: f64,
    /// Fraction of vertices removed by `attack`.
    #[arg(long, global = true, default_value_t = 0.01)]
    pub fraction: f64,
    /// Smallest box size in the dimension fit.
    #[arg(long, global = true)]
    pub fit_lo: Option<u32>,
    /// Largest box size in the dimension fit.
    #[arg(long, global = true)]
    pub fit_hi: Option<u32>,
    /// Average ln N_B over runs instead of N_B itself.
    #[arg(long, global = true)]
    pub log_mean: bool,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Write to a file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension, V_dB, b_nor, l^-1 and LCS of one graph.
    Analyze { input: PathBuf },
    /// Decide which of two graphs is more vulnerable by b_1, then b_p.
    Compare {
        a: PathBuf,
        b: PathBuf,
        /// Compare pair-normalized betweenness.
        #[arg(long)]
        normalized: bool,
    },
    /// Recalculated-betweenness attack and post-attack metrics.
    Attack { input: PathBuf },
    /// Box-covering curve and dimension fit.
    Boxcover { input: PathBuf },
    /// Write a synthetic graph as an edge list.
    Generate {
        #[command(subcommand)]
        model: Model,
    },
}

#[derive(Debug, Subcommand)]
pub enum Model {
    /// G(n, M) with M = round(n k / 2).
    Er {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mean_degree: f64,
    },
    /// Preferential attachment with m edges per vertex.
    Ba {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Preferential attachment, each vertex attaching m_low or m_high edges.
    BaMixed {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m_low: usize,
        #[arg(long, default_value_t = 3)]
        m_high: usize,
        /// Probability of m_low.
        #[arg(long, default_value_t = 0.6)]
        p_low: f64,
    },
}

impl GlobalOpts {
    pub fn config(&self) -> AnalysisConfig {
        AnalysisConfig {
            box_runs: self.runs,
            seed: self.seed,
            p_max: self.pmax,
            tie_eps: self.tie_eps,
            attack_fraction: self.fraction,
            fit_range: (self.fit_lo, self.fit_hi),
            log_mean: self.log_mean,
            output_format: self.format,
            ..AnalysisConfig::default()
        }
    }
}

/// Runs a parsed command and returns the text it would print.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let mut cfg = cli.opts.config();
    let fmt = cfg.output_format;
    match &cli.command {
        Command::Analyze { input } => run_analyze(&Input::load(input)?, &cfg)?.render(fmt),
        Command::Compare { a, b, normalized } => {
            cfg.normalized_compare = *normalized;
            let (a, b) = (Input::load(a)?, Input::load(b)?);
            run_compare(&a, &b, &cfg)?.render(fmt)
        }
        Command::Attack { input } => run_attack(&Input::load(input)?, &cfg)?.render(fmt),
        Command::Boxcover { input } => run_boxcover(&Input::load(input)?, &cfg)?.render(fmt),
        Command::Generate { model } => {
            let seed = cfg.seed;
            let g = match *model {
                Model::Er { n, mean_degree } => generate_er(n, mean_degree, seed)?,
                Model::Ba { n, m } => generate_ba(n, m, seed)?,
                Model::BaMixed { n, m_low, m_high, p_low } => {
                    if !(0.0..=1.0).contains(&p_low) {
                        return Err(CliError::Config("--p-low must lie in [0, 1]".into()));
                    }
                    generate_ba_mixed(n, &[(m_low, p_low), (m_high, 1.0 - p_low)], seed)?
                }
            };
            Ok(write_edge_list(&g))
        }
    }
}

/// Parses `args`, runs, writes the output, and returns the exit status.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = execute(&cli).and_then(|text| match &cli.opts.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
