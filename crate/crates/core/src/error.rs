use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the compute core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An edge joins a vertex to itself.
    SelfLoop { label: String },
    /// No vertices were supplied.
    EmptyGraph,
    /// A vertex index outside `0..n`.
    VertexOutOfRange { index: usize, n: usize },
    /// A parameter is outside its admissible range.
    InvalidParameter { name: &'static str, reason: &'static str },
    /// The metric has no defined value for this graph (e.g. no edges).
    UndefinedMetric { metric: &'static str, reason: &'static str },
    /// The log-log fit had too few usable points.
    Fit { reason: &'static str },
    /// No scanned exponent separates the two graphs; carries the sampled
    /// `(p, b_p(A) - b_p(B))` curve.
    Indistinguishable { curve: alloc::vec::Vec<(u32, f64)> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SelfLoop { label } => write!(f, "self-loop on vertex `{label}`"),
            Error::EmptyGraph => f.write_str("graph has no vertices"),
            Error::VertexOutOfRange { index, n } => {
                write!(f, "vertex index {index} out of range for graph with {n} vertices")
            }
            Error::InvalidParameter { name, reason } => write!(f, "invalid `{name}`: {reason}"),
            Error::UndefinedMetric { metric, reason } => {
                write!(f, "{metric} is undefined: {reason}")
            }
            Error::Fit { reason } => write!(f, "dimension fit failed: {reason}"),
            Error::Indistinguishable { curve } => write!(
                f,
                "graphs are indistinguishable for every scanned p (1..={})",
                curve.last().map_or(0, |(p, _)| *p)
            ),
        }
    }
}

impl core::error::Error for Error {}
