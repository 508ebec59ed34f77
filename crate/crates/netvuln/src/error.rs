use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    SelfLoop(String),
    Malformed(String),
}

impl std::fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseErrorKind::SelfLoop(l) => write!(f, "self-loop on `{l}`"),
            ParseErrorKind::Malformed(s) => write!(f, "expected two labels or `v <label>`, got `{s}`"),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },
    #[error("edge list declares no vertices")]
    EmptyInput,
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] netvuln_core::Error),
    #[error("serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for unusable input, 2 for bad flags or parameters.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core(netvuln_core::Error::InvalidParameter { .. }) => 2,
            _ => 1,
        }
    }
}
