use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// A size or count limit was exceeded.
    #[error("resource cap exceeded: {what} (cap {cap})")]
    ResourceCap { what: &'static str, cap: usize },

    /// The input does not satisfy the premise of the lemma being checked.
    #[error("premise not met for {lemma}: {detail}")]
    PremiseNotMet { lemma: &'static str, detail: String },

    #[error("hypothesis 4*omega >= 3*(delta+1) violated: omega={omega}, delta={delta}")]
    Hypothesis { omega: usize, delta: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("generation failed after {attempts} attempts: {params}")]
    GenerationFailed { attempts: usize, params: String },

    /// The base colorer handed to the peeling colorer broke its bound.
    #[error("base colorer contract violated: used {used} colors, allowed {allowed}")]
    OracleContract {
        used: usize,
        allowed: usize,
        witness: crate::graph::Graph,
    },

    /// A lemma's conclusion failed on input that satisfies its premise.
    #[error("{check} refuted: {detail}")]
    Refuted {
        check: &'static str,
        detail: String,
        witness: crate::graph::Graph,
    },

    /// An internal invariant failed; this indicates a bug upstream.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("invalid config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}
