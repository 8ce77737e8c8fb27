use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HntError {
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("parameter mismatch: H({0}) vs H({1})")]
    ParamMismatch(String, String),

    #[error("minimum distance undefined (|C|=1)")]
    UndefinedForSingleton,

    #[error("empty code")]
    EmptyCode,

    #[error("duplicate word {0} in code")]
    DuplicateWord(String),

    #[error("{what} exceeds the budget of {budget} (needs {needed})")]
    Budget {
        what: &'static str,
        budget: u64,
        needed: u64,
    },

    #[error("element does not fix entry {0} (not in the entry stabiliser)")]
    NotInStabilizer(usize),

    #[error("element does not stabilise the entry set {0:?} (not in X_J)")]
    NotInSetStabilizer(Vec<usize>),

    #[error("level {s} exceeds the covering radius {rho}")]
    LevelExceedsCoveringRadius { s: usize, rho: usize },

    #[error("group is intransitive on the entries")]
    IntransitiveOnEntries,

    #[error("partition is not invariant under the entry action")]
    NonInvariantPartition,

    #[error("equivalence search inconclusive after {0} nodes")]
    Inconclusive(u64),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl HntError {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        HntError::Parameter(msg.into())
    }

    /// True for the budget-exhaustion family of errors, which callers
    /// usually want to report differently from domain errors.
    pub fn is_budget(&self) -> bool {
        matches!(self, HntError::Budget { .. } | HntError::Inconclusive(_))
    }
}

pub type Result<T, E = HntError> = std::result::Result<T, E>;
