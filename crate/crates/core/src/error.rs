use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("graph file, line {line}: {message}")]
    GraphFormat { line: usize, message: String },

    #[error("partial map file, line {line}: {message}")]
    MapFormat { line: usize, message: String },

    #[error("word is not cyclically reduced: {0}")]
    NotCyclicallyReduced(String),

    #[error("generator v{index} is outside the alphabet of size {alphabet_size}")]
    GeneratorOutOfRange { index: u32, alphabet_size: usize },

    #[error("Dehn reduction exceeded its budget of {budget} steps")]
    DehnBudgetExceeded { budget: usize },

    #[error("coding enumeration exceeded its budget of {budget} registered elements")]
    CodingBudgetExceeded { budget: usize },

    #[error("code {0} does not name an element of the group")]
    NoSuchCode(u64),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid vertex map: {0}")]
    InvalidMap(String),

    #[error("{0} is not a vertex of the random graph (values start at 2)")]
    InvalidRadoVertex(u64),

    #[error("vertex sets overlap at {0}")]
    OverlappingSets(u64),

    #[error("prime arithmetic out of range: {0}")]
    PrimeRange(String),
}

impl Error {
    /// Budget exhaustion is reported separately from hard failures by callers
    /// that need to distinguish "unknown" from "false".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::DehnBudgetExceeded { .. }
                | Error::CodingBudgetExceeded { .. }
                | Error::PrimeRange(_)
        )
    }
}
