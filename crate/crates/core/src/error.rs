use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed instance: {0}")]
    MalformedInstance(String),

    #[error("coloring does not match instance: {0}")]
    ColoringMismatch(String),

    #[error("coloring is not proper: {0}")]
    NotProper(String),

    #[error("graph is not bipartite, odd cycle through vertices {witness:?}")]
    NotBipartite { witness: Vec<usize> },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("instance has {edges} edges, above the oracle bound of {bound}")]
    TooLarge { edges: usize, bound: usize },

    #[error("invalid cost model: {0}")]
    InvalidCostModel(String),

    #[error("no proper coloring exists within {max_colors} colors")]
    Infeasible { max_colors: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
