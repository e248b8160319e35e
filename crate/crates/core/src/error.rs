use crate::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph has no edges")]
    NoEdges,

    #[error(
        "labeling has {vertex_labels} vertex and {edge_labels} edge labels, \
         graph has {vertices} vertices and {edges} edges"
    )]
    LabelCountMismatch {
        vertices: usize,
        edges: usize,
        vertex_labels: usize,
        edge_labels: usize,
    },

    #[error("not a bijection onto 1..={max}: {reason}")]
    NotBijection { max: Label, reason: String },

    #[error("invalid vertex labeling: {0}")]
    InvalidVertexLabeling(String),

    #[error("labeling is not edge-magic")]
    NotMagic,

    #[error("labeling is not edge consecutive")]
    NotConsecutive,

    #[error("consecutive index {b} is not one of 0, |X|, |Y|, |V|")]
    InadmissibleIndex { b: Label },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search refused: {labels} labels exceeds the budget of {budget}")]
    BudgetExceeded { labels: usize, budget: usize },

    #[error("graph too large for {what}: {size} > {max}")]
    TooLarge {
        what: &'static str,
        size: usize,
        max: usize,
    },
}
