use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6: {reason} (byte offset {offset})")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {order} exceeds the supported bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("loops are not allowed (vertex {0})")]
    Loop(usize),

    #[error("invalid clique-sum: {0}")]
    InvalidCliqueSum(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("no vertex of degree at most {k} that is not a cut vertex")]
    NoLowDegreeVertex { k: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("homomorphism count overflowed the 128-bit accumulator; retry in big-integer mode")]
    CountOverflow,

    #[error("invalid homomorphism: {0}")]
    InvalidHomomorphism(String),

    #[error("composition would identify two adjacent vertices and create a loop")]
    LoopCreated,

    #[error("no contractor among series-parallel terms with at most {max_edges} edges")]
    NoContractorFound { max_edges: usize },

    #[error("invalid contractor: {0}")]
    InvalidContractor(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parity matrix not well defined: component {component} disagrees inside target component {target_component}")]
    IllDefinedParityMatrix {
        component: usize,
        target_component: usize,
    },

    #[error("reduction produced a certificate that does not verify: {0}")]
    BrokenReduction(String),

    #[error("unknown class predicate `{0}`")]
    UnknownPredicate(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("{path}:{line}: {source}")]
    Corpus {
        path: String,
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
