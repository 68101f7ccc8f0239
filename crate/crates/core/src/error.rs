use thiserror::Error;

/// Errors produced by graph construction, parsing, and the search entry
/// points. Width mismatches between a [`crate::VertexSet`] and a graph are
/// programmer errors and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({0}, {1}) is out of range for {2} vertices")]
    EdgeOutOfRange(u32, u32, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),

    #[error("edge list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph has {n} vertices, exceeding the configured cap of {cap}")]
    VertexCapExceeded { n: usize, cap: usize },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("no {g}-regular graph of order {order} exists")]
    InfeasibleRegularPart { order: usize, g: usize },

    #[error("family spec parse error: {0}")]
    FamilyParse(String),

    #[error("input graph must be connected")]
    Disconnected,

    #[error("input graph must not be empty")]
    EmptyGraph,

    #[error("fault sets must be distinct")]
    EqualFaultSets,

    #[error("syndrome space too large: {arcs} arcs exceeds the guard of {max}")]
    SyndromeSpaceTooLarge { arcs: usize, max: usize },

    #[error("graph has {n} vertices, exceeding the oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    #[error("product factors must not be complete graphs")]
    CompleteFactor,
}
