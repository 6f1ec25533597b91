use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed digraph `{input}`: {reason}")]
    ParseDigraph { input: String, reason: String },

    #[error("malformed pattern `{input}`: {reason}")]
    ParsePattern { input: String, reason: String },

    #[error("digraph has {n} vertices, at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loops are not allowed (vertex {0})")]
    Loop(usize),

    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),

    #[error("partition covers {got} vertices, digraph has {expected}")]
    PartitionLength { got: usize, expected: usize },

    #[error("part index {part} out of range for a pattern with {m} parts")]
    PartOutOfRange { part: usize, m: usize },

    #[error("expected a 2x2 pattern, got {0}x{0}")]
    NotTwoByTwo(usize),

    #[error("pattern has a star on its diagonal")]
    StarDiagonal,

    #[error("brute-force search over {m}^{n} assignments exceeds the size guard")]
    SizeGuard { n: usize, m: usize },

    #[error("bound {bound} out of range (max {max})")]
    BoundOutOfRange { bound: usize, max: usize },

    #[error("digraph is partitionable, no obstruction embeds in it")]
    Partitionable,

    #[error("no family is defined for index {0}")]
    UnknownFamily(usize),

    #[error("malformed catalog line {line}: {reason}")]
    ParseCatalog { line: usize, reason: String },
}
