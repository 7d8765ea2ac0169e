//! Error type shared by the graph, complex, and ideal operations.

use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A vertex label is zero or outside the graph's range `1..=n`.
    #[error("vertex {0} is not a valid label")]
    InvalidVertex(u32),
    /// Both endpoints of an edge coincide.
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    /// An edge argument does not belong to the graph.
    #[error("edge {{{0},{1}}} is not in the graph")]
    UnknownEdge(u32, u32),
    /// A predicate that requires adjacent edges was given a non-adjacent pair.
    #[error("edges {{{0},{1}}} and {{{2},{3}}} are not adjacent")]
    NotAdjacent(u32, u32, u32, u32),
    /// The graph has no vertices.
    #[error("graph has no vertices")]
    EmptyGraph,
    /// A construction parameter is out of range or malformed.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The operation needs at least one edge.
    #[error("graph has no edges")]
    NoEdges,
    /// A face must contain at least one vertex.
    #[error("face has no vertices")]
    EmptyFace,
    /// A complex must have at least one facet.
    #[error("complex has no facets")]
    EmptyComplex,
    /// Exhaustive enumeration would exceed the documented resource limits.
    #[error("enumeration limit exceeded: {0}")]
    TooLarge(String),
    /// A generator with empty support makes the ideal the unit ideal.
    #[error("a generator has empty support, so the ideal is the unit ideal")]
    UnitIdeal,
    /// A variable index is zero or larger than the ideal's variable count.
    #[error("variable {variable} is outside 1..={nvars}")]
    InvalidVariable { variable: u32, nvars: u32 },
    /// The Gallai graph is edgeless, so its edge ideal does not exist.
    #[error("the Gallai graph has no edges")]
    GallaiEdgeless,
    /// A text document does not match the expected format.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable name of the error case, for CLI messages and tests.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidVertex(_) => "InvalidVertex",
            Error::SelfLoop(_) => "SelfLoop",
            Error::UnknownEdge(..) => "UnknownEdge",
            Error::NotAdjacent(..) => "NotAdjacent",
            Error::EmptyGraph => "EmptyGraph",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::NoEdges => "NoEdges",
            Error::EmptyFace => "EmptyFace",
            Error::EmptyComplex => "EmptyComplex",
            Error::TooLarge(_) => "TooLarge",
            Error::UnitIdeal => "UnitIdeal",
            Error::InvalidVariable { .. } => "InvalidVariable",
            Error::GallaiEdgeless => "GallaiEdgeless",
            Error::Parse(_) => "Parse",
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
