use thiserror::Error;

use crate::skeleton::ValidationReport;

/// Errors raised by the path calculus, the decision procedures and the checkers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("`{0}` names both a vertex and an edge")]
    AmbiguousName(String),
    #[error("empty path literal")]
    EmptyPathLiteral,
    #[error("edges `{0}` and `{1}` are not composable")]
    NotComposable(String, String),
    #[error("source of `{0}` does not match range of `{1}`")]
    SourceRangeMismatch(String, String),
    #[error("paths do not share a common range: {0}")]
    MixedRanges(String),
    #[error("path `{path}` does not have range `{vertex}`")]
    WrongRange { path: String, vertex: String },
    #[error("degree vector has {found} coordinates, expected {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("malformed degree vector `{0}`")]
    MalformedDegree(String),
    #[error("degree {lower} is not below {upper}")]
    DegreeOrder { lower: String, upper: String },
    #[error("skeleton does not present a k-graph: {0}")]
    InvalidSkeleton(Box<ValidationReport>),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("operation requires an acyclic skeleton")]
    UnsupportedCyclic,
    #[error("no path of degree {degree} with source `{vertex}` lies in the closure")]
    NoRepresentative { degree: String, vertex: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("family has no operator for `{0}`")]
    MissingAssignment(String),
    #[error("family operator for `{path}` is not a 0/1 partial permutation")]
    NotPartialPermutation { path: String },
    #[error("operator for `{path}` is {rows}x{cols}, expected {dim}x{dim}")]
    DimensionMismatch {
        path: String,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("generator family gives different operators for two factorisations of `{0}`")]
    FactorisationDependent(String),
    #[error("set supplied for `{vertex}` is not exhaustive")]
    NotExhaustive { vertex: String },
    #[error("too many candidate sets at `{vertex}` ({edges} edges)")]
    TooManySubsets { vertex: String, edges: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
