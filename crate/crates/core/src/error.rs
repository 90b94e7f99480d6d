use thiserror::Error;

use crate::simplicial::Simplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("complex has no facets")]
    NoFacets,
    #[error("vertex identifier {0} is negative")]
    NegativeVertex(i64),
    #[error("vertex {0} does not appear in any facet")]
    VertexGap(usize),
    #[error("simplex {0} is not a face of the complex")]
    NotASimplex(Simplex),
    #[error("vertex {vertex} is out of range for a complex on {num_vertices} vertices")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    #[error("edge {0:?} has no label")]
    MissingLabel((usize, usize)),
    #[error("label on {0:?} but it is not an edge of the complex")]
    LabelOnNonEdge((usize, usize)),
    #[error("label {label} on edge {edge:?} is smaller than 2")]
    LabelTooSmall { edge: (usize, usize), label: u64 },
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("clique enumeration exceeded the budget of {budget} simplices ({visited} visited)")]
    BudgetExceeded { budget: usize, visited: usize },
    #[error("labeling is not proper: special subgroup on {0} is infinite")]
    NotProper(Simplex),
    #[error("cochain is not a cocycle: coboundary is nonzero on the face dual to {0}")]
    NotACocycle(Simplex),
    #[error("invalid group element: {0}")]
    InvalidElement(String),
    #[error("invalid characteristic data: {0}")]
    InvalidCharacteristic(String),
    #[error("fan has singular cones: {0:?}")]
    SingularCones(Vec<Vec<usize>>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
