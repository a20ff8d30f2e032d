use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular matrix")]
    SingularMatrix,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid invariants: {0}")]
    InvalidInvariants(String),

    #[error("inconsistent data: {0}")]
    InconsistentData(String),

    #[error("unbounded family: {0}")]
    UnboundedFamily(String),

    #[error("no solution ({})", .trail.join("; "))]
    NoSolution { trail: Vec<String> },

    #[error("multiple solutions survive: {0:?}")]
    MultipleSolutions(Vec<String>),

    #[error("conic-bundle system is singular at d = {d}")]
    SingularSystem { d: i64 },

    #[error("feasible triangle is degenerate at d = {d}")]
    DegenerateTriangle { d: i64 },

    #[error("region at d = {d} has {points} lattice points, over the budget of {budget}")]
    RegionOverflow { d: i64, points: Rational, budget: u64 },

    #[error("unknown case id {0:?}")]
    UnknownCaseId(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
