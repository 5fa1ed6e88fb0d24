use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

/// Errors raised across the crate.
///
/// `TheoremViolation` and `ExtensionFailed` are the two "alarm" variants:
/// they can only occur when a hypothesis-satisfying graph contradicts one of
/// the counting arguments the solver relies on, or when the implementation
/// is wrong. The CLI maps them to a dedicated exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0} ({0}, {0})")]
    SelfLoop(VertexId),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),

    #[error("no edge between {0} and {1}")]
    NotAnEdge(VertexId, VertexId),

    #[error("graph is empty")]
    EmptyGraph,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid rotation system: {0}")]
    Rotation(String),

    #[error("embedding is not planar (genus > 0): V - E + F = {euler} on a component, expected 2")]
    NotPlanar { euler: i64 },

    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("edge count {edges} exceeds oracle cap {cap}; use the reduction solver instead")]
    OracleCap { edges: usize, cap: usize },

    #[error("oracle search exceeded its node budget of {0}")]
    Budget(u64),

    #[error("invalid generator request: {0}")]
    Generator(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error(
        "extension failed at step {step} (edge {edge}): plan promised at most {promised} colored conflicts, found {actual}, no admissible color left"
    )]
    ExtensionFailed {
        step: usize,
        edge: EdgeId,
        promised: usize,
        actual: usize,
    },

    #[error("no coloring found: {0}")]
    Unsolved(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// True for failures that contradict the counting arguments behind the
    /// reduction solver rather than bad input.
    pub fn is_alarm(&self) -> bool {
        matches!(
            self,
            Error::TheoremViolation(_) | Error::ExtensionFailed { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
