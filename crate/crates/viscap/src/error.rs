use crate::graph::Segment;
use crate::obstructions::{CappedViolation, HWitness, HoleWitness};
use thiserror::Error;

/// Errors reported by graph construction, recognizers, and the colouring pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loop on vertex {v}")]
    SelfLoop { v: usize },

    #[error("edge {{{u},{v}}} is not in the graph")]
    EdgeNotInGraph { u: usize, v: usize },

    #[error("rotation offset {r} out of range for graph on {n} vertices")]
    RotationOutOfRange { r: usize, n: usize },

    #[error("invalid vertex subset: {reason}")]
    InvalidSubset { reason: String },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("query requires two distinct vertices, got {v} twice")]
    IdenticalVertices { v: usize },

    #[error("segment ({x},{y}) violates x < y")]
    BadSegment { x: usize, y: usize },

    #[error("segment ({},{}) is not valid: no crossing sequence from {} back to {}", .0.x, .0.y, .0.y, .0.x)]
    InvalidSegment(Segment),

    #[error("segment ({},{}) has no strongly reachable vertices", .0.x, .0.y)]
    NoStronglyReachable(Segment),

    #[error("input is not H-free: non-adjacent pair ({},{}) has crossing sequences both ways", .0.u, .0.v)]
    NotHFree(HWitness),

    #[error("input is not capped: quadruple ({},{},{},{})", .0.a, .0.b, .0.c, .0.d)]
    NotCapped(CappedViolation),

    #[error("input has an ordered hole on {} vertices", .0.cycle.len())]
    NotHoleFree(HoleWitness),

    #[error("input has a triangle ({},{},{})", .0[0], .0[1], .0[2])]
    NotTriangleFree([usize; 3]),

    #[error("precolouring condition ({condition}) violated: {detail}")]
    NotPrecolouring { condition: &'static str, detail: String },

    #[error("a breadth-first search level induced an odd cycle (precondition violated upstream): {cycle:?}")]
    NonBipartiteLevel { cycle: Vec<usize> },

    #[error("colour budget exceeded: needed {used} colours, cap {cap}")]
    ColourBudgetExceeded { used: usize, cap: usize },

    #[error("{what} exceeds the oracle size guard: {actual} > {limit}")]
    SizeGuard { what: &'static str, limit: usize, actual: usize },

    #[error("invalid polygon: {reason}")]
    InvalidPolygon { reason: String },

    #[error("polygon generation failed: {reason}")]
    GenerationFailed { reason: String },

    #[error("coordinate magnitude {value} exceeds the exact-arithmetic limit {limit}")]
    CoordinateOverflow { value: i64, limit: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
