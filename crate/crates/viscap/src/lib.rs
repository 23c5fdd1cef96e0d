//! Ordered-graph visibility toolkit.
//!
//! Vertices on a closed curve, taken in boundary order, turn visibility
//! questions into purely combinatorial ones about ordered graphs. This
//! crate implements the full pipeline:
//!
//! - obstruction recognition with witnesses: H-freeness (no non-adjacent
//!   pair joined by crossing sequences in both cyclic directions),
//!   ordered holes, cappedness, ordered outerplanarity;
//! - partition of any H-free ordered graph into three capped parts;
//! - exact clique numbers via peel decompositions of capped graphs;
//! - colourings certifying chi <= 3 * 4^(omega-1) for H-free
//!   ordered-hole-free graphs (polygon and curve visibility graphs in
//!   particular) and the analogous bounds for capped graphs;
//! - a geometric generator (exact integer predicates, seeded random
//!   simple polygons) producing ground-truth instances;
//! - definition-literal brute-force oracles for end-to-end verification.

pub mod chroma;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod obstructions;
pub mod oracles;
pub mod partition;
pub mod reach;

pub use error::{Error, Result};
pub use graph::{Edge, OrderedGraph, Segment};
