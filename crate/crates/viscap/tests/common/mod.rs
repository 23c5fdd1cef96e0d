//! Shared fixtures for the integration suites.
#![allow(dead_code)] // each suite uses a different subset

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use viscap::geometry::{Point, Polygon};
use viscap::OrderedGraph;

/// The twelve-vertex polygon drawn in the visibility figure, with all
/// coordinates doubled so they are integers.
pub const FIG1_COORDS: [(i64, i64); 12] = [
    (-28, 2),
    (-4, -22),
    (8, -14),
    (-8, -10),
    (8, 6),
    (17, -8),
    (10, -22),
    (26, -22),
    (28, -10),
    (8, 22),
    (-4, 12),
    (-12, 16),
];

/// Frozen regression constant: the visibility graph of the figure polygon
/// as computed by the exact predicates. Contains the 27 drawn sight lines
/// plus two forced by collinear triples (vertices 4-5-7 and 4-10-11 in
/// 0-indexed labels): a sight line may pass through a vertex lying on it.
pub const FIG1_EDGES: [(usize, usize); 29] = [
    (0, 1),
    (0, 3),
    (0, 4),
    (0, 10),
    (0, 11),
    (1, 2),
    (1, 3),
    (2, 3),
    (3, 4),
    (3, 9),
    (3, 10),
    (3, 11),
    (4, 5),
    (4, 7),
    (4, 8),
    (4, 9),
    (4, 10),
    (4, 11),
    (5, 6),
    (5, 7),
    (5, 8),
    (5, 9),
    (6, 7),
    (6, 8),
    (7, 8),
    (7, 9),
    (8, 9),
    (9, 10),
    (10, 11),
];

/// Frozen regression constant: clique number of the figure graph.
pub const FIG1_OMEGA: usize = 5;

pub fn fig1_polygon() -> Polygon {
    let pts = FIG1_COORDS.iter().map(|&(x, y)| Point::new(x, y)).collect();
    Polygon::new(pts).expect("figure polygon is simple and counterclockwise")
}

pub fn fig1_graph() -> OrderedGraph {
    OrderedGraph::build(12, &FIG1_EDGES).expect("frozen edges are valid")
}

/// Member of the obstruction family: non-adjacent 0 and 3 with crossing
/// sequences both ways.
pub fn h_member() -> OrderedGraph {
    OrderedGraph::build(6, &[(0, 2), (1, 3), (3, 5), (0, 4)]).expect("valid")
}

pub fn hole(k: usize) -> OrderedGraph {
    let mut e: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
    e.push((0, k - 1));
    OrderedGraph::build(k, &e).expect("valid")
}

/// Seeded random ordered graph with `n` vertices and up to `max_m` edges.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_m: usize) -> OrderedGraph {
    let possible = n * (n.saturating_sub(1)) / 2;
    let m = rng.gen_range(0..=max_m.min(possible));
    let mut pairs = Vec::with_capacity(m);
    while pairs.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            let p = (u.min(v), u.max(v));
            if !pairs.contains(&p) {
                pairs.push(p);
            }
        }
    }
    OrderedGraph::build(n, &pairs).expect("valid pairs")
}

/// Sorted random vertex subset of size between `min_size` and `n`.
pub fn random_subset(rng: &mut ChaCha8Rng, n: usize, min_size: usize) -> Vec<usize> {
    let size = rng.gen_range(min_size..=n);
    let mut verts: Vec<usize> = (0..n).collect();
    for i in 0..size {
        let j = rng.gen_range(i..n);
        verts.swap(i, j);
    }
    let mut subset = verts[..size].to_vec();
    subset.sort_unstable();
    subset
}
