//! Definition-literal brute-force references for every pipeline stage.
//!
//! These deliberately share no code with the fast paths: cliques by
//! branch-and-bound enumeration, chromatic number by backtracking,
//! crossing sequences by exhaustive search over distinct-edge chains,
//! cappedness by quadruple enumeration, holes by subset enumeration.
//! Exceeding a size guard is an error, never a silent approximation.

use crate::error::{Error, Result};
use crate::graph::{Edge, OrderedGraph};
use crate::obstructions::{CappedViolation, HoleWitness};
use serde::Serialize;

pub const BF_CLIQUE_DEFAULT_MAX_N: usize = 40;
pub const BF_CHROMATIC_DEFAULT_MAX_N: usize = 16;
pub const BF_XSEQ_DEFAULT_MAX_EDGES: usize = 14;
pub const BF_CAPPED_DEFAULT_MAX_N: usize = 32;
pub const BF_HOLES_DEFAULT_MAX_N: usize = 12;

/// Exact clique number by branch-and-bound over neighbour bitsets.
pub fn bf_clique(g: &OrderedGraph, max_n: usize) -> Result<usize> {
    let n = g.num_vertices();
    if n > max_n {
        return Err(Error::SizeGuard { what: "bf_clique vertex count", limit: max_n, actual: n });
    }
    if n == 0 {
        return Ok(0);
    }
    let words = n.div_ceil(64);
    let mut nbr = vec![vec![0u64; words]; n];
    for e in g.edges() {
        nbr[e.lo][e.hi / 64] |= 1 << (e.hi % 64);
        nbr[e.hi][e.lo / 64] |= 1 << (e.lo % 64);
    }
    let mut cand = vec![0u64; words];
    for v in 0..n {
        cand[v / 64] |= 1 << (v % 64);
    }
    let mut best = 0;
    expand(&nbr, &mut cand, 0, &mut best);
    Ok(best)
}

fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn expand(nbr: &[Vec<u64>], cand: &mut [u64], size: usize, best: &mut usize) {
    if size + popcount(cand) <= *best {
        return;
    }
    if popcount(cand) == 0 {
        if size > *best {
            *best = size;
        }
        return;
    }
    let words = cand.len();
    // branch on the lowest candidate vertex: either take it or drop it
    let v = cand
        .iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
        .expect("candidate set non-empty");
    let mut with_v = vec![0u64; words];
    for i in 0..words {
        with_v[i] = cand[i] & nbr[v][i];
    }
    expand(nbr, &mut with_v, size + 1, best);
    cand[v / 64] &= !(1 << (v % 64));
    expand(nbr, cand, size, best);
}

/// Exact chromatic number: backtracking over vertices in index order,
/// seeded with the clique lower bound, increasing k until colourable.
pub fn bf_chromatic(g: &OrderedGraph, max_n: usize) -> Result<usize> {
    let n = g.num_vertices();
    if n > max_n {
        return Err(Error::SizeGuard {
            what: "bf_chromatic vertex count",
            limit: max_n,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.num_edges() == 0 {
        return Ok(1);
    }
    let lower = bf_clique(g, max_n)?;
    let mut k = lower.max(2);
    loop {
        let mut colours = vec![usize::MAX; n];
        if colourable(g, k, &mut colours, 0, 0) {
            return Ok(k);
        }
        k += 1;
    }
}

fn colourable(g: &OrderedGraph, k: usize, colours: &mut [usize], v: usize, max_used: usize) -> bool {
    if v == g.num_vertices() {
        return true;
    }
    // trying colours only up to max_used+1 breaks colour-permutation symmetry
    for c in 0..k.min(max_used + 2) {
        let clash = g.neighbours(v).iter().any(|&w| w < v && colours[w] == c);
        if !clash {
            colours[v] = c;
            if colourable(g, k, colours, v + 1, max_used.max(c + 1)) {
                return true;
            }
        }
    }
    colours[v] = usize::MAX;
    false
}

/// Literal crossing-sequence search: depth-first over chains of distinct
/// edges, each crossing the next, starting at an edge with smaller end `u`
/// and stopping at an edge with larger end `v`. For `v < u` the graph is
/// rotated so that `u` comes first, per the cyclic reading.
pub fn bf_crossing_sequence(
    g: &OrderedGraph,
    u: usize,
    v: usize,
    max_edges: usize,
) -> Result<bool> {
    let n = g.num_vertices();
    if u == v {
        return Err(Error::IdenticalVertices { v: u });
    }
    if u >= n {
        return Err(Error::VertexOutOfRange { v: u, n });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    let m = g.num_edges();
    if m > max_edges {
        return Err(Error::SizeGuard { what: "bf_crossing_sequence edges", limit: max_edges, actual: m });
    }
    if u < v {
        let edges = g.edges();
        let mut used = vec![false; edges.len()];
        for i in 0..edges.len() {
            if edges[i].lo == u {
                used[i] = true;
                if dfs_chain(edges, i, v, &mut used) {
                    return Ok(true);
                }
                used[i] = false;
            }
        }
        Ok(false)
    } else {
        let (rg, _) = g.rotate(u)?;
        bf_crossing_sequence(&rg, 0, (v + n - u) % n, max_edges)
    }
}

fn dfs_chain(edges: &[Edge], cur: usize, target: usize, used: &mut [bool]) -> bool {
    if edges[cur].hi == target {
        return true;
    }
    for j in 0..edges.len() {
        if !used[j] && crate::graph::edges_cross(edges[cur], edges[j]) {
            used[j] = true;
            if dfs_chain(edges, j, target, used) {
                return true;
            }
            used[j] = false;
        }
    }
    false
}

/// Verifies that `seq` is a crossing sequence from `u` to `v` by the
/// definition, rotating first when `v < u`.
pub fn verify_crossing_sequence(g: &OrderedGraph, u: usize, v: usize, seq: &[Edge]) -> bool {
    if u == v || seq.is_empty() {
        return false;
    }
    let n = g.num_vertices();
    if u >= n || v >= n {
        return false;
    }
    if seq.iter().any(|e| !g.has_edge(e.lo, e.hi)) {
        return false;
    }
    let mut sorted: Vec<Edge> = seq.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != seq.len() {
        return false; // edges must be distinct
    }
    let (relabelled, ru, rv): (Vec<Edge>, usize, usize) = if u < v {
        (seq.to_vec(), u, v)
    } else {
        let map = |w: usize| (w + n - u) % n;
        let seq2: Vec<Edge> =
            seq.iter().map(|e| Edge::new(map(e.lo), map(e.hi)).expect("distinct")).collect();
        (seq2, 0, map(v))
    };
    if relabelled[0].lo != ru || relabelled.last().unwrap().hi != rv {
        return false;
    }
    relabelled.windows(2).all(|w| crate::graph::edges_cross(w[0], w[1]))
}

/// Quadruple-enumeration cappedness check; returns the lexicographically
/// least violation.
pub fn bf_capped(g: &OrderedGraph, max_n: usize) -> Result<Option<CappedViolation>> {
    let n = g.num_vertices();
    if n > max_n {
        return Err(Error::SizeGuard { what: "bf_capped vertex count", limit: max_n, actual: n });
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if g.has_edge(a, c) && g.has_edge(b, d) && !g.has_edge(a, d) {
                        return Ok(Some(CappedViolation { a, b, c, d }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Ordered-hole search by enumeration of all vertex subsets.
pub fn bf_holes(g: &OrderedGraph, max_n: usize) -> Result<Option<HoleWitness>> {
    let n = g.num_vertices();
    if n > max_n {
        return Err(Error::SizeGuard { what: "bf_holes vertex count", limit: max_n, actual: n });
    }
    for mask in 0u64..(1u64 << n) {
        if (mask.count_ones() as usize) < 4 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if is_hole(g, &verts) {
            return Ok(Some(HoleWitness { cycle: verts }));
        }
    }
    Ok(None)
}

fn is_hole(g: &OrderedGraph, verts: &[usize]) -> bool {
    let k = verts.len();
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(verts[i], verts[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

/// Outcome of checking a candidate colouring.
#[derive(Debug, Clone, Serialize)]
pub struct ColouringCheck {
    pub proper: bool,
    pub num_colours: usize,
    /// A monochromatic edge, when not proper.
    pub violation: Option<Edge>,
}

/// Checks properness (no monochromatic edge) and counts distinct colours.
pub fn verify_colouring(g: &OrderedGraph, colours: &[usize]) -> ColouringCheck {
    if colours.len() != g.num_vertices() {
        return ColouringCheck { proper: false, num_colours: 0, violation: None };
    }
    let mut distinct: Vec<usize> = colours.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for &e in g.edges() {
        if colours[e.lo] == colours[e.hi] {
            return ColouringCheck { proper: false, num_colours: distinct.len(), violation: Some(e) };
        }
    }
    ColouringCheck { proper: true, num_colours: distinct.len(), violation: None }
}
