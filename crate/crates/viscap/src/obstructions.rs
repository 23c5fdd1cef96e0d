//! Recognizers, with verifiable witnesses, for the hereditary conditions an
//! ordered graph must satisfy to arise from curve visibility: H-freeness
//! (no non-adjacent pair joined by crossing sequences in both cyclic
//! directions), ordered-hole-freeness, cappedness, and — for the colouring
//! machinery — ordered outerplanarity.

use crate::graph::{edges_cross, Edge, OrderedGraph};
use crate::reach::{crossing_sequence_witness, ReachCache};
use serde::Serialize;

/// A non-adjacent pair with crossing sequences both ways; certifies
/// membership in the obstruction family H.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HWitness {
    pub u: usize,
    pub v: usize,
    pub seq_uv: Vec<Edge>,
    pub seq_vu: Vec<Edge>,
}

/// An induced cycle `c1 < ... < ck` (k >= 4) whose edges are exactly the
/// consecutive pairs plus `{c1, ck}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoleWitness {
    pub cycle: Vec<usize>,
}

/// Vertices `a < b < c < d` with `ac, bd` edges but no cap edge `ad`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CappedViolation {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// Tests every non-adjacent pair in both cyclic directions; `None` means
/// the graph is H-free. The returned witness is the first hit in
/// lexicographic pair order, with deterministic minimal-hop sequences.
pub fn find_h_obstruction(g: &OrderedGraph) -> Option<HWitness> {
    let n = g.num_vertices();
    let mut cache = ReachCache::new(g);
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            if cache.reaches(u, v) && cache.reaches(v, u) {
                let seq_uv = crossing_sequence_witness(g, u, v)
                    .expect("valid query")
                    .expect("reachability established");
                let seq_vu = crossing_sequence_witness(g, v, u)
                    .expect("valid query")
                    .expect("reachability established");
                return Some(HWitness { u, v, seq_uv, seq_vu });
            }
        }
    }
    None
}

/// Searches for an induced ordered hole. For each edge `{u,v}` the common
/// neighbours of `u` and `v` are discarded and a shortest strictly
/// increasing path from `u` to `v` (other than the edge itself) is sought
/// inside `V[u,v]`; shortest increasing paths are chordless, so the path
/// plus the edge `uv` is a hole.
pub fn find_ordered_hole(g: &OrderedGraph) -> Option<HoleWitness> {
    let n = g.num_vertices();
    for &e in g.edges() {
        let (u, v) = (e.lo, e.hi);
        if v - u < 3 {
            // a hole needs at least two intermediate vertices
            continue;
        }
        let mut alive = vec![false; n];
        alive[u..=v].fill(true);
        for &w in g.neighbours(u) {
            if w != v && w > u && w < v && g.has_edge(w, v) {
                alive[w] = false;
            }
        }
        // BFS over increasing edges from u to v, skipping the direct arc
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut queue = vec![u];
        let mut head = 0;
        'bfs: while head < queue.len() {
            let w = queue[head];
            head += 1;
            for &z in g.neighbours(w) {
                if z <= w || z > v || !alive[z] || seen[z] {
                    continue;
                }
                if w == u && z == v {
                    continue; // the edge uv itself is not a path
                }
                seen[z] = true;
                parent[z] = Some(w);
                if z == v {
                    break 'bfs;
                }
                queue.push(z);
            }
        }
        if seen[v] {
            let mut cycle = Vec::new();
            let mut cur = Some(v);
            while let Some(w) = cur {
                cycle.push(w);
                cur = parent[w];
            }
            cycle.reverse();
            debug_assert!(cycle.len() >= 4);
            debug_assert!(cycle.windows(2).all(|w| w[0] < w[1]));
            return Some(HoleWitness { cycle });
        }
    }
    None
}

/// Scans crossing edge pairs for a missing cap edge; returns the
/// lexicographically least violating quadruple, or `None` if capped.
/// Direction-sensitive on purpose: cappedness is not rotation-invariant.
pub fn find_capped_violation(g: &OrderedGraph) -> Option<CappedViolation> {
    let edges = g.edges();
    let mut best: Option<CappedViolation> = None;
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if f.lo >= e.hi {
                break; // sorted by (lo, hi): no later edge can cross e
            }
            if edges_cross(e, f) && !g.has_edge(e.lo, f.hi) {
                let cand = CappedViolation { a: e.lo, b: f.lo, c: e.hi, d: f.hi };
                let key = (cand.a, cand.b, cand.c, cand.d);
                if best.is_none_or(|b| key < (b.a, b.b, b.c, b.d)) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

/// First crossing pair in lexicographic order; `None` means the ordered
/// graph is outerplanar.
pub fn find_crossing_pair(g: &OrderedGraph) -> Option<(Edge, Edge)> {
    let edges = g.edges();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if f.lo >= e.hi {
                break;
            }
            if edges_cross(e, f) {
                return Some((e, f));
            }
        }
    }
    None
}
