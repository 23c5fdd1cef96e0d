//! Crossing sequences: the crossing digraph on edges, reachability between
//! vertices through chains of crossing edges, valid segments, and the
//! left/right/strongly reachable vertex sets of a valid segment.
//!
//! A crossing sequence from `u` to `v` is a chain of edges `e1, ..., ek`,
//! each crossing the next, with `u` the smaller end of `e1` and `v` the
//! larger end of `e_k` — interpreted in a rotation placing `u` before `v`
//! when `v < u`. The answer is independent of which such rotation is used,
//! so we always rotate `u` to position 0 (for forward queries) or the
//! target to the last position (for reverse queries).

use crate::error::{Error, Result};
use crate::graph::{edges_cross, Edge, OrderedGraph, Segment};

/// The digraph with a node per edge and an arc `e -> f` whenever `e`
/// crosses `f`. Acyclic: arcs strictly increase the smaller endpoint.
#[derive(Debug, Clone)]
pub struct CrossingDigraph {
    /// Node set; index-aligned with `arcs`. Sorted by `(lo, hi)`.
    pub nodes: Vec<Edge>,
    /// `arcs[i]` lists indices `j` with `nodes[i]` crossing `nodes[j]`.
    pub arcs: Vec<Vec<usize>>,
}

/// Builds the crossing digraph of `g`.
pub fn crossing_digraph(g: &OrderedGraph) -> CrossingDigraph {
    let nodes = g.edges().to_vec();
    let mut arcs = vec![Vec::new(); nodes.len()];
    for (i, &e) in nodes.iter().enumerate() {
        for (j, &f) in nodes.iter().enumerate() {
            if edges_cross(e, f) {
                arcs[i].push(j);
            }
        }
    }
    CrossingDigraph { nodes, arcs }
}

/// Left-, right-, and strongly reachable vertices of a valid segment.
///
/// `left` holds the vertices of `V[x,y)` reachable by a crossing sequence
/// from `y`; `right` holds the vertices of `V(x,y]` with a crossing sequence
/// to `x`; `strong` is their intersection (always strictly interior).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachSets {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub strong: Vec<usize>,
}

/// Memoizes per-vertex reachability sets over one graph. Each distinct
/// source (or target) costs one rotation plus one traversal of the
/// crossing digraph; repeated queries are table lookups.
///
/// The cache is call-local scratch: create one per algorithm invocation.
pub struct ReachCache<'g> {
    g: &'g OrderedGraph,
    from: Vec<Option<Box<[bool]>>>,
    to: Vec<Option<Box<[bool]>>>,
}

impl<'g> ReachCache<'g> {
    pub fn new(g: &'g OrderedGraph) -> Self {
        let n = g.num_vertices();
        ReachCache { g, from: vec![None; n], to: vec![None; n] }
    }

    pub fn graph(&self) -> &'g OrderedGraph {
        self.g
    }

    /// True iff there is a crossing sequence from `u` to `v` (`u != v`).
    pub fn reaches(&mut self, u: usize, v: usize) -> bool {
        debug_assert_ne!(u, v);
        self.from_set(u)[v]
    }

    /// All `v` with a crossing sequence from `u` to `v`, as a bool table.
    pub fn from_set(&mut self, u: usize) -> &[bool] {
        if self.from[u].is_none() {
            self.from[u] = Some(compute_from(self.g, u));
        }
        self.from[u].as_deref().unwrap()
    }

    /// All `v` with a crossing sequence from `v` to `x`, as a bool table.
    pub fn to_set(&mut self, x: usize) -> &[bool] {
        if self.to[x].is_none() {
            self.to[x] = Some(compute_to(self.g, x));
        }
        self.to[x].as_deref().unwrap()
    }

    /// True iff `V[x,y]` is valid: a crossing sequence runs from `y` back
    /// to `x` through the exterior.
    pub fn is_valid_segment(&mut self, s: Segment) -> bool {
        s.y < self.g.num_vertices() && self.reaches(s.y, s.x)
    }

    /// Reachability classification of a valid segment's vertices.
    pub fn reach_sets(&mut self, s: Segment) -> Result<ReachSets> {
        if s.y >= self.g.num_vertices() {
            return Err(Error::VertexOutOfRange { v: s.y, n: self.g.num_vertices() });
        }
        if !self.is_valid_segment(s) {
            return Err(Error::InvalidSegment(s));
        }
        let left: Vec<usize> = {
            let from_y = self.from_set(s.y);
            (s.x..s.y).filter(|&v| from_y[v]).collect()
        };
        let right: Vec<usize> = {
            let to_x = self.to_set(s.x);
            (s.x + 1..=s.y).filter(|&v| to_x[v]).collect()
        };
        let strong: Vec<usize> =
            left.iter().copied().filter(|v| right.binary_search(v).is_ok()).collect();
        debug_assert!(left.binary_search(&s.x).is_ok());
        debug_assert!(right.binary_search(&s.y).is_ok());
        debug_assert!(strong.iter().all(|&v| s.x < v && v < s.y));
        Ok(ReachSets { left, right, strong })
    }
}

/// Forward reachability from `u`: rotate `u` to position 0, then walk the
/// crossing digraph from every edge whose smaller end is `u`, collecting
/// the larger ends of all visited edges.
fn compute_from(g: &OrderedGraph, u: usize) -> Box<[bool]> {
    let n = g.num_vertices();
    let mut out = vec![false; n].into_boxed_slice();
    if n == 0 || g.num_edges() == 0 {
        return out;
    }
    let (rg, back) = g.rotate(u).expect("source vertex in range");
    let edges = rg.edges();
    let mut visited = vec![false; edges.len()];
    let mut queue: Vec<usize> = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if e.lo == 0 {
            visited[i] = true;
            queue.push(i);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let e = edges[queue[head]];
        head += 1;
        out[back[e.hi]] = true;
        // successors: f with e.lo < f.lo < e.hi < f.hi; edge list is sorted
        // by (lo, hi), so scan the lo-range (e.lo, e.hi)
        let start = edges.partition_point(|f| f.lo <= e.lo);
        for j in start..edges.len() {
            if edges[j].lo >= e.hi {
                break;
            }
            if !visited[j] && edges[j].hi > e.hi {
                visited[j] = true;
                queue.push(j);
            }
        }
    }
    out
}

/// Reverse reachability to `x`: rotate `x` to the last position (so every
/// other vertex precedes it), then walk the crossing digraph backwards from
/// every edge whose larger end is `x`, collecting smaller ends.
fn compute_to(g: &OrderedGraph, x: usize) -> Box<[bool]> {
    let n = g.num_vertices();
    let mut out = vec![false; n].into_boxed_slice();
    if n == 0 || g.num_edges() == 0 {
        return out;
    }
    let (rg, back) = g.rotate((x + 1) % n).expect("rotation in range");
    let edges = rg.edges();
    let last = n - 1;
    debug_assert_eq!(back[last], x);
    // index of edges sorted by (hi, lo) for backward range scans
    let mut by_hi: Vec<usize> = (0..edges.len()).collect();
    by_hi.sort_unstable_by_key(|&i| (edges[i].hi, edges[i].lo));
    let his: Vec<usize> = by_hi.iter().map(|&i| edges[i].hi).collect();

    let mut visited = vec![false; edges.len()];
    let mut queue: Vec<usize> = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if e.hi == last {
            visited[i] = true;
            queue.push(i);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let f = edges[queue[head]];
        head += 1;
        out[back[f.lo]] = true;
        // predecessors: e with e.lo < f.lo < e.hi < f.hi; scan the hi-range
        // (f.lo, f.hi) in the by_hi index
        let start = his.partition_point(|&h| h <= f.lo);
        for k in start..by_hi.len() {
            if his[k] >= f.hi {
                break;
            }
            let j = by_hi[k];
            if !visited[j] && edges[j].lo < f.lo {
                visited[j] = true;
                queue.push(j);
            }
        }
    }
    out
}

/// Decides whether a crossing sequence from `u` to `v` exists.
pub fn has_crossing_sequence(g: &OrderedGraph, u: usize, v: usize) -> Result<bool> {
    check_pair(g, u, v)?;
    Ok(compute_from(g, u)[v])
}

/// Like [`has_crossing_sequence`], but extracts a witness sequence in
/// original edge labels: minimal hop count, ties broken towards the
/// lexicographically smallest edge in the query's rotated frame.
pub fn crossing_sequence_witness(
    g: &OrderedGraph,
    u: usize,
    v: usize,
) -> Result<Option<Vec<Edge>>> {
    check_pair(g, u, v)?;
    let n = g.num_vertices();
    let (rg, back) = g.rotate(u)?;
    let target = (v + n - u) % n;
    let edges = rg.edges();
    let mut pred: Vec<Option<usize>> = vec![None; edges.len()];
    let mut seen = vec![false; edges.len()];
    let mut level: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].lo == 0).collect();
    for &i in &level {
        seen[i] = true;
    }
    loop {
        if let Some(&hit) = level.iter().find(|&&i| edges[i].hi == target) {
            let mut seq = Vec::new();
            let mut cur = Some(hit);
            while let Some(i) = cur {
                let e = edges[i];
                seq.push(Edge::new(back[e.lo], back[e.hi]).expect("distinct endpoints"));
                cur = pred[i];
            }
            seq.reverse();
            return Ok(Some(seq));
        }
        let mut next = Vec::new();
        for &i in &level {
            let e = edges[i];
            let start = edges.partition_point(|f| f.lo <= e.lo);
            for j in start..edges.len() {
                if edges[j].lo >= e.hi {
                    break;
                }
                if !seen[j] && edges[j].hi > e.hi {
                    seen[j] = true;
                    pred[j] = Some(i);
                    next.push(j);
                }
            }
        }
        if next.is_empty() {
            return Ok(None);
        }
        next.sort_unstable();
        level = next;
    }
}

fn check_pair(g: &OrderedGraph, u: usize, v: usize) -> Result<()> {
    if u == v {
        return Err(Error::IdenticalVertices { v: u });
    }
    let n = g.num_vertices();
    if u >= n {
        return Err(Error::VertexOutOfRange { v: u, n });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    Ok(())
}

/// True iff `V[x,y]` admits a crossing sequence from `y` back to `x`.
pub fn is_valid_segment(g: &OrderedGraph, s: Segment) -> bool {
    ReachCache::new(g).is_valid_segment(s)
}

/// One-shot [`ReachCache::reach_sets`].
pub fn reach_sets(g: &OrderedGraph, s: Segment) -> Result<ReachSets> {
    ReachCache::new(g).reach_sets(s)
}
