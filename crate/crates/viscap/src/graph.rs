//! Ordered graphs: vertices `0..n` under their numeric order, an edge set,
//! rotation, induced subgraphs, and the `.og` text format.
//!
//! Every algorithm in this crate works on a single canonical vertex order.
//! Cyclic notions (crossing sequences in the "wrap-around" direction) are
//! handled by rotating explicitly and translating results back.

use crate::error::{Error, Result};
use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};
use std::fmt::Write as _;

/// An edge, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub lo: usize,
    pub hi: usize,
}

impl Edge {
    /// Normalizes an endpoint pair; rejects self-loops.
    pub fn new(u: usize, v: usize) -> Result<Edge> {
        if u == v {
            return Err(Error::SelfLoop { v: u });
        }
        Ok(Edge { lo: u.min(v), hi: u.max(v) })
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.lo)?;
        t.serialize_element(&self.hi)?;
        t.end()
    }
}

/// `ac` crosses `bd` exactly when a < b < c < d. The relation is directed:
/// `edges_cross(e, f)` does not imply `edges_cross(f, e)`.
pub fn edges_cross(e: Edge, f: Edge) -> bool {
    e.lo < f.lo && f.lo < e.hi && e.hi < f.hi
}

/// A block `V[x,y]` of consecutive vertices, `x < y`.
///
/// Vertices strictly between `x` and `y` are interior; vertices outside
/// `[x,y]` are exterior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Segment {
    pub x: usize,
    pub y: usize,
}

impl Segment {
    pub fn new(x: usize, y: usize) -> Result<Segment> {
        if x >= y {
            return Err(Error::BadSegment { x, y });
        }
        Ok(Segment { x, y })
    }

    /// Interior vertices, `x+1 .. y`.
    pub fn interior(&self) -> std::ops::Range<usize> {
        self.x + 1..self.y
    }

    pub fn contains(&self, v: usize) -> bool {
        self.x <= v && v <= self.y
    }

    pub fn len(&self) -> usize {
        self.y - self.x + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// An immutable graph on vertices `0..n` ordered by index.
///
/// Construction canonicalizes the edge list (endpoints sorted, duplicates
/// collapsed) and derives per-vertex sorted neighbour lists. All operations
/// are pure; the structure is safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl OrderedGraph {
    /// Builds a graph from an endpoint-pair list. Pairs may come in either
    /// order; duplicates collapse. Out-of-range endpoints and self-loops are
    /// rejected with the offending pair.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<OrderedGraph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            edges.push(Edge::new(u, v)?);
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.lo].push(e.hi);
            adj[e.hi].push(e.lo);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(OrderedGraph { n, edges, adj })
    }

    /// Graph with no edges.
    pub fn edgeless(n: usize) -> OrderedGraph {
        OrderedGraph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> OrderedGraph {
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                pairs.push((u, v));
            }
        }
        OrderedGraph::build(n, &pairs).expect("complete graph is always valid")
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(lo, hi)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        self.adj[u].binary_search(&v).is_ok()
    }

    fn check_membership(&self, e: Edge) -> Result<()> {
        if !self.has_edge(e.lo, e.hi) {
            return Err(Error::EdgeNotInGraph { u: e.lo, v: e.hi });
        }
        Ok(())
    }

    /// Directed crossing test for two edges of this graph.
    pub fn crosses(&self, e: Edge, f: Edge) -> Result<bool> {
        self.check_membership(e)?;
        self.check_membership(f)?;
        Ok(edges_cross(e, f))
    }

    /// Relabels vertex `v` to `(v - r) mod n`, making `r` the new smallest
    /// vertex. Returns the rotated graph together with the back-map
    /// (`back[new] = old`) for translating results to original labels.
    pub fn rotate(&self, r: usize) -> Result<(OrderedGraph, Vec<usize>)> {
        if r >= self.n {
            return Err(Error::RotationOutOfRange { r, n: self.n });
        }
        let n = self.n;
        let relabel = |v: usize| (v + n - r) % n;
        let pairs: Vec<(usize, usize)> =
            self.edges.iter().map(|e| (relabel(e.lo), relabel(e.hi))).collect();
        let rotated = OrderedGraph::build(n, &pairs).expect("relabelling preserves validity");
        let mut back = vec![0; n];
        for old in 0..n {
            back[relabel(old)] = old;
        }
        Ok((rotated, back))
    }

    /// Induced subgraph on a strictly increasing vertex subset. Vertices are
    /// relabelled to `0..subset.len()` preserving relative order; the returned
    /// map satisfies `map[new] = old` (old-to-new is the position of `old`
    /// in the sorted subset).
    pub fn induced(&self, subset: &[usize]) -> Result<(OrderedGraph, Vec<usize>)> {
        for w in subset.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidSubset {
                    reason: format!("subset not strictly increasing at {}..{}", w[0], w[1]),
                });
            }
        }
        if let Some(&last) = subset.last() {
            if last >= self.n {
                return Err(Error::VertexOutOfRange { v: last, n: self.n });
            }
        }
        let mut pairs = Vec::new();
        for (iu, &u) in subset.iter().enumerate() {
            for (iv, &v) in subset.iter().enumerate().skip(iu + 1) {
                if self.has_edge(u, v) {
                    pairs.push((iu, iv));
                }
            }
        }
        let sub = OrderedGraph::build(subset.len(), &pairs).expect("induced edges are valid");
        Ok((sub, subset.to_vec()))
    }

    /// Parses the `.og` text format: a header line `n m`, then `m` lines
    /// `u v` (either endpoint order); lines starting with `#` and blank
    /// lines are skipped. Duplicate edges collapse with a warning.
    pub fn parse(text: &str) -> Result<(OrderedGraph, Vec<String>)> {
        let mut warnings = Vec::new();
        let mut data_lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = data_lines
            .next()
            .ok_or(Error::Parse { line: 0, msg: "missing header line".into() })?;
        let mut it = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
            tok.ok_or(Error::Parse { line, msg: format!("missing {what}") })?
                .parse::<usize>()
                .map_err(|_| Error::Parse { line, msg: format!("invalid {what}") })
        };
        let n = parse_num(it.next(), hline, "vertex count")?;
        let m = parse_num(it.next(), hline, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse { line: hline, msg: "trailing tokens after header".into() });
        }

        let mut pairs = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, l) = data_lines
                .next()
                .ok_or(Error::Parse { line: 0, msg: format!("expected {m} edge lines") })?;
            let mut it = l.split_whitespace();
            let u = parse_num(it.next(), line, "endpoint")?;
            let v = parse_num(it.next(), line, "endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse { line, msg: "trailing tokens after edge".into() });
            }
            if u >= n || v >= n {
                return Err(Error::Parse { line, msg: format!("endpoint out of range: {u} {v}") });
            }
            if u == v {
                return Err(Error::Parse { line, msg: format!("self-loop on {u}") });
            }
            let e = Edge::new(u, v).expect("checked above");
            if pairs.contains(&(e.lo, e.hi)) {
                warnings.push(format!("line {line}: duplicate edge {} {} collapsed", e.lo, e.hi));
            } else {
                pairs.push((e.lo, e.hi));
            }
        }
        if let Some((line, _)) = data_lines.next() {
            return Err(Error::Parse { line, msg: "unexpected data after edge list".into() });
        }
        let g = OrderedGraph::build(n, &pairs)?;
        Ok((g, warnings))
    }

    /// Canonical `.og` serialization: edges sorted by `(lo, hi)`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for e in &self.edges {
            let _ = writeln!(out, "{} {}", e.lo, e.hi);
        }
        out
    }
}
