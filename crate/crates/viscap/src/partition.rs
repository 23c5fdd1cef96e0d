//! Partition of an H-free ordered graph's vertices into three classes each
//! inducing a capped subgraph.
//!
//! The engine is a precolouring-extension recursion on valid segments. A
//! `V[x,y]`-precolouring is a partial 3-colouring in which (i) every colour
//! class induces a capped subgraph, (ii) exactly the strongly reachable
//! vertices and the two ends are coloured inside the segment, and (iii) the
//! strongly reachable vertices share one colour which no exterior neighbour
//! of an interior vertex wears. The extension colours all interior vertices
//! while keeping every colour class capped inside the segment.
//!
//! Two shapes of recursion step exist. With no strongly reachable vertices
//! the segment is split along a chain of "largest visible neighbour" jumps
//! and sub-segments alternate between the two free colours. Otherwise the
//! strongly reachable vertices cut the segment into blocks, each block is
//! covered by overlapping left- and right-leaning families of valid
//! sub-segments, and the families are processed one sub-segment at a time,
//! uncolouring overlap regions between steps.

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, Segment};
use crate::obstructions::{find_capped_violation, find_h_obstruction};
use crate::reach::{ReachCache, ReachSets};

/// Per-vertex optional colour in `{0, 1, 2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColouring {
    assign: Vec<Option<u8>>,
}

impl PartialColouring {
    pub fn new(n: usize) -> PartialColouring {
        PartialColouring { assign: vec![None; n] }
    }

    pub fn len(&self) -> usize {
        self.assign.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assign.is_empty()
    }

    pub fn get(&self, v: usize) -> Option<u8> {
        self.assign[v]
    }

    pub fn set(&mut self, v: usize, c: u8) {
        debug_assert!(c < 3);
        self.assign[v] = Some(c);
    }

    pub fn unset(&mut self, v: usize) {
        self.assign[v] = None;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionOptions {
    /// Run the full precolouring check (including capped colour classes) at
    /// every recursion entry. On by default; disable for benchmarking only.
    pub defensive: bool,
    /// Key the Case-1 colour permutation off the final chain sub-segment
    /// instead of the penultimate one. Only the penultimate sub-segment's
    /// interior can be adjacent to `y`, which is why the penultimate
    /// reading is the default; the switch exists for experimentation, and
    /// the defensive checks surface any violation either way.
    pub permute_on_final_segment: bool,
}

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions { defensive: true, permute_on_final_segment: false }
    }
}

/// The two overlapping families of valid sub-segments covering a host
/// segment in the strongly-reachable case. Segments in `left` have no
/// right-reachable interior vertices; segments in `right` have no
/// left-reachable ones. Within each family segments are internally
/// disjoint, and together the families cover the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentFamilies {
    pub left: Vec<Segment>,
    pub right: Vec<Segment>,
}

/// The two colours other than `c`, smaller index first.
fn other_two(c: u8) -> (u8, u8) {
    match c {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Left,
    Right,
}

/// Builds the segment families for a host segment whose strongly reachable
/// set is non-empty.
pub fn segment_families(g: &OrderedGraph, host: Segment) -> Result<SegmentFamilies> {
    let mut cache = ReachCache::new(g);
    let rs = cache.reach_sets(host)?;
    if rs.strong.is_empty() {
        return Err(Error::NoStronglyReachable(host));
    }
    Ok(build_families(host, &rs))
}

fn build_families(host: Segment, rs: &ReachSets) -> SegmentFamilies {
    let in_left = |v: usize| rs.left.binary_search(&v).is_ok();
    let in_right = |v: usize| rs.right.binary_search(&v).is_ok();
    let mut bounds = Vec::with_capacity(rs.strong.len() + 2);
    bounds.push(host.x);
    bounds.extend(rs.strong.iter().copied());
    bounds.push(host.y);

    let mut fams = SegmentFamilies { left: Vec::new(), right: Vec::new() };
    let last = bounds.len() - 2;
    for (bi, w) in bounds.windows(2).enumerate() {
        let (p, q) = (w[0], w[1]);
        if bi < last {
            block_segments(p, q, &in_right, &in_left, false, &mut fams.right, &mut fams.left);
        } else {
            // final block: the roles of the families switch
            block_segments(p, q, &in_left, &in_right, true, &mut fams.left, &mut fams.right);
        }
    }
    fams
}

/// Covers one block `V[p,q]` between consecutive strongly reachable
/// boundary vertices. Primary segments wrap each maximal run of interior
/// vertices that contains a trigger vertex and no flank vertex, stretching
/// to the nearest flank vertex on each side. The gaps between primary
/// segments are then extended to the nearest trigger vertex (rightward in
/// ordinary blocks, leftward in the final block) and assigned to the other
/// family.
fn block_segments(
    p: usize,
    q: usize,
    trigger: &dyn Fn(usize) -> bool,
    flank: &dyn Fn(usize) -> bool,
    extend_left: bool,
    primary_out: &mut Vec<Segment>,
    gap_out: &mut Vec<Segment>,
) {
    debug_assert!(flank(p) && flank(q));
    let mut primary = Vec::new();
    let mut v = p + 1;
    while v < q {
        if trigger(v) && !flank(v) {
            let mut lo = v - 1;
            while lo > p && !flank(lo) {
                lo -= 1;
            }
            let mut hi = v + 1;
            while hi < q && !flank(hi) {
                hi += 1;
            }
            primary.push(Segment::new(lo, hi).expect("lo < v < hi"));
            v = hi;
        } else {
            v += 1;
        }
    }

    let mut gaps: Vec<(usize, usize)> = Vec::new();
    let mut gap_start = p;
    for seg in &primary {
        if seg.x > gap_start {
            gaps.push((gap_start, seg.x));
        }
        gap_start = seg.y;
    }
    if q > gap_start {
        gaps.push((gap_start, q));
    }

    for (gs, ge) in gaps {
        let seg = if extend_left {
            let mut l = gs;
            while !trigger(l) {
                debug_assert!(l > p);
                l -= 1;
            }
            Segment::new(l, ge).expect("l <= gs < ge")
        } else {
            let mut r = ge;
            while !trigger(r) {
                debug_assert!(r < q);
                r += 1;
            }
            Segment::new(gs, r).expect("gs < ge <= r")
        };
        gap_out.push(seg);
    }
    primary_out.append(&mut primary);
}

struct Extender<'g> {
    g: &'g OrderedGraph,
    cache: ReachCache<'g>,
    opts: PartitionOptions,
}

impl<'g> Extender<'g> {
    fn new(g: &'g OrderedGraph, opts: PartitionOptions) -> Self {
        Extender { g, cache: ReachCache::new(g), opts }
    }

    fn extend(&mut self, host: Segment, phi: &mut PartialColouring, depth: usize) -> Result<()> {
        assert!(depth <= self.g.num_vertices(), "recursion depth exceeded vertex count");
        let rs = self.check_precolouring(host, phi)?;
        if host.interior().all(|v| phi.get(v).is_some()) {
            return Ok(());
        }
        if rs.strong.is_empty() {
            self.extend_no_strong(host, phi, depth)
        } else {
            self.extend_with_strong(host, &rs, phi, depth)
        }
    }

    /// Validates the precolouring contract for `host` and returns its reach
    /// sets. Segment validity is always enforced; the remaining conditions
    /// run only in defensive mode.
    fn check_precolouring(&mut self, host: Segment, phi: &PartialColouring) -> Result<ReachSets> {
        let rs = self.cache.reach_sets(host)?;
        if !self.opts.defensive {
            return Ok(rs);
        }
        for end in [host.x, host.y] {
            if phi.get(end).is_none() {
                return Err(Error::NotPrecolouring {
                    condition: "ii",
                    detail: format!("segment end {end} is uncoloured"),
                });
            }
        }
        for v in host.interior() {
            let strong = rs.strong.binary_search(&v).is_ok();
            if strong && phi.get(v).is_none() {
                return Err(Error::NotPrecolouring {
                    condition: "ii",
                    detail: format!("strongly reachable vertex {v} is uncoloured"),
                });
            }
            if !strong && phi.get(v).is_some() {
                return Err(Error::NotPrecolouring {
                    condition: "ii",
                    detail: format!("interior vertex {v} is coloured but not strongly reachable"),
                });
            }
        }
        if let Some(&s0) = rs.strong.first() {
            let c_s = phi.get(s0).expect("checked above");
            if let Some(&w) = rs.strong.iter().find(|&&w| phi.get(w) != Some(c_s)) {
                return Err(Error::NotPrecolouring {
                    condition: "iii",
                    detail: format!("strongly reachable vertices {s0} and {w} wear different colours"),
                });
            }
            for v in host.interior() {
                for &u in self.g.neighbours(v) {
                    if !host.contains(u) && phi.get(u) == Some(c_s) {
                        return Err(Error::NotPrecolouring {
                            condition: "iii",
                            detail: format!(
                                "exterior vertex {u}, adjacent to interior vertex {v}, wears the strong colour"
                            ),
                        });
                    }
                }
            }
        }
        for c in 0..3u8 {
            let class: Vec<usize> =
                (0..self.g.num_vertices()).filter(|&v| phi.get(v) == Some(c)).collect();
            let (sub, map) = self.g.induced(&class).expect("class list is sorted");
            if let Some(viol) = find_capped_violation(&sub) {
                return Err(Error::NotPrecolouring {
                    condition: "i",
                    detail: format!(
                        "colour class {c} is not capped: ({},{},{},{})",
                        map[viol.a], map[viol.b], map[viol.c], map[viol.d]
                    ),
                });
            }
        }
        // the strongly reachable vertices together with the ends must
        // induce a capped subgraph before we recurse
        let mut core = Vec::with_capacity(rs.strong.len() + 2);
        core.push(host.x);
        core.extend(rs.strong.iter().copied());
        core.push(host.y);
        let (sub, map) = self.g.induced(&core).expect("core list is sorted");
        if let Some(viol) = find_capped_violation(&sub) {
            return Err(Error::NotPrecolouring {
                condition: "strong-core",
                detail: format!(
                    "strongly reachable set plus ends is not capped: ({},{},{},{})",
                    map[viol.a], map[viol.b], map[viol.c], map[viol.d]
                ),
            });
        }
        Ok(rs)
    }

    /// No strongly reachable vertices: build the jump chain
    /// `x = v0 < v1 < ... < v_{k+1} = y` (treating consecutive
    /// non-adjacent vertices as joined by a temporary edge), colour the
    /// chain with the colour of `x`, colour each sub-segment's strongly
    /// reachable vertices with the two free colours in alternation, and
    /// recurse into each sub-segment with interior.
    fn extend_no_strong(
        &mut self,
        host: Segment,
        phi: &mut PartialColouring,
        depth: usize,
    ) -> Result<()> {
        let (x, y) = (host.x, host.y);
        let phi_x = phi.get(x).expect("precolouring colours the ends");
        let phi_y = phi.get(y).expect("precolouring colours the ends");

        let mut chain = vec![x];
        // v1: the largest neighbour of x inside V[x,y); the virtual edge to
        // x+1 guarantees existence (the interior is non-empty here)
        let mut v1 = x + 1;
        for &z in self.g.neighbours(x) {
            if z > x && z < y {
                v1 = v1.max(z);
            }
        }
        chain.push(v1);
        while *chain.last().expect("non-empty") != y {
            let i = chain.len() - 1;
            let (prev, cur) = (chain[i - 1], chain[i]);
            // largest neighbour of any vertex in V(prev, cur], subject to
            // landing in V(cur, y]; the virtual edge (cur, cur+1) again
            // guarantees existence
            let mut next = cur + 1;
            for w in prev + 1..=cur {
                for &z in self.g.neighbours(w) {
                    if z > cur && z <= y {
                        next = next.max(z);
                    }
                }
            }
            chain.push(next);
        }
        let k = chain.len() - 2;
        debug_assert!(k >= 1);

        for &v in &chain[1..=k] {
            debug_assert!(phi.get(v).is_none());
            phi.set(v, phi_x);
        }

        let (blue, green) = other_two(phi_x);
        let rule = |i: usize, blue: u8, green: u8| if i % 2 == 1 { blue } else { green };
        let ref_idx = if self.opts.permute_on_final_segment { k } else { k - 1 };
        let (blue, green) =
            if rule(ref_idx, blue, green) == phi_y { (green, blue) } else { (blue, green) };

        let mut subsegments = Vec::new();
        for i in 0..=k {
            let (a, b) = (chain[i], chain[i + 1]);
            if b - a < 2 {
                continue;
            }
            let seg = Segment::new(a, b).expect("a < b");
            debug_assert!(seg.len() < host.len());
            let sub = self.cache.reach_sets(seg)?;
            let c = rule(i, blue, green);
            for &w in &sub.strong {
                debug_assert!(phi.get(w).is_none());
                phi.set(w, c);
            }
            subsegments.push(seg);
        }
        for seg in subsegments {
            self.extend(seg, phi, depth + 1)?;
        }
        Ok(())
    }

    /// Strongly reachable vertices present: cover the host with the two
    /// segment families and process them in ascending order, colouring
    /// fresh ends by their reachability side, colouring each sub-segment's
    /// strongly reachable set with its family colour, recursing, and
    /// uncolouring whatever lies interior to a not-yet-processed segment.
    fn extend_with_strong(
        &mut self,
        host: Segment,
        rs: &ReachSets,
        phi: &mut PartialColouring,
        depth: usize,
    ) -> Result<()> {
        let c_s = phi.get(rs.strong[0]).expect("precolouring colours the strong set");
        let (col_l, col_r) = other_two(c_s);

        let fams = build_families(host, rs);
        let mut segs: Vec<(Segment, Family)> = fams
            .left
            .iter()
            .map(|&s| (s, Family::Left))
            .chain(fams.right.iter().map(|&s| (s, Family::Right)))
            .collect();
        segs.sort_unstable_by_key(|&(s, _)| (s.x, s.y));
        debug_assert!(
            segs.windows(2).all(|w| (w[0].0.x, w[0].0.y) != (w[1].0.x, w[1].0.y)),
            "the two families never share a segment"
        );
        debug_assert!(segs.iter().all(|&(s, _)| {
            rs.strong.iter().all(|&sv| !(s.x < sv && sv < s.y))
                && s.x >= host.x
                && s.y <= host.y
                && s.len() < host.len()
        }));

        let mut considered = vec![false; segs.len()];
        for idx in 0..segs.len() {
            let (seg, fam) = segs[idx];
            for end in [seg.x, seg.y] {
                if phi.get(end).is_none() {
                    let l = rs.left.binary_search(&end).is_ok();
                    let r = rs.right.binary_search(&end).is_ok();
                    assert!(
                        l ^ r,
                        "uncoloured segment end {end} must be reachable on exactly one side"
                    );
                    phi.set(end, if l { col_l } else { col_r });
                }
            }
            let sub = self.cache.reach_sets(seg)?;
            let fam_colour = match fam {
                Family::Left => col_l,
                Family::Right => col_r,
            };
            for &w in &sub.strong {
                assert!(phi.get(w).is_none(), "interior of a fresh segment must be uncoloured");
                phi.set(w, fam_colour);
            }
            self.extend(seg, phi, depth + 1)?;
            considered[idx] = true;
            for (j, &(other, _)) in segs.iter().enumerate() {
                if !considered[j] {
                    for w in other.interior() {
                        phi.unset(w);
                    }
                }
            }
        }
        debug_assert!(host.interior().all(|v| phi.get(v).is_some()));
        Ok(())
    }
}

/// Extends a `V[x,y]`-precolouring to all interior vertices of `s`,
/// keeping every colour class capped inside the segment. Exterior
/// assignments are untouched.
pub fn extend_precolouring(
    g: &OrderedGraph,
    s: Segment,
    phi: PartialColouring,
) -> Result<PartialColouring> {
    extend_precolouring_with(g, s, phi, PartitionOptions::default())
}

pub fn extend_precolouring_with(
    g: &OrderedGraph,
    s: Segment,
    mut phi: PartialColouring,
    opts: PartitionOptions,
) -> Result<PartialColouring> {
    if phi.len() != g.num_vertices() {
        return Err(Error::NotPrecolouring {
            condition: "shape",
            detail: format!("colouring covers {} vertices, graph has {}", phi.len(), g.num_vertices()),
        });
    }
    let mut ext = Extender::new(g, opts);
    ext.extend(s, &mut phi, 0)?;
    Ok(phi)
}

/// Splits the vertices of an H-free ordered graph into three sets, each
/// inducing a capped subgraph. The graph is augmented with a new smallest
/// vertex, a new largest vertex, and an edge joining them; the augmented
/// ends are precoloured and the extension recursion does the rest.
pub fn partition_three_capped(g: &OrderedGraph) -> Result<[Vec<usize>; 3]> {
    partition_three_capped_with(g, PartitionOptions::default())
}

pub fn partition_three_capped_with(
    g: &OrderedGraph,
    opts: PartitionOptions,
) -> Result<[Vec<usize>; 3]> {
    if let Some(w) = find_h_obstruction(g) {
        return Err(Error::NotHFree(w));
    }
    partition_impl(g, opts)
}

/// Partition body; the caller has already established H-freeness.
pub(crate) fn partition_impl(g: &OrderedGraph, opts: PartitionOptions) -> Result<[Vec<usize>; 3]> {
    let n = g.num_vertices();
    if n == 0 {
        return Ok([Vec::new(), Vec::new(), Vec::new()]);
    }
    let mut pairs: Vec<(usize, usize)> =
        g.edges().iter().map(|e| (e.lo + 1, e.hi + 1)).collect();
    pairs.push((0, n + 1));
    let aug = OrderedGraph::build(n + 2, &pairs).expect("shifted edges stay in range");
    let mut phi = PartialColouring::new(n + 2);
    phi.set(0, 0);
    phi.set(n + 1, 0);
    let host = Segment::new(0, n + 1).expect("n >= 1");
    let mut ext = Extender::new(&aug, opts);
    ext.extend(host, &mut phi, 0)?;

    let mut parts: [Vec<usize>; 3] = Default::default();
    for v in 1..=n {
        let c = phi.get(v).expect("extension colours every interior vertex");
        parts[c as usize].push(v - 1);
    }
    for part in &parts {
        let (sub, map) = g.induced(part).expect("parts are sorted");
        if let Some(viol) = find_capped_violation(&sub) {
            return Err(Error::NotCapped(crate::obstructions::CappedViolation {
                a: map[viol.a],
                b: map[viol.b],
                c: map[viol.c],
                d: map[viol.d],
            }));
        }
    }
    Ok(parts)
}
