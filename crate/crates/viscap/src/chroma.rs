//! Clique number and colouring of capped graphs, and of H-free graphs via
//! the three-way capped partition.
//!
//! A capped graph peels into triangle-free capped layers: the edges that
//! are not "triangle-crossed" form one layer, and removing them drops the
//! clique number by exactly one. Each layer then loses its strippable
//! uncrossed edges (none when the input is ordered-hole-free; an uncrossed
//! edge serving as the cap of a crossing pair must stay, or the remainder
//! would lose cappedness), the remainder is 4-coloured through
//! breadth-first levels, the union of stripped edges is handled by a
//! degeneracy greedy, and the per-layer colours combine as tuples. H-free
//! graphs route through the three-way partition with disjoint palettes
//! per part.

use crate::error::{Error, Result};
use crate::graph::{edges_cross, Edge, OrderedGraph};
use crate::obstructions::{find_capped_violation, find_h_obstruction, find_ordered_hole};
use crate::partition::{partition_impl, PartitionOptions};
use serde::Serialize;
use std::collections::HashMap;

/// Input class a colouring certificate applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    CappedHoleFree,
    Capped,
    HfreeHoleFree,
    Hfree,
}

/// Edge-disjoint triangle-free capped layers covering the edge set, plus
/// the clique number they certify (layer count plus one, or 1 for an
/// edgeless input).
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub parts: Vec<OrderedGraph>,
    pub omega: usize,
}

/// A bare colouring produced by one pipeline stage.
#[derive(Debug, Clone)]
pub struct Colouring {
    pub colours: Vec<usize>,
    pub num_colours: usize,
}

/// A full colouring certificate: dense colours, the clique number, the
/// class-appropriate palette bound (saturating at u128::MAX), the actual
/// palette size, and the class tag.
#[derive(Debug, Clone)]
pub struct ColouringResult {
    pub colours: Vec<usize>,
    pub num_colours: usize,
    pub omega: usize,
    pub bound: u128,
    pub palette: u128,
    pub class_tag: GraphClass,
}

fn pow4(e: usize) -> u128 {
    u32::try_from(e).ok().and_then(|e| 4u128.checked_pow(e)).unwrap_or(u128::MAX)
}

fn mul_sat(a: u128, b: u128) -> u128 {
    a.saturating_mul(b)
}

/// First triangle in edge order, as `[a, b, c]` with `a < b < c`.
pub fn find_triangle(g: &OrderedGraph) -> Option<[usize; 3]> {
    for &e in g.edges() {
        let (mut i, mut j) = (0, 0);
        let (nu, nv) = (g.neighbours(e.lo), g.neighbours(e.hi));
        while i < nu.len() && j < nv.len() {
            match nu[i].cmp(&nv[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let mut t = [e.lo, e.hi, nu[i]];
                    t.sort_unstable();
                    return Some(t);
                }
            }
        }
    }
    None
}

/// The edges that are *not* triangle-crossed: `uv` (`u < v`) stays unless
/// `v` lies in a triangle whose other two vertices are at most `u`.
pub fn triangle_crossed_complement(g: &OrderedGraph) -> Vec<Edge> {
    g.edges()
        .iter()
        .copied()
        .filter(|e| {
            let small: Vec<usize> =
                g.neighbours(e.hi).iter().copied().take_while(|&w| w <= e.lo).collect();
            !small
                .iter()
                .enumerate()
                .any(|(i, &x)| small[i + 1..].iter().any(|&y| g.has_edge(x, y)))
        })
        .collect()
}

/// Decomposes a capped graph into triangle-free capped layers, certifying
/// its clique number. Each round splits off the non-triangle-crossed
/// edges; the remainder's clique number is exactly one less.
pub fn decompose_capped(g: &OrderedGraph) -> Result<Decomposition> {
    if let Some(w) = find_capped_violation(g) {
        return Err(Error::NotCapped(w));
    }
    Ok(decompose_inner(g))
}

pub(crate) fn decompose_inner(g: &OrderedGraph) -> Decomposition {
    let n = g.num_vertices();
    if g.num_edges() == 0 {
        return Decomposition { parts: vec![g.clone()], omega: n.min(1) };
    }
    let mut parts = Vec::new();
    let mut work = g.clone();
    loop {
        if find_triangle(&work).is_none() {
            parts.push(work);
            break;
        }
        let keep = triangle_crossed_complement(&work);
        debug_assert!(!keep.is_empty(), "a graph with edges always has an uncrossed edge");
        let rest: Vec<(usize, usize)> = work
            .edges()
            .iter()
            .filter(|e| keep.binary_search(e).is_err())
            .map(|e| (e.lo, e.hi))
            .collect();
        let keep_pairs: Vec<(usize, usize)> = keep.iter().map(|e| (e.lo, e.hi)).collect();
        parts.push(OrderedGraph::build(n, &keep_pairs).expect("edges stay in range"));
        work = OrderedGraph::build(n, &rest).expect("edges stay in range");
    }
    let omega = parts.len() + 1;
    Decomposition { parts, omega }
}

/// Clique number of an H-free ordered graph: for each edge `{u,v}` the
/// common in-between neighbours together with `u` and `v` induce a capped
/// graph, and every clique lives inside one of these.
pub fn clique_number_hfree(g: &OrderedGraph) -> Result<usize> {
    if let Some(w) = find_h_obstruction(g) {
        return Err(Error::NotHFree(w));
    }
    clique_hfree_impl(g)
}

pub(crate) fn clique_hfree_impl(g: &OrderedGraph) -> Result<usize> {
    if g.num_vertices() == 0 {
        return Ok(0);
    }
    if g.num_edges() == 0 {
        return Ok(1);
    }
    let mut best = 2;
    for &e in g.edges() {
        let mut xset = vec![e.lo];
        for w in e.lo + 1..e.hi {
            if g.has_edge(e.lo, w) && g.has_edge(w, e.hi) {
                xset.push(w);
            }
        }
        xset.push(e.hi);
        let (sub, _) = g.induced(&xset).expect("xset is sorted and in range");
        let d = decompose_capped(&sub)?;
        best = best.max(d.omega);
    }
    Ok(best)
}

/// Edges of `g` participating in no crossing, in either role.
pub fn uncrossed_edges(g: &OrderedGraph) -> Vec<Edge> {
    let edges = g.edges();
    let crossed = crossed_marks(g);
    edges.iter().enumerate().filter(|&(i, _)| !crossed[i]).map(|(_, &e)| e).collect()
}

fn crossed_marks(g: &OrderedGraph) -> Vec<bool> {
    let edges = g.edges();
    let mut crossed = vec![false; edges.len()];
    for (i, &e) in edges.iter().enumerate() {
        for (j, &f) in edges.iter().enumerate().skip(i + 1) {
            if f.lo >= e.hi {
                break;
            }
            if edges_cross(e, f) {
                crossed[i] = true;
                crossed[j] = true;
            }
        }
    }
    crossed
}

/// The uncrossed edges of `g` that are safe to strip: those serving as the
/// cap of no crossing pair. Removing them cannot uncap a crossing pair
/// (crossed edges all survive, and an uncrossed edge creates no new
/// crossings), so a capped graph minus this set stays capped. An uncrossed
/// cap would be lost by stripping the full uncrossed set, which is why the
/// colouring pipeline strips only this subset.
pub fn uncrossed_noncap_edges(g: &OrderedGraph) -> Vec<Edge> {
    let edges = g.edges();
    let crossed = crossed_marks(g);
    let mut is_cap = vec![false; edges.len()];
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if f.lo >= e.hi {
                break;
            }
            if edges_cross(e, f) {
                if let Ok(k) = edges.binary_search(&Edge { lo: e.lo, hi: f.hi }) {
                    is_cap[k] = true;
                }
            }
        }
    }
    edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| !crossed[i] && !is_cap[i])
        .map(|(_, &e)| e)
        .collect()
}

/// Breadth-first levels per connected component, each component rooted at
/// its smallest vertex. Components are listed by their roots in order.
pub fn bfs_levels(g: &OrderedGraph) -> Vec<Vec<Vec<usize>>> {
    let n = g.num_vertices();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut levels = vec![vec![root]];
        loop {
            let mut next = Vec::new();
            for &v in levels.last().expect("at least the root level") {
                for &w in g.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            levels.push(next);
        }
        out.push(levels);
    }
    out
}

/// 4-colours a triangle-free capped ordered-hole-free graph: per
/// component, BFS levels from the smallest vertex; every level induces a
/// bipartite subgraph which is 2-coloured, and level parity alternates
/// between the colour pairs {0,1} and {2,3}.
pub fn four_colour_tf_capped_holefree(g: &OrderedGraph) -> Result<Colouring> {
    if let Some(t) = find_triangle(g) {
        return Err(Error::NotTriangleFree(t));
    }
    if let Some(w) = find_capped_violation(g) {
        return Err(Error::NotCapped(w));
    }
    if let Some(h) = find_ordered_hole(g) {
        return Err(Error::NotHoleFree(h));
    }
    let n = g.num_vertices();
    let mut colours = vec![0usize; n];
    for levels in bfs_levels(g) {
        for (depth, level) in levels.iter().enumerate() {
            let base = if depth % 2 == 0 { 0 } else { 2 };
            let sides = two_colour_level(g, level)?;
            for (&v, &s) in level.iter().zip(sides.iter()) {
                colours[v] = base + s as usize;
            }
        }
    }
    debug_assert!(g.edges().iter().all(|e| colours[e.lo] != colours[e.hi]));
    let num_colours = count_distinct(&colours, n);
    Ok(Colouring { colours, num_colours })
}

/// 2-colours the subgraph induced by one BFS level; a non-bipartite level
/// contradicts the preconditions and is reported with its odd cycle.
fn two_colour_level(g: &OrderedGraph, level: &[usize]) -> Result<Vec<u8>> {
    let pos: HashMap<usize, usize> = level.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut side: Vec<Option<u8>> = vec![None; level.len()];
    let mut parent: Vec<Option<usize>> = vec![None; level.len()];
    for start in 0..level.len() {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(0);
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let i = queue[head];
            head += 1;
            let s = side[i].expect("set before enqueue");
            for &w in g.neighbours(level[i]) {
                let Some(&j) = pos.get(&w) else { continue };
                match side[j] {
                    None => {
                        side[j] = Some(1 - s);
                        parent[j] = Some(i);
                        queue.push(j);
                    }
                    Some(t) if t == s => {
                        return Err(Error::NonBipartiteLevel {
                            cycle: odd_cycle(level, &parent, i, j),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(|s| s.expect("all level vertices coloured")).collect())
}

fn odd_cycle(level: &[usize], parent: &[Option<usize>], i: usize, j: usize) -> Vec<usize> {
    let chain = |mut v: usize| {
        let mut path = vec![v];
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    };
    let (pi, pj) = (chain(i), chain(j));
    // drop the common tail, keep the joining vertex once
    let mut a = pi.len();
    let mut b = pj.len();
    while a > 0 && b > 0 && pi[a - 1] == pj[b - 1] {
        a -= 1;
        b -= 1;
    }
    let mut cycle: Vec<usize> = pi[..=a.min(pi.len() - 1)].iter().map(|&k| level[k]).collect();
    cycle.extend(pj[..b].iter().rev().map(|&k| level[k]));
    cycle
}

/// Smallest-last greedy colouring; errors when more than `cap` colours
/// would be needed, which signals a precondition violation upstream.
pub fn degeneracy_colour(g: &OrderedGraph, cap: usize) -> Result<Colouring> {
    let n = g.num_vertices();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("a vertex remains");
        removed[v] = true;
        order.push(v);
        for &w in g.neighbours(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    let mut colours = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let mut taken: Vec<usize> =
            g.neighbours(v).iter().filter_map(|&w| (colours[w] != usize::MAX).then_some(colours[w])).collect();
        taken.sort_unstable();
        taken.dedup();
        let mut c = 0;
        for t in taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        if c >= cap {
            return Err(Error::ColourBudgetExceeded { used: c + 1, cap });
        }
        colours[v] = c;
    }
    let num_colours = count_distinct(&colours, n);
    Ok(Colouring { colours, num_colours })
}

fn count_distinct(colours: &[usize], n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut sorted = colours.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}

/// Colours a capped graph: decompose into triangle-free capped layers,
/// strip each layer's strippable uncrossed edges (none when
/// ordered-hole-free), 4-colour each remainder, greedy-colour the union of
/// stripped edges within `4(omega-1)`, and combine per-vertex colour
/// tuples densely.
pub fn colour_capped(g: &OrderedGraph) -> Result<ColouringResult> {
    if let Some(w) = find_capped_violation(g) {
        return Err(Error::NotCapped(w));
    }
    let n = g.num_vertices();
    if g.num_edges() == 0 {
        return Ok(ColouringResult {
            colours: vec![0; n],
            num_colours: n.min(1),
            omega: n.min(1),
            bound: 1,
            palette: 1,
            class_tag: GraphClass::CappedHoleFree,
        });
    }
    let hole_free = find_ordered_hole(g).is_none();
    let decomp = decompose_inner(g);
    let omega = decomp.omega;
    debug_assert!(omega >= 2);

    let mut layers: Vec<Vec<usize>> = Vec::with_capacity(decomp.parts.len());
    let mut residual: Vec<(usize, usize)> = Vec::new();
    for part in &decomp.parts {
        let f_i: Vec<Edge> = if hole_free { Vec::new() } else { uncrossed_noncap_edges(part) };
        let remainder_pairs: Vec<(usize, usize)> = part
            .edges()
            .iter()
            .filter(|e| f_i.binary_search(e).is_err())
            .map(|e| (e.lo, e.hi))
            .collect();
        let remainder = OrderedGraph::build(n, &remainder_pairs).expect("subset of part edges");
        let phi = four_colour_tf_capped_holefree(&remainder)?;
        layers.push(phi.colours);
        residual.extend(f_i.iter().map(|e| (e.lo, e.hi)));
    }
    let psi: Option<Vec<usize>> = if hole_free {
        None
    } else {
        let cap = 4 * (omega - 1);
        let gf = OrderedGraph::build(n, &residual).expect("residual edges in range");
        Some(degeneracy_colour(&gf, cap)?.colours)
    };

    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut colours = vec![0usize; n];
    for v in 0..n {
        let mut key: Vec<usize> = layers.iter().map(|l| l[v]).collect();
        if let Some(p) = &psi {
            key.push(p[v]);
        }
        let next = seen.len();
        colours[v] = *seen.entry(key).or_insert(next);
    }
    let num_colours = seen.len();

    let bound = if hole_free { pow4(omega - 1) } else { mul_sat(pow4(omega), (omega - 1) as u128) };
    let palette = if hole_free {
        pow4(decomp.parts.len())
    } else {
        mul_sat(pow4(decomp.parts.len()), 4 * (omega - 1) as u128)
    };
    let check = crate::oracles::verify_colouring(g, &colours);
    assert!(check.proper, "combined capped colouring must be proper");
    assert!((num_colours as u128) <= bound);
    Ok(ColouringResult {
        colours,
        num_colours,
        omega,
        bound,
        palette,
        class_tag: if hole_free { GraphClass::CappedHoleFree } else { GraphClass::Capped },
    })
}

/// Colours an H-free graph: partition into three capped parts, colour each
/// part with a disjoint palette, and re-encode densely. The bound is
/// `3 * 4^(omega-1)` when the input is also ordered-hole-free and
/// `3 * 4^omega * (omega-1)` otherwise.
pub fn colour_hfree(g: &OrderedGraph) -> Result<ColouringResult> {
    if let Some(w) = find_h_obstruction(g) {
        return Err(Error::NotHFree(w));
    }
    let n = g.num_vertices();
    let hole_free = find_ordered_hole(g).is_none();
    if g.num_edges() == 0 {
        return Ok(ColouringResult {
            colours: vec![0; n],
            num_colours: n.min(1),
            omega: n.min(1),
            bound: 1,
            palette: 1,
            class_tag: GraphClass::HfreeHoleFree,
        });
    }
    let parts = partition_impl(g, PartitionOptions::default())?;
    let omega = clique_hfree_impl(g)?;

    let mut keys: Vec<(usize, usize)> = vec![(0, 0); n];
    let mut palette: u128 = 0;
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            continue;
        }
        let (sub, map) = g.induced(part).expect("parts are sorted");
        let r = colour_capped(&sub)?;
        for (local, &orig) in map.iter().enumerate() {
            keys[orig] = (i, r.colours[local]);
        }
        palette = palette.saturating_add(r.palette);
    }
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut colours = vec![0usize; n];
    for v in 0..n {
        let next = seen.len();
        colours[v] = *seen.entry(keys[v]).or_insert(next);
    }
    let num_colours = seen.len();
    let bound = if hole_free {
        mul_sat(3, pow4(omega - 1))
    } else {
        mul_sat(3, mul_sat(pow4(omega), (omega - 1) as u128))
    };
    let check = crate::oracles::verify_colouring(g, &colours);
    assert!(check.proper, "combined H-free colouring must be proper");
    assert!((num_colours as u128) <= bound);
    Ok(ColouringResult {
        colours,
        num_colours,
        omega,
        bound,
        palette,
        class_tag: if hole_free { GraphClass::HfreeHoleFree } else { GraphClass::Hfree },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{bf_clique, verify_colouring};

    fn g(n: usize, e: &[(usize, usize)]) -> OrderedGraph {
        OrderedGraph::build(n, e).unwrap()
    }

    fn hole5() -> OrderedGraph {
        g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    }

    fn edge_pairs(gr: &OrderedGraph) -> Vec<(usize, usize)> {
        gr.edges().iter().map(|e| (e.lo, e.hi)).collect()
    }

    #[test]
    fn complement_on_k3() {
        let f = triangle_crossed_complement(&OrderedGraph::complete(3));
        assert_eq!(f, vec![Edge { lo: 0, hi: 1 }, Edge { lo: 0, hi: 2 }]);
    }

    #[test]
    fn complement_on_k4_is_the_star() {
        let f = triangle_crossed_complement(&OrderedGraph::complete(4));
        assert_eq!(
            f,
            vec![Edge { lo: 0, hi: 1 }, Edge { lo: 0, hi: 2 }, Edge { lo: 0, hi: 3 }]
        );
    }

    #[test]
    fn complement_of_triangle_free_is_everything() {
        let gr = hole5();
        assert_eq!(triangle_crossed_complement(&gr), gr.edges().to_vec());
    }

    #[test]
    fn decompose_k4() {
        let d = decompose_capped(&OrderedGraph::complete(4)).unwrap();
        assert_eq!(d.omega, 4);
        assert_eq!(d.parts.len(), 3);
        assert_eq!(edge_pairs(&d.parts[0]), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(edge_pairs(&d.parts[1]), vec![(1, 2), (1, 3)]);
        assert_eq!(edge_pairs(&d.parts[2]), vec![(2, 3)]);
    }

    #[test]
    fn decompose_triangle_free() {
        let d = decompose_capped(&hole5()).unwrap();
        assert_eq!(d.omega, 2);
        assert_eq!(d.parts.len(), 1);
    }

    #[test]
    fn decompose_edgeless() {
        let d = decompose_capped(&OrderedGraph::edgeless(4)).unwrap();
        assert_eq!(d.omega, 1);
        assert_eq!(d.parts.len(), 1);
        assert_eq!(decompose_capped(&OrderedGraph::edgeless(0)).unwrap().omega, 0);
    }

    #[test]
    fn decompose_rejects_uncapped() {
        assert!(matches!(
            decompose_capped(&g(4, &[(0, 2), (1, 3)])),
            Err(Error::NotCapped(_))
        ));
    }

    #[test]
    fn decompose_matches_brute_force_on_completes() {
        for n in 1..=7 {
            let k = OrderedGraph::complete(n);
            let d = decompose_capped(&k).unwrap();
            assert_eq!(d.omega, bf_clique(&k, 40).unwrap());
        }
    }

    #[test]
    fn clique_number_basics() {
        assert_eq!(clique_number_hfree(&OrderedGraph::edgeless(3)).unwrap(), 1);
        assert_eq!(clique_number_hfree(&OrderedGraph::edgeless(0)).unwrap(), 0);
        assert_eq!(clique_number_hfree(&g(2, &[(0, 1)])).unwrap(), 2);
        assert_eq!(clique_number_hfree(&OrderedGraph::complete(5)).unwrap(), 5);
        assert_eq!(clique_number_hfree(&hole5()).unwrap(), 2);
    }

    #[test]
    fn uncrossed_edge_sets() {
        assert!(uncrossed_edges(&g(4, &[(0, 2), (1, 3)])).is_empty());
        let nested = g(6, &[(0, 5), (1, 4), (2, 3)]);
        assert_eq!(uncrossed_edges(&nested).len(), 3);
        assert_eq!(uncrossed_edges(&hole5()).len(), 5);
    }

    #[test]
    fn four_colour_path_and_star() {
        let path = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let c = four_colour_tf_capped_holefree(&path).unwrap();
        assert!(c.num_colours <= 2);
        assert!(verify_colouring(&path, &c.colours).proper);

        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let c = four_colour_tf_capped_holefree(&star).unwrap();
        assert_eq!(c.num_colours, 2);
        assert!(verify_colouring(&star, &c.colours).proper);
    }

    #[test]
    fn four_colour_rejects_bad_inputs() {
        assert!(matches!(
            four_colour_tf_capped_holefree(&OrderedGraph::complete(3)),
            Err(Error::NotTriangleFree(_))
        ));
        assert!(matches!(
            four_colour_tf_capped_holefree(&hole5()),
            Err(Error::NotHoleFree(_))
        ));
        assert!(matches!(
            four_colour_tf_capped_holefree(&g(4, &[(0, 2), (1, 3)])),
            Err(Error::NotCapped(_))
        ));
    }

    #[test]
    fn degeneracy_greedy() {
        let empty = OrderedGraph::edgeless(3);
        assert_eq!(degeneracy_colour(&empty, 4).unwrap().num_colours, 1);

        let nested = g(6, &[(0, 5), (1, 4), (2, 3)]);
        let c = degeneracy_colour(&nested, 4).unwrap();
        assert!(c.num_colours <= 4);
        assert!(verify_colouring(&nested, &c.colours).proper);

        assert!(matches!(
            degeneracy_colour(&g(2, &[(0, 1)]), 1),
            Err(Error::ColourBudgetExceeded { .. })
        ));
    }

    #[test]
    fn colour_capped_k4() {
        let r = colour_capped(&OrderedGraph::complete(4)).unwrap();
        assert_eq!(r.omega, 4);
        assert_eq!(r.bound, 64);
        assert_eq!(r.class_tag, GraphClass::CappedHoleFree);
        assert!(verify_colouring(&OrderedGraph::complete(4), &r.colours).proper);
        assert!(r.num_colours as u128 <= r.bound);
    }

    #[test]
    fn colour_capped_single_edge() {
        let r = colour_capped(&g(2, &[(0, 1)])).unwrap();
        assert_eq!(r.num_colours, 2);
        assert_eq!(r.omega, 2);
        assert_eq!(r.bound, 4);
    }

    #[test]
    fn colour_capped_hole_uses_residual_layer() {
        let r = colour_capped(&hole5()).unwrap();
        assert_eq!(r.omega, 2);
        assert_eq!(r.class_tag, GraphClass::Capped);
        assert_eq!(r.bound, 16);
        assert!(verify_colouring(&hole5(), &r.colours).proper);
    }

    #[test]
    fn stripping_never_uncaps_a_crossing_pair() {
        // the cap (0,3) is uncrossed; stripping every uncrossed edge would
        // leave the crossing pair (0,2)x(1,3) uncapped
        let gr = g(8, &[(0, 2), (1, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)]);
        assert!(find_capped_violation(&gr).is_none());
        assert!(find_ordered_hole(&gr).is_some());
        let full = uncrossed_edges(&gr);
        assert!(full.contains(&Edge { lo: 0, hi: 3 }));
        let strippable = uncrossed_noncap_edges(&gr);
        assert!(!strippable.contains(&Edge { lo: 0, hi: 3 }));
        assert_eq!(strippable.len(), 4); // the four hole edges
        let r = colour_capped(&gr).unwrap();
        assert!(verify_colouring(&gr, &r.colours).proper);
        assert!(r.num_colours as u128 <= r.bound);
    }

    #[test]
    fn colour_capped_edgeless() {
        let r = colour_capped(&OrderedGraph::edgeless(6)).unwrap();
        assert_eq!(r.num_colours, 1);
        assert_eq!(r.omega, 1);
        assert_eq!(r.bound, 1);
    }

    #[test]
    fn colour_hfree_hole() {
        let r = colour_hfree(&hole5()).unwrap();
        assert_eq!(r.omega, 2);
        assert_eq!(r.class_tag, GraphClass::Hfree);
        assert_eq!(r.bound, 48);
        assert!(verify_colouring(&hole5(), &r.colours).proper);
        assert!(r.num_colours as u128 <= r.bound);
    }

    #[test]
    fn colour_hfree_complete() {
        let k5 = OrderedGraph::complete(5);
        let r = colour_hfree(&k5).unwrap();
        assert_eq!(r.omega, 5);
        assert_eq!(r.class_tag, GraphClass::HfreeHoleFree);
        assert_eq!(r.bound, 3 * 256);
        assert!(verify_colouring(&k5, &r.colours).proper);
    }

    #[test]
    fn colour_hfree_crossing_pair() {
        let gr = g(4, &[(0, 2), (1, 3)]);
        let r = colour_hfree(&gr).unwrap();
        assert_eq!(r.omega, 2);
        assert_eq!(r.class_tag, GraphClass::HfreeHoleFree);
        assert_eq!(r.bound, 12);
        assert!(verify_colouring(&gr, &r.colours).proper);
    }

    #[test]
    fn colour_hfree_rejects_h_member() {
        assert!(matches!(
            colour_hfree(&g(6, &[(0, 2), (1, 3), (3, 5), (0, 4)])),
            Err(Error::NotHFree(_))
        ));
    }

    #[test]
    fn bfs_levels_structure() {
        let gr = g(6, &[(0, 1), (1, 2), (3, 4)]);
        let comps = bfs_levels(&gr);
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0], vec![vec![0], vec![1], vec![2]]);
        assert_eq!(comps[1], vec![vec![3], vec![4]]);
        assert_eq!(comps[2], vec![vec![5]]);
    }
}
