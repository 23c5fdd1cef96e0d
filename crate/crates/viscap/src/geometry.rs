//! Geometric ground truth: integer-coordinate simple polygons, exact
//! visibility predicates, visibility graphs ordered by the boundary walk,
//! and a seeded random-polygon generator.
//!
//! Every predicate runs in exact integer arithmetic (i128 internally); no
//! floating point appears anywhere. Visibility is a closed condition — a
//! segment may graze the boundary — which is exactly the regime where
//! floating point misclassifies, hence the insistence on exactness.

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;

/// Coordinates admitted in polygons; keeps all derived quantities (doubled
/// coordinates, cross products, dot products) comfortably inside i128.
pub const COORD_LIMIT: i64 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }
}

/// Sign of the cross product `(q - p) x (r - p)`: +1 for a left turn,
/// -1 for a right turn, 0 for collinear. Exact for all coordinates with
/// magnitude at most 2^62.
pub fn orientation(p: Point, q: Point, r: Point) -> i32 {
    const LIMIT: i64 = 1 << 62;
    for c in [p.x, p.y, q.x, q.y, r.x, r.y] {
        assert!(c.abs() <= LIMIT, "coordinate {c} exceeds exactness limit");
    }
    let v = (q.x as i128 - p.x as i128) * (r.y as i128 - p.y as i128)
        - (q.y as i128 - p.y as i128) * (r.x as i128 - p.x as i128);
    v.signum() as i32
}

fn dot(p: Point, q: Point, base: Point) -> i128 {
    (p.x as i128 - base.x as i128) * (q.x as i128 - base.x as i128)
        + (p.y as i128 - base.y as i128) * (q.y as i128 - base.y as i128)
}

/// True iff `p` lies on the closed segment `ab`.
fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orientation(a, b, p) == 0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// True iff the open segments `ab` and `cd` cross in a single interior point.
fn properly_cross(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// True iff closed segments `ab` and `cd` share at least one point.
fn segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool {
    properly_cross(a, b, c, d)
        || on_segment(a, b, c)
        || on_segment(a, b, d)
        || on_segment(c, d, a)
        || on_segment(c, d, b)
}

fn signed_area2(pts: &[Point]) -> i128 {
    let n = pts.len();
    let mut s: i128 = 0;
    for i in 0..n {
        let p = pts[i];
        let q = pts[(i + 1) % n];
        s += p.x as i128 * q.y as i128 - q.x as i128 * p.y as i128;
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointLocation {
    Inside,
    Boundary,
    Outside,
}

/// Exact point-in-polygon: boundary detection first, then even-odd ray
/// crossing with the half-open vertex convention.
pub fn point_in_polygon(pts: &[Point], p: Point) -> PointLocation {
    let n = pts.len();
    for i in 0..n {
        if on_segment(pts[i], pts[(i + 1) % n], p) {
            return PointLocation::Boundary;
        }
    }
    let mut crossings = 0usize;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            // edge straddles the horizontal ray; orientation sign tells
            // whether the intersection lies strictly right of p
            let o = orientation(a, b, p);
            debug_assert_ne!(o, 0, "boundary point should have been caught");
            if (b.y > a.y && o > 0) || (b.y < a.y && o < 0) {
                crossings += 1;
            }
        }
    }
    if crossings % 2 == 1 {
        PointLocation::Inside
    } else {
        PointLocation::Outside
    }
}

fn validate_polygon(pts: &[Point]) -> Result<()> {
    let n = pts.len();
    if n < 3 {
        return Err(Error::InvalidPolygon { reason: format!("{n} vertices, need at least 3") });
    }
    for p in pts {
        for c in [p.x, p.y] {
            if c.abs() > COORD_LIMIT {
                return Err(Error::CoordinateOverflow { value: c, limit: COORD_LIMIT });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if pts[i] == pts[j] {
                return Err(Error::InvalidPolygon { reason: format!("repeated point at {i} and {j}") });
            }
        }
    }
    // adjacent edges must not fold back over each other
    for i in 0..n {
        let prev = pts[(i + n - 1) % n];
        let v = pts[i];
        let next = pts[(i + 1) % n];
        if orientation(prev, v, next) == 0 && dot(next, prev, v) > 0 {
            return Err(Error::InvalidPolygon { reason: format!("boundary folds back at vertex {i}") });
        }
    }
    // non-adjacent edges must be disjoint
    for i in 0..n {
        for j in i + 1..n {
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (a, b) = (pts[i], pts[(i + 1) % n]);
            let (c, d) = (pts[j], pts[(j + 1) % n]);
            if segments_touch(a, b, c, d) {
                return Err(Error::InvalidPolygon {
                    reason: format!("edges {i} and {j} intersect"),
                });
            }
        }
    }
    if signed_area2(pts) <= 0 {
        return Err(Error::InvalidPolygon { reason: "not counterclockwise".into() });
    }
    Ok(())
}

/// True iff the point sequence bounds a simple counterclockwise polygon.
pub fn is_simple_ccw(pts: &[Point]) -> bool {
    validate_polygon(pts).is_ok()
}

/// A simple integer-coordinate polygon in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    points: Vec<Point>,
}

impl Polygon {
    pub fn new(points: Vec<Point>) -> Result<Polygon> {
        validate_polygon(&points)?;
        Ok(Polygon { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Parses the `.poly` format: a line `n`, then `n` lines `x y`,
    /// counterclockwise; `#` lines and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Polygon> {
        let mut data = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = data
            .next()
            .ok_or(Error::Parse { line: 0, msg: "missing vertex count".into() })?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::Parse { line: hline, msg: "invalid vertex count".into() })?;
        let mut points = Vec::with_capacity(n);
        for _ in 0..n {
            let (line, l) = data
                .next()
                .ok_or(Error::Parse { line: 0, msg: format!("expected {n} coordinate lines") })?;
            let mut it = l.split_whitespace();
            let mut coord = |what: &str| -> Result<i64> {
                it.next()
                    .ok_or(Error::Parse { line, msg: format!("missing {what}") })?
                    .parse::<i64>()
                    .map_err(|_| Error::Parse { line, msg: format!("invalid {what}") })
            };
            let x = coord("x coordinate")?;
            let y = coord("y coordinate")?;
            points.push(Point::new(x, y));
        }
        if let Some((line, _)) = data.next() {
            return Err(Error::Parse { line, msg: "unexpected data after coordinates".into() });
        }
        Polygon::new(points)
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.points.len());
        for p in &self.points {
            let _ = writeln!(out, "{} {}", p.x, p.y);
        }
        out
    }
}

/// Doubles all coordinates so that midpoints of vertex pairs stay on the
/// integer lattice.
fn doubled(pts: &[Point]) -> Vec<Point> {
    pts.iter().map(|p| Point::new(2 * p.x, 2 * p.y)).collect()
}

/// Core visibility test on pre-doubled coordinates: the closed segment
/// between vertices `i` and `j` must avoid the polygon's exterior. No edge
/// may properly cross it, and between consecutive boundary contacts every
/// open subsegment must have its midpoint inside or on the polygon.
fn visible_doubled(pts2: &[Point], i: usize, j: usize) -> bool {
    let n = pts2.len();
    let c = pts2[i];
    let d = pts2[j];
    for k in 0..n {
        if properly_cross(c, d, pts2[k], pts2[(k + 1) % n]) {
            return false;
        }
    }
    // contacts: polygon vertices lying on the closed segment (including the
    // endpoints themselves and any collinear-overlap endpoints)
    let mut contacts: Vec<(i128, Point)> = pts2
        .iter()
        .filter(|&&p| on_segment(c, d, p))
        .map(|&p| (dot(p, d, c), p))
        .collect();
    contacts.sort_unstable_by_key(|&(t, _)| t);
    debug_assert!(contacts.first().map(|&(_, p)| p) == Some(c));
    debug_assert!(contacts.last().map(|&(_, p)| p) == Some(d));
    for w in contacts.windows(2) {
        let (p, q) = (w[0].1, w[1].1);
        if p == q {
            continue;
        }
        let mid = Point::new((p.x + q.x) / 2, (p.y + q.y) / 2);
        if point_in_polygon(pts2, mid) == PointLocation::Outside {
            return false;
        }
    }
    true
}

/// Whether polygon vertices `i` and `j` see each other: the connecting
/// segment is disjoint from the exterior (boundary contact allowed).
pub fn vertices_visible(poly: &Polygon, i: usize, j: usize) -> Result<bool> {
    let n = poly.len();
    if i >= n {
        return Err(Error::VertexOutOfRange { v: i, n });
    }
    if j >= n {
        return Err(Error::VertexOutOfRange { v: j, n });
    }
    if i == j {
        return Err(Error::IdenticalVertices { v: i });
    }
    Ok(visible_doubled(&doubled(poly.points()), i, j))
}

/// The visibility graph of a polygon, with vertices ordered by the
/// counterclockwise boundary walk. Always contains the boundary cycle.
pub fn visibility_graph(poly: &Polygon) -> OrderedGraph {
    let pts2 = doubled(poly.points());
    let n = pts2.len();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if visible_doubled(&pts2, i, j) {
                pairs.push((i, j));
            }
        }
    }
    let g = OrderedGraph::build(n, &pairs).expect("pairs are in range");
    for i in 0..n {
        let j = (i + 1) % n;
        debug_assert!(g.has_edge(i, j), "boundary edge {i}-{j} missing");
    }
    g
}

/// Visibility graph of a point subset along the curve: the induced
/// subgraph of the polygon visibility graph.
pub fn curve_visibility_graph(poly: &Polygon, subset: &[usize]) -> Result<OrderedGraph> {
    if subset.is_empty() {
        return Err(Error::InvalidSubset { reason: "empty subset".into() });
    }
    let (g, _) = visibility_graph(poly).induced(subset)?;
    Ok(g)
}

/// Deterministic random simple polygon: sample `n` distinct points with no
/// three collinear in `[0, span]^2`, close them into a tour, then uncross
/// repeatedly by 2-opt swaps (each swap strictly shortens the tour, so the
/// process terminates), and orient counterclockwise.
pub fn random_simple_polygon(n: usize, seed: u64, span: i64) -> Result<Polygon> {
    if n < 3 {
        return Err(Error::InvalidPolygon { reason: format!("{n} vertices, need at least 3") });
    }
    if span < n as i64 {
        return Err(Error::GenerationFailed {
            reason: format!("span {span} too small for {n} distinct points"),
        });
    }
    if span > COORD_LIMIT {
        return Err(Error::CoordinateOverflow { value: span, limit: COORD_LIMIT });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut attempts = 0usize;
    let budget = 1000 + 200 * n;
    while pts.len() < n {
        attempts += 1;
        if attempts > budget {
            return Err(Error::GenerationFailed {
                reason: format!("could not sample {n} points in general position in {budget} attempts"),
            });
        }
        let p = Point::new(rng.gen_range(0..=span), rng.gen_range(0..=span));
        if pts.contains(&p) {
            continue;
        }
        let collinear = (0..pts.len())
            .any(|a| (a + 1..pts.len()).any(|b| orientation(pts[a], pts[b], p) == 0));
        if collinear {
            continue;
        }
        pts.push(p);
    }
    two_opt_untangle(&mut pts);
    if signed_area2(&pts) < 0 {
        pts.reverse();
    }
    Polygon::new(pts)
}

/// Removes tour crossings by 2-opt reconnection until none remain.
fn two_opt_untangle(tour: &mut [Point]) {
    let n = tour.len();
    loop {
        let mut swapped = false;
        'scan: for i in 0..n {
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let (a, b) = (tour[i], tour[(i + 1) % n]);
                let (c, d) = (tour[j], tour[(j + 1) % n]);
                if properly_cross(a, b, c, d) {
                    tour[i + 1..=j].reverse();
                    swapped = true;
                    break 'scan;
                }
            }
        }
        if !swapped {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn square() -> Polygon {
        Polygon::new(vec![pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)]).unwrap()
    }

    fn notched() -> Polygon {
        Polygon::new(vec![pt(0, 0), pt(6, 0), pt(6, 6), pt(3, 1), pt(0, 6)]).unwrap()
    }

    #[test]
    fn orientation_signs() {
        assert_eq!(orientation(pt(0, 0), pt(1, 0), pt(0, 1)), 1);
        assert_eq!(orientation(pt(0, 0), pt(1, 1), pt(2, 2)), 0);
        assert_eq!(orientation(pt(0, 0), pt(0, 1), pt(1, 0)), -1);
    }

    #[test]
    fn simple_ccw_checks() {
        assert!(is_simple_ccw(&[pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)]));
        assert!(!is_simple_ccw(&[pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)])); // clockwise
        assert!(!is_simple_ccw(&[pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)])); // bowtie
        assert!(!is_simple_ccw(&[pt(0, 0), pt(1, 0)]));
        assert!(!is_simple_ccw(&[pt(0, 0), pt(1, 0), pt(1, 0), pt(0, 1)])); // repeat
    }

    #[test]
    fn point_location() {
        let pts: Vec<Point> = square().points().to_vec();
        assert_eq!(point_in_polygon(&pts, pt(2, 2)), PointLocation::Inside);
        assert_eq!(point_in_polygon(&pts, pt(0, 2)), PointLocation::Boundary);
        assert_eq!(point_in_polygon(&pts, pt(4, 4)), PointLocation::Boundary);
        assert_eq!(point_in_polygon(&pts, pt(5, 2)), PointLocation::Outside);
        assert_eq!(point_in_polygon(&pts, pt(-1, 0)), PointLocation::Outside);
    }

    #[test]
    fn convex_polygon_is_complete() {
        let g = visibility_graph(&square());
        assert_eq!(g.num_edges(), 6);
    }

    #[test]
    fn notch_blocks_visibility() {
        let p = notched();
        // (6,6) and (0,6) flank the notch at (3,1)
        assert!(!vertices_visible(&p, 2, 4).unwrap());
        assert!(vertices_visible(&p, 2, 3).unwrap());
        assert!(vertices_visible(&p, 0, 3).unwrap());
        let g = visibility_graph(&p);
        assert!(!g.has_edge(2, 4));
        for i in 0..5 {
            assert!(g.has_edge(i, (i + 1) % 5));
        }
    }

    #[test]
    fn grazing_contact_is_visible() {
        // collinear boundary contact: segment from (0,0) to (4,0) passes
        // through vertex (2,0) of the dent but stays on the closed region
        let p = Polygon::new(vec![pt(0, 0), pt(2, 0), pt(4, 0), pt(4, 4), pt(0, 4)]).unwrap();
        assert!(vertices_visible(&p, 0, 2).unwrap());
    }

    #[test]
    fn spike_blocks_through_contact() {
        // a reflex spike touching the sight line from above
        let p = Polygon::new(vec![
            pt(0, 0),
            pt(8, 0),
            pt(8, 4),
            pt(5, 1),
            pt(3, 4),
            pt(0, 4),
        ])
        .unwrap();
        // from (8,4) to (3,4): the segment passes outside the region
        // between the two upper prongs
        assert!(!vertices_visible(&p, 2, 4).unwrap());
    }

    #[test]
    fn visibility_errors() {
        let p = square();
        assert!(vertices_visible(&p, 0, 0).is_err());
        assert!(vertices_visible(&p, 0, 9).is_err());
    }

    #[test]
    fn curve_subgraph() {
        let p = square();
        let k3 = curve_visibility_graph(&p, &[0, 1, 2]).unwrap();
        assert_eq!(k3.num_edges(), 3);
        let full = curve_visibility_graph(&p, &[0, 1, 2, 3]).unwrap();
        assert_eq!(full, visibility_graph(&p));
    }

    #[test]
    fn poly_round_trip() {
        let p = notched();
        let q = Polygon::parse(&p.serialize()).unwrap();
        assert_eq!(p, q);
        assert!(Polygon::parse("2\n0 0\n1 1\n").is_err());
        assert!(Polygon::parse("# comment\n3\n0 0\n5 0\n0 5\n").is_ok());
        // negative coordinates
        let neg = Polygon::parse("3\n-5 -5\n5 -5\n0 5\n").unwrap();
        assert_eq!(Polygon::parse(&neg.serialize()).unwrap(), neg);
    }

    #[test]
    fn random_polygon_deterministic() {
        let a = random_simple_polygon(12, 42, 500).unwrap();
        let b = random_simple_polygon(12, 42, 500).unwrap();
        assert_eq!(a, b);
        let c = random_simple_polygon(12, 43, 500).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_polygon_valid_at_various_sizes() {
        for (n, seed) in [(3usize, 1u64), (4, 7), (8, 99), (20, 42), (37, 5)] {
            let p = random_simple_polygon(n, seed, 1000).unwrap();
            assert_eq!(p.len(), n);
            assert!(is_simple_ccw(p.points()));
        }
    }

    #[test]
    fn random_polygon_rejects_bad_params() {
        assert!(random_simple_polygon(2, 0, 100).is_err());
        assert!(random_simple_polygon(10, 0, 5).is_err());
    }

    #[test]
    fn triangle_generation() {
        let p = random_simple_polygon(3, 0, 100).unwrap();
        assert_eq!(p.len(), 3);
        assert!(signed_area2(p.points()) > 0);
    }

    #[test]
    fn visibility_translation_invariance() {
        let p = notched();
        let shifted = Polygon::new(
            p.points().iter().map(|q| pt(q.x + 100, q.y - 50)).collect(),
        )
        .unwrap();
        let scaled =
            Polygon::new(p.points().iter().map(|q| pt(q.x * 3, q.y * 3)).collect()).unwrap();
        assert_eq!(visibility_graph(&p), visibility_graph(&shifted));
        assert_eq!(visibility_graph(&p), visibility_graph(&scaled));
    }
}
