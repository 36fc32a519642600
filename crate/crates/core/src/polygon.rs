//! Jordan lattice polygons: validation, boundary/interior point counting,
//! the point-count area formula, the surveyor (shoelace) area, chord
//! splitting, and vertex canonicalization.
//!
//! All predicates use integer cross products only; there is no floating
//! point anywhere in this module. Polygons are normalized to
//! counterclockwise orientation on construction and are immutable after
//! validation.

use crate::error::{Error, Result};
use crate::lattice::{gcd, LatticePoint, LatticeVector, COORD_LIMIT};
use std::collections::{HashMap, HashSet};
use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Twice the signed area of triangle (a, b, c); positive when the triple
/// turns counterclockwise.
pub fn orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i128 {
    (b - a).cross(c - a)
}

/// Whether `q` lies on the closed segment [a, b].
pub fn on_segment(a: LatticePoint, b: LatticePoint, q: LatticePoint) -> bool {
    orient(a, b, q) == 0
        && a.x.min(b.x) <= q.x
        && q.x <= a.x.max(b.x)
        && a.y.min(b.y) <= q.y
        && q.y <= a.y.max(b.y)
}

/// Whether the closed segments [p1, p2] and [q1, q2] share at least one point.
pub fn segments_intersect(
    p1: LatticePoint,
    p2: LatticePoint,
    q1: LatticePoint,
    q2: LatticePoint,
) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && on_segment(q1, q2, p1))
        || (d2 == 0 && on_segment(q1, q2, p2))
        || (d3 == 0 && on_segment(p1, p2, q1))
        || (d4 == 0 && on_segment(p1, p2, q2))
}

/// Location of a point relative to a closed polygon boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Outside,
    Boundary,
    Inside,
}

/// Exact even-odd classification of `q` against the closed polygon given
/// by `vertices` (implicitly closed). Boundary membership is decided
/// first, so the crossing parity only ever runs for off-boundary points.
fn locate(vertices: &[LatticePoint], q: LatticePoint) -> Location {
    let n = vertices.len();
    for i in 0..n {
        if on_segment(vertices[i], vertices[(i + 1) % n], q) {
            return Location::Boundary;
        }
    }
    let mut inside = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if (a.y > q.y) != (b.y > q.y) {
            // exact comparison of q.x against the edge's x at height q.y
            let dy = (b.y - a.y) as i128;
            let lhs = (q.x - a.x) as i128 * dy;
            let rhs = (q.y - a.y) as i128 * (b.x - a.x) as i128;
            let crosses = if dy > 0 { lhs < rhs } else { lhs > rhs };
            if crosses {
                inside = !inside;
            }
        }
    }
    if inside {
        Location::Inside
    } else {
        Location::Outside
    }
}

fn signed_double_area(vertices: &[LatticePoint]) -> i128 {
    let n = vertices.len();
    let mut sum = 0i128;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        sum += a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128;
    }
    sum
}

/// Twice a polygon area, kept doubled so half-integer areas stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwiceArea(pub u64);

impl TwiceArea {
    pub fn value(self) -> u64 {
        self.0
    }

    /// Decimal rendering of the actual area; always ends in ".0" or ".5".
    pub fn area_string(self) -> String {
        format!(
            "{}.{}",
            self.0 / 2,
            if self.0.is_multiple_of(2) { "0" } else { "5" }
        )
    }
}

impl fmt::Display for TwiceArea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.area_string())
    }
}

/// Boundary and interior lattice-point counts of a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointCounts {
    pub boundary: u64,
    pub interior: u64,
}

/// |u x v| for two non-collinear vectors: twice the area of the lattice
/// triangle they span.
pub fn twice_area_of_triangle(u: LatticeVector, v: LatticeVector) -> Result<u64> {
    let c = u.cross(v);
    if c == 0 {
        return Err(Error::Collinear);
    }
    u64::try_from(c.unsigned_abs()).map_err(|_| Error::Overflow)
}

/// A simple closed lattice polygon, stored counterclockwise.
///
/// Consecutive collinear vertices are allowed: the vertex list may name
/// boundary points that are not geometric corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<LatticePoint>,
}

impl Polygon {
    /// Validates a vertex list into a polygon, normalizing orientation to
    /// counterclockwise (the first vertex stays first).
    ///
    /// Rejects lists with fewer than three vertices, out-of-range
    /// coordinates, zero-length edges, repeated vertices, and any pair of
    /// edges that touch anywhere other than the shared endpoint of an
    /// adjacent pair.
    pub fn validate(mut vertices: Vec<LatticePoint>) -> Result<Polygon> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        for v in &vertices {
            if v.x.abs() > COORD_LIMIT || v.y.abs() > COORD_LIMIT {
                return Err(Error::Overflow);
            }
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::DegenerateEdge(i));
            }
        }
        let mut seen = HashSet::with_capacity(n);
        for v in &vertices {
            if !seen.insert(*v) {
                return Err(Error::RepeatedVertex(*v));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    // edges meeting at a vertex may not fold back onto
                    // each other
                    let (prev, mid, next) = if j == i + 1 {
                        (vertices[i], vertices[j], vertices[(j + 1) % n])
                    } else {
                        (vertices[n - 1], vertices[0], vertices[1])
                    };
                    if orient(prev, mid, next) == 0 && (prev - mid).dot(next - mid) > 0 {
                        return Err(Error::SelfIntersection(i, j));
                    }
                } else if segments_intersect(
                    vertices[i],
                    vertices[(i + 1) % n],
                    vertices[j],
                    vertices[(j + 1) % n],
                ) {
                    return Err(Error::SelfIntersection(i, j));
                }
            }
        }
        let signed = signed_double_area(&vertices);
        debug_assert_ne!(signed, 0, "a simple polygon has nonzero area");
        if signed < 0 {
            vertices[1..].reverse();
        }
        Ok(Polygon { vertices })
    }

    /// Construction bypass for callers that preserve validity (scaling,
    /// collinear-vertex removal). Input must already be a valid CCW list.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<LatticePoint>) -> Polygon {
        debug_assert!(signed_double_area(&vertices) > 0);
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Directed edges in counterclockwise order, closing back to the start.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Inclusive corners of the axis-aligned bounding box.
    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    pub fn locate(&self, q: LatticePoint) -> Location {
        locate(&self.vertices, q)
    }

    /// Number of lattice points on the boundary: the per-edge component
    /// gcd counts each edge's points from its start inclusive to its end
    /// exclusive.
    pub fn boundary_count(&self) -> u64 {
        self.edges().map(|(a, b)| gcd(b.x - a.x, b.y - a.y)).sum()
    }

    /// Every boundary lattice point in counterclockwise walk order,
    /// starting at the first vertex.
    pub fn boundary_points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            let d = b - a;
            let g = gcd(d.x, d.y) as i64;
            let step = LatticeVector::new(d.x / g, d.y / g);
            let mut p = a;
            for _ in 0..g {
                out.push(p);
                p = p + step;
            }
        }
        out
    }

    fn interior_in_row(&self, y: i64, x_lo: i64, x_hi: i64) -> u64 {
        (x_lo..=x_hi)
            .filter(|&x| self.locate(LatticePoint::new(x, y)) == Location::Inside)
            .count() as u64
    }

    /// Number of lattice points strictly inside the polygon, by exact
    /// crossing-number classification over the bounding box.
    pub fn interior_count(&self) -> u64 {
        #[cfg(feature = "parallel")]
        {
            self.interior_count_parallel()
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.interior_count_serial()
        }
    }

    /// Single-threaded interior count; always available as the fallback
    /// and as the baseline the benches compare against.
    pub fn interior_count_serial(&self) -> u64 {
        let (lo, hi) = self.bounding_box();
        ((lo.y + 1)..hi.y)
            .map(|y| self.interior_in_row(y, lo.x + 1, hi.x - 1))
            .sum()
    }

    /// Row-parallel interior count over the rayon thread pool.
    #[cfg(feature = "parallel")]
    pub fn interior_count_parallel(&self) -> u64 {
        let (lo, hi) = self.bounding_box();
        ((lo.y + 1)..hi.y)
            .into_par_iter()
            .map(|y| self.interior_in_row(y, lo.x + 1, hi.x - 1))
            .sum()
    }

    /// The interior lattice points themselves, in row-major order.
    pub fn interior_points(&self) -> Vec<LatticePoint> {
        let (lo, hi) = self.bounding_box();
        let row = |y: i64| -> Vec<LatticePoint> {
            ((lo.x + 1)..hi.x)
                .map(|x| LatticePoint::new(x, y))
                .filter(|&q| self.locate(q) == Location::Inside)
                .collect()
        };
        #[cfg(feature = "parallel")]
        {
            let rows: Vec<Vec<LatticePoint>> =
                ((lo.y + 1)..hi.y).into_par_iter().map(row).collect();
            rows.into_iter().flatten().collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            ((lo.y + 1)..hi.y).flat_map(row).collect()
        }
    }

    pub fn point_counts(&self) -> PointCounts {
        PointCounts {
            boundary: self.boundary_count(),
            interior: self.interior_count(),
        }
    }

    /// Area predicted from the point counts alone: N^b + 2N^i - 2, doubled.
    pub fn pick_twice_area(&self) -> TwiceArea {
        let c = self.point_counts();
        TwiceArea(c.boundary + 2 * c.interior - 2)
    }

    /// Twice the additive functional F = N^b/2 + N^i - 1. Numerically the
    /// same count as [`pick_twice_area`](Self::pick_twice_area), but F is
    /// the object whose additivity under chord splits is tested directly.
    pub fn f_doubled(&self) -> u64 {
        let c = self.point_counts();
        c.boundary + 2 * c.interior - 2
    }

    /// Surveyor's formula: |Σ (x_i·y_{i+1} - x_{i+1}·y_i)| over the cyclic
    /// vertex list. Exact, and independent of the point counts.
    pub fn shoelace_twice_area(&self) -> TwiceArea {
        let s = signed_double_area(&self.vertices).unsigned_abs();
        TwiceArea(u64::try_from(s).expect("area bounded by validated coordinates"))
    }

    /// Drops every vertex whose neighbors are collinear with it. The
    /// result traces the same boundary, so areas and counts are unchanged;
    /// applying it twice is the same as applying it once.
    pub fn canonical_vertices(&self) -> Polygon {
        let n = self.vertices.len();
        let kept: Vec<LatticePoint> = (0..n)
            .filter(|&i| {
                let prev = self.vertices[(i + n - 1) % n];
                let next = self.vertices[(i + 1) % n];
                orient(prev, self.vertices[i], next) != 0
            })
            .map(|i| self.vertices[i])
            .collect();
        debug_assert!(kept.len() >= 3);
        Polygon::from_ccw_unchecked(kept)
    }

    /// Splits the polygon along a chord: a simple lattice-segment path
    /// whose endpoints are boundary lattice points and whose interior lies
    /// strictly inside. Returns the two sub-polygons whose union is the
    /// original and whose shared boundary is exactly the chord.
    pub fn split_by_chord(&self, chord: &[LatticePoint]) -> Result<(Polygon, Polygon)> {
        if chord.len() < 2 {
            return Err(Error::ChordEndpointsNotOnBoundary);
        }
        let a = chord[0];
        let b = chord[chord.len() - 1];
        if a == b {
            return Err(Error::ChordSelfIntersects);
        }
        let mut seen = HashSet::new();
        for p in chord {
            if !seen.insert(*p) {
                return Err(Error::ChordSelfIntersects);
            }
        }
        for w in chord.windows(2) {
            if w[0] == w[1] {
                return Err(Error::ChordSelfIntersects);
            }
        }
        // path simplicity: no backtracking at joints, no crossing between
        // non-adjacent path segments
        let m = chord.len() - 1;
        for i in 0..m {
            for j in (i + 1)..m {
                if j == i + 1 {
                    let (p, q, r) = (chord[i], chord[i + 1], chord[i + 2]);
                    if orient(p, q, r) == 0 && (p - q).dot(r - q) > 0 {
                        return Err(Error::ChordSelfIntersects);
                    }
                } else if segments_intersect(chord[i], chord[i + 1], chord[j], chord[j + 1]) {
                    return Err(Error::ChordSelfIntersects);
                }
            }
        }

        let boundary = self.boundary_points();
        let index: HashMap<LatticePoint, usize> =
            boundary.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let (ia, ib) = match (index.get(&a), index.get(&b)) {
            (Some(&ia), Some(&ib)) => (ia, ib),
            _ => return Err(Error::ChordEndpointsNotOnBoundary),
        };

        // interior path vertices must sit strictly inside
        for p in &chord[1..chord.len() - 1] {
            if self.locate(*p) != Location::Inside {
                return Err(Error::ChordNotInside);
            }
        }
        // each chord segment may touch the boundary only at the chord's
        // own endpoints
        let doubled: Vec<LatticePoint> = self
            .vertices
            .iter()
            .map(|v| LatticePoint::new(2 * v.x, 2 * v.y))
            .collect();
        for w in chord.windows(2) {
            let (cs, ce) = (w[0], w[1]);
            for (ea, eb) in self.edges() {
                if !chord_contact_allowed(cs, ce, ea, eb, a, b) {
                    return Err(Error::ChordNotInside);
                }
            }
            // doubled midpoint is a lattice point; it decides strict
            // interiority of the open segment exactly
            let mid2 = LatticePoint::new(cs.x + ce.x, cs.y + ce.y);
            if locate(&doubled, mid2) != Location::Inside {
                return Err(Error::ChordNotInside);
            }
        }

        let walk = |from: usize, to: usize| -> Vec<LatticePoint> {
            let n = boundary.len();
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(boundary[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % n;
            }
            out
        };
        let mut v1 = walk(ia, ib);
        v1.extend(chord[1..chord.len() - 1].iter().rev());
        let mut v2 = walk(ib, ia);
        v2.extend(chord[1..chord.len() - 1].iter());
        Ok((Polygon::validate(v1)?, Polygon::validate(v2)?))
    }
}

/// Contact rule for one chord segment [cs, ce] against one boundary edge
/// [ea, eb]: either they do not meet, or they meet exactly at one of the
/// chord endpoints `a` / `b`.
fn chord_contact_allowed(
    cs: LatticePoint,
    ce: LatticePoint,
    ea: LatticePoint,
    eb: LatticePoint,
    a: LatticePoint,
    b: LatticePoint,
) -> bool {
    if !segments_intersect(cs, ce, ea, eb) {
        return true;
    }
    let collinear = orient(ea, eb, cs) == 0 && orient(ea, eb, ce) == 0;
    if collinear {
        // collinear overlap: the shared set must be a single endpoint
        // equal to a chord endpoint
        let mut shared: Vec<LatticePoint> = Vec::new();
        for p in [cs, ce] {
            if on_segment(ea, eb, p) && !shared.contains(&p) {
                shared.push(p);
            }
        }
        for p in [ea, eb] {
            if on_segment(cs, ce, p) && !shared.contains(&p) {
                shared.push(p);
            }
        }
        shared.len() == 1 && (shared[0] == a || shared[0] == b)
    } else {
        // non-collinear segments meet in at most one point, so a shared
        // chord endpoint is the entire intersection
        ((cs == a || cs == b) && on_segment(ea, eb, cs))
            || ((ce == a || ce == b) && on_segment(ea, eb, ce))
    }
}
