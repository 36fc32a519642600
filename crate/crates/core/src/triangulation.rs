//! Partition of a lattice polygon into elementary triangles (twice-area 1,
//! no lattice points besides the corners), the combinatorial counts of the
//! resulting edge/vertex complex, and a step-by-step reassembly order that
//! keeps the point-count area identity true after every step.

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::polygon::{on_segment, orient, Polygon};
use std::collections::{HashMap, HashSet, VecDeque};

/// A lattice triangle of twice-area exactly 1, stored counterclockwise.
/// Such a triangle contains no lattice point other than its corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementaryTriangle {
    pub a: LatticePoint,
    pub b: LatticePoint,
    pub c: LatticePoint,
}

/// Undirected edge identity: endpoints in sorted order.
pub(crate) type EdgeKey = (LatticePoint, LatticePoint);

fn edge_key(p: LatticePoint, q: LatticePoint) -> EdgeKey {
    if p <= q {
        (p, q)
    } else {
        (q, p)
    }
}

impl ElementaryTriangle {
    fn new_ccw(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Self {
        debug_assert_eq!(orient(a, b, c), 1);
        ElementaryTriangle { a, b, c }
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        [self.a, self.b, self.c]
    }

    pub fn edge_keys(&self) -> [EdgeKey; 3] {
        [
            edge_key(self.a, self.b),
            edge_key(self.b, self.c),
            edge_key(self.c, self.a),
        ]
    }

    pub fn twice_signed_area(&self) -> i128 {
        orient(self.a, self.b, self.c)
    }
}

/// Combinatorial counts of a full triangulation, tied to the polygon's
/// point counts by the edge formula, the triangle-count formula, and
/// Euler's relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangulationStats {
    pub n_triangles: u64,
    pub n_edges: u64,
    pub n_vertices: u64,
    pub n_boundary: u64,
    pub n_interior: u64,
}

fn in_closed_triangle(a: LatticePoint, b: LatticePoint, c: LatticePoint, q: LatticePoint) -> bool {
    orient(a, b, q) >= 0 && orient(b, c, q) >= 0 && orient(c, a, q) >= 0
}

/// Ear clipping over the corner-only vertex list. Scans vertices in stored
/// order each round and clips the first strictly convex vertex whose
/// closed triangle contains no other vertex, so output is deterministic.
fn ear_clip(vertices: &[LatticePoint]) -> Vec<(LatticePoint, LatticePoint, LatticePoint)> {
    let mut vs = vertices.to_vec();
    let mut out = Vec::with_capacity(vs.len().saturating_sub(2));
    while vs.len() > 3 {
        let n = vs.len();
        let mut clipped = false;
        'scan: for i in 0..n {
            let prev = vs[(i + n - 1) % n];
            let cur = vs[i];
            let next = vs[(i + 1) % n];
            if orient(prev, cur, next) <= 0 {
                continue;
            }
            for (j, &w) in vs.iter().enumerate() {
                if j == i || j == (i + n - 1) % n || j == (i + 1) % n {
                    continue;
                }
                if in_closed_triangle(prev, cur, next, w) {
                    continue 'scan;
                }
            }
            out.push((prev, cur, next));
            vs.remove(i);
            clipped = true;
            break;
        }
        assert!(clipped, "a simple polygon always has a clippable ear");
    }
    debug_assert!(orient(vs[0], vs[1], vs[2]) > 0);
    out.push((vs[0], vs[1], vs[2]));
    out
}

/// Lexicographically smallest lattice point in the closed triangle other
/// than its corners, if any.
fn extra_lattice_point(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Option<LatticePoint> {
    let xs = [a.x, b.x, c.x];
    let ys = [a.y, b.y, c.y];
    for x in *xs.iter().min().unwrap()..=*xs.iter().max().unwrap() {
        for y in *ys.iter().min().unwrap()..=*ys.iter().max().unwrap() {
            let q = LatticePoint::new(x, y);
            if q != a && q != b && q != c && in_closed_triangle(a, b, c, q) {
                return Some(q);
            }
        }
    }
    None
}

/// Triangulates the polygon into elementary triangles that tile it
/// exactly; every lattice point of the polygon (boundary and interior)
/// ends up as a triangle corner.
///
/// Ear clipping produces lattice triangles; each is then refined by
/// splitting through its smallest extra lattice point (2 children for an
/// edge point, 3 for an interior point) until twice-area 1, which always
/// terminates because twice-area strictly drops and a lattice triangle of
/// twice-area above 1 always contains an extra point.
pub fn triangulate(p: &Polygon) -> Vec<ElementaryTriangle> {
    let corners = p.canonical_vertices();
    let mut queue: VecDeque<(LatticePoint, LatticePoint, LatticePoint)> =
        ear_clip(corners.vertices()).into();
    let mut out = Vec::new();
    while let Some((a, b, c)) = queue.pop_front() {
        if orient(a, b, c) == 1 {
            out.push(ElementaryTriangle::new_ccw(a, b, c));
            continue;
        }
        let q = extra_lattice_point(a, b, c)
            .expect("a lattice triangle of twice-area > 1 contains an extra lattice point");
        if on_segment(a, b, q) {
            queue.push_back((a, q, c));
            queue.push_back((q, b, c));
        } else if on_segment(b, c, q) {
            queue.push_back((b, q, a));
            queue.push_back((q, c, a));
        } else if on_segment(c, a, q) {
            queue.push_back((c, q, b));
            queue.push_back((q, a, b));
        } else {
            queue.push_back((a, b, q));
            queue.push_back((b, c, q));
            queue.push_back((c, a, q));
        }
    }
    out
}

/// Counts distinct vertices and undirected edges across the triangulation
/// and checks them against the polygon's point counts: every invariant
/// failing returns an error instead of a report.
pub fn stats(triangles: &[ElementaryTriangle], p: &Polygon) -> Result<TriangulationStats> {
    let mut vertices = HashSet::new();
    let mut edges = HashSet::new();
    for t in triangles {
        vertices.extend(t.vertices());
        edges.extend(t.edge_keys());
    }
    let counts = p.point_counts();
    let s = TriangulationStats {
        n_triangles: triangles.len() as u64,
        n_edges: edges.len() as u64,
        n_vertices: vertices.len() as u64,
        n_boundary: counts.boundary,
        n_interior: counts.interior,
    };
    if s.n_vertices != s.n_boundary + s.n_interior {
        return Err(Error::InconsistentTriangulation(format!(
            "vertex count {} != N^b + N^i = {}",
            s.n_vertices,
            s.n_boundary + s.n_interior
        )));
    }
    if s.n_edges != 2 * s.n_boundary + 3 * s.n_interior - 3 {
        return Err(Error::InconsistentTriangulation(format!(
            "edge count {} != 2N^b + 3N^i - 3 = {}",
            s.n_edges,
            2 * s.n_boundary + 3 * s.n_interior - 3
        )));
    }
    if s.n_triangles != s.n_boundary + 2 * s.n_interior - 2 {
        return Err(Error::InconsistentTriangulation(format!(
            "triangle count {} != N^b + 2N^i - 2 = {}",
            s.n_triangles,
            s.n_boundary + 2 * s.n_interior - 2
        )));
    }
    // Euler: V + F - E = 2 with F counting the outer face
    if s.n_vertices + s.n_triangles + 1 != s.n_edges + 2 {
        return Err(Error::InconsistentTriangulation(format!(
            "Euler check fails: V={} F={} E={}",
            s.n_vertices,
            s.n_triangles + 1,
            s.n_edges
        )));
    }
    Ok(s)
}

/// How one reassembly step changes the growing union.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// The first triangle laid down.
    Seed,
    /// One new boundary point appears; interior count unchanged.
    AddsBoundaryPoint,
    /// The triangle fills a wedge between two union edges, turning their
    /// shared point into an interior point.
    WedgeFill,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReassemblyStep {
    pub triangle: ElementaryTriangle,
    pub kind: StepKind,
}

/// Running-union bookkeeping: edge multiplicities decide which vertices
/// are on the union boundary.
#[derive(Default, Clone)]
struct UnionState {
    edge_mult: HashMap<EdgeKey, u32>,
    vertices: HashSet<LatticePoint>,
}

impl UnionState {
    fn place(&mut self, t: &ElementaryTriangle) {
        for e in t.edge_keys() {
            *self.edge_mult.entry(e).or_insert(0) += 1;
        }
        self.vertices.extend(t.vertices());
    }

    /// (boundary, interior) counts of the union's lattice points. All
    /// lattice points covered by the union are triangle corners, and a
    /// corner is on the union boundary exactly when some incident edge
    /// belongs to one triangle only.
    fn point_counts(&self) -> (u64, u64) {
        let mut boundary = HashSet::new();
        for (e, m) in &self.edge_mult {
            if *m == 1 {
                boundary.insert(e.0);
                boundary.insert(e.1);
            }
        }
        (
            boundary.len() as u64,
            (self.vertices.len() - boundary.len()) as u64,
        )
    }

    /// The point-count area identity for a union of `placed` elementary
    /// triangles: N^b + 2N^i - 2 = twice-area = placed. Holds exactly when
    /// the union is a Jordan polygon.
    fn area_identity_holds(&self, placed: u64) -> bool {
        let (nb, ni) = self.point_counts();
        nb + 2 * ni == placed + 2
    }
}

/// Orders the triangles so each one after the first shares at least one
/// edge with the union of its predecessors and the union stays a Jordan
/// polygon throughout — verified at every step via the area identity.
/// Steps are classified by whether they add a boundary point or convert
/// one into an interior point.
pub fn reassembly_order(triangles: &[ElementaryTriangle]) -> Result<Vec<ReassemblyStep>> {
    let mut steps = Vec::with_capacity(triangles.len());
    if triangles.is_empty() {
        return Ok(steps);
    }
    let mut placed = vec![false; triangles.len()];
    let mut state = UnionState::default();
    state.place(&triangles[0]);
    placed[0] = true;
    if !state.area_identity_holds(1) {
        return Err(Error::InconsistentTriangulation(
            "seed triangle is not elementary".into(),
        ));
    }
    steps.push(ReassemblyStep {
        triangle: triangles[0],
        kind: StepKind::Seed,
    });
    for round in 1..triangles.len() {
        let (_, interior_before) = state.point_counts();
        let mut committed = false;
        for (i, t) in triangles.iter().enumerate() {
            if placed[i] {
                continue;
            }
            let shares_edge = t
                .edge_keys()
                .iter()
                .any(|e| state.edge_mult.get(e).copied().unwrap_or(0) == 1);
            let overfull = t
                .edge_keys()
                .iter()
                .any(|e| state.edge_mult.get(e).copied().unwrap_or(0) >= 2);
            if !shares_edge || overfull {
                continue;
            }
            let mut trial = state.clone();
            trial.place(t);
            if !trial.area_identity_holds(round as u64 + 1) {
                continue;
            }
            let (_, interior_after) = trial.point_counts();
            let kind = if interior_after > interior_before {
                StepKind::WedgeFill
            } else {
                StepKind::AddsBoundaryPoint
            };
            state = trial;
            placed[i] = true;
            steps.push(ReassemblyStep { triangle: *t, kind });
            committed = true;
            break;
        }
        if !committed {
            return Err(Error::Disconnected);
        }
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::Location;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::validate(pts.iter().map(|&(x, y)| pt(x, y)).collect()).unwrap()
    }

    /// Oracle: scan the bounding box and count lattice points in the
    /// closed triangle. Elementary means exactly the 3 corners.
    fn closed_lattice_points(t: &ElementaryTriangle) -> usize {
        let xs = [t.a.x, t.b.x, t.c.x];
        let ys = [t.a.y, t.b.y, t.c.y];
        let mut count = 0;
        for x in *xs.iter().min().unwrap()..=*xs.iter().max().unwrap() {
            for y in *ys.iter().min().unwrap()..=*ys.iter().max().unwrap() {
                if in_closed_triangle(t.a, t.b, t.c, pt(x, y)) {
                    count += 1;
                }
            }
        }
        count
    }

    fn assert_valid_triangulation(p: &Polygon) -> Vec<ElementaryTriangle> {
        let tris = triangulate(p);
        let mut area_sum = 0i128;
        for t in &tris {
            assert_eq!(t.twice_signed_area(), 1);
            assert_eq!(closed_lattice_points(t), 3);
            area_sum += 1;
        }
        assert_eq!(area_sum, p.shoelace_twice_area().value() as i128);
        // tiling: boundary edges used once, interior edges twice
        let mut mult: HashMap<EdgeKey, u32> = HashMap::new();
        for t in &tris {
            for e in t.edge_keys() {
                *mult.entry(e).or_insert(0) += 1;
            }
        }
        let mut boundary_edges = 0;
        for ((a, b), m) in &mult {
            assert!(*m == 1 || *m == 2, "edge {a}-{b} used {m} times");
            if *m == 1 {
                let doubled: Vec<LatticePoint> =
                    p.vertices().iter().map(|v| pt(2 * v.x, 2 * v.y)).collect();
                let mid = pt(a.x + b.x, a.y + b.y);
                assert_eq!(
                    Polygon::validate(doubled).unwrap().locate(mid),
                    Location::Boundary,
                    "single-use edge must lie on the polygon boundary"
                );
                boundary_edges += 1;
            }
        }
        assert_eq!(boundary_edges, p.boundary_count());
        tris
    }

    #[test]
    fn unit_square_splits_into_two() {
        let p = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let tris = assert_valid_triangulation(&p);
        assert_eq!(tris.len(), 2);
        let s = stats(&tris, &p).unwrap();
        assert_eq!((s.n_vertices, s.n_edges, s.n_triangles), (4, 5, 2));
    }

    #[test]
    fn right_triangle_2_gives_four_elementary_pieces() {
        let p = poly(&[(0, 0), (2, 0), (0, 2)]);
        let tris = assert_valid_triangulation(&p);
        assert_eq!(tris.len(), 4);
    }

    #[test]
    fn right_triangle_4_gives_sixteen() {
        let p = poly(&[(0, 0), (4, 0), (0, 4)]);
        let tris = assert_valid_triangulation(&p);
        assert_eq!(tris.len(), 16);
        let s = stats(&tris, &p).unwrap();
        assert_eq!(s.n_edges, 2 * 12 + 3 * 3 - 3);
        assert_eq!(s.n_triangles, 16);
    }

    #[test]
    fn nonconvex_polygon_triangulates() {
        let p = poly(&[(0, 0), (6, 0), (6, 4), (3, 1), (0, 4)]);
        assert_valid_triangulation(&p);
    }

    #[test]
    fn collinear_vertices_are_handled() {
        let p = poly(&[(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)]);
        let tris = assert_valid_triangulation(&p);
        // all 8 boundary points appear as corners
        let mut corner_set = HashSet::new();
        for t in &tris {
            corner_set.extend(t.vertices());
        }
        for bp in p.boundary_points() {
            assert!(corner_set.contains(&bp));
        }
    }

    #[test]
    fn stats_rejects_truncated_triangulation() {
        let p = poly(&[(0, 0), (2, 0), (0, 2)]);
        let mut tris = triangulate(&p);
        tris.pop();
        assert!(matches!(
            stats(&tris, &p),
            Err(Error::InconsistentTriangulation(_))
        ));
    }

    #[test]
    fn single_triangle_stats() {
        let p = poly(&[(0, 0), (1, 0), (0, 1)]);
        let tris = triangulate(&p);
        let s = stats(&tris, &p).unwrap();
        assert_eq!((s.n_vertices, s.n_edges, s.n_triangles), (3, 3, 1));
    }

    #[test]
    fn square_reassembly_second_step_adds_boundary_point() {
        let p = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        let steps = reassembly_order(&triangulate(&p)).unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0].kind, StepKind::Seed);
        assert_eq!(steps[1].kind, StepKind::AddsBoundaryPoint);
    }

    #[test]
    fn single_triangle_reassembly_is_trivial() {
        let p = poly(&[(0, 0), (1, 0), (0, 1)]);
        let steps = reassembly_order(&triangulate(&p)).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].kind, StepKind::Seed);
    }

    #[test]
    fn reassembly_covers_triangle_4_with_half_steps() {
        let p = poly(&[(0, 0), (4, 0), (0, 4)]);
        let tris = triangulate(&p);
        let steps = reassembly_order(&tris).unwrap();
        assert_eq!(steps.len(), 16, "one half-unit of F per step, 8 total");
        // replay the union independently and re-check the identity
        let mut state = UnionState::default();
        for (i, step) in steps.iter().enumerate() {
            state.place(&step.triangle);
            assert!(state.area_identity_holds(i as u64 + 1));
        }
    }

    #[test]
    fn reassembly_rejects_disconnected_input() {
        let far = poly(&[(10, 10), (11, 10), (10, 11)]);
        let near = poly(&[(0, 0), (1, 0), (0, 1)]);
        let mut tris = triangulate(&near);
        tris.extend(triangulate(&far));
        assert_eq!(reassembly_order(&tris), Err(Error::Disconnected));
    }

    #[test]
    fn paired_vectors_span_expected_determinants() {
        use crate::lattice::LatticeVector;
        let pairs = [
            (LatticeVector::new(2, 5), LatticeVector::new(1, 4)),
            (LatticeVector::new(3, 2), LatticeVector::new(4, 3)),
            (LatticeVector::new(3, 2), LatticeVector::new(2, 1)),
        ];
        let dets: Vec<u128> = pairs
            .iter()
            .map(|(u, v)| u.cross(*v).unsigned_abs())
            .collect();
        assert_eq!(dets, vec![3, 1, 1]);
    }
}
