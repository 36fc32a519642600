//! Two independent routes to a polygon's area: the normalized
//! visibility-angle sum (approximate, floating point) and the integer-scaling
//! study (exact), each cross-checkable against the point-count value.

use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, COORD_LIMIT};
use crate::polygon::{orient, Polygon, TwiceArea};
use crate::rational::Rational;
use std::f64::consts::TAU;

/// One lattice point of the polygon and the fraction of a small disk
/// around it that lies inside the polygon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VisibilityEntry {
    pub point: LatticePoint,
    pub alpha: f64,
}

/// Per-point visibility fractions and their sum, which reproduces the
/// polygon area.
#[derive(Debug, Clone, PartialEq)]
pub struct VisibilityReport {
    pub per_point: Vec<VisibilityEntry>,
    pub total: f64,
}

/// Visibility fractions for every boundary lattice point, in boundary walk
/// order. Interior points of an edge see a half plane (exactly 1/2);
/// corners see their interior angle as a fraction of the full turn.
fn boundary_alphas(p: &Polygon) -> Vec<VisibilityEntry> {
    let pts = p.boundary_points();
    let n = pts.len();
    (0..n)
        .map(|i| {
            let prev = pts[(i + n - 1) % n];
            let cur = pts[i];
            let next = pts[(i + 1) % n];
            let alpha = if orient(prev, cur, next) == 0 {
                0.5
            } else {
                let incoming = cur - prev;
                let outgoing = next - cur;
                // exterior turn in (-pi, pi); interior angle = pi - turn
                let turn = (incoming.cross(outgoing) as f64).atan2(incoming.dot(outgoing) as f64);
                (std::f64::consts::PI - turn) / TAU
            };
            VisibilityEntry { point: cur, alpha }
        })
        .collect()
}

/// Sum of the boundary visibility fractions; equals N^b/2 - 1 up to
/// floating-point error because the boundary is an N^b-gon whose interior
/// angles sum to (N^b - 2)·pi.
pub fn boundary_angle_sum(p: &Polygon) -> f64 {
    boundary_alphas(p).iter().map(|e| e.alpha).sum()
}

/// The visibility measure of every lattice point of the polygon: 1 for
/// interior points, 1/2 for non-corner boundary points, interior angle /
/// 2·pi for corners. The total reproduces the polygon area to within
/// floating-point error.
pub fn visibility_measure(p: &Polygon) -> VisibilityReport {
    let mut per_point = boundary_alphas(p);
    let boundary_total: f64 = per_point.iter().map(|e| e.alpha).sum();
    let interior = p.interior_points();
    let total = boundary_total + interior.len() as f64;
    per_point.extend(
        interior
            .into_iter()
            .map(|point| VisibilityEntry { point, alpha: 1.0 }),
    );
    debug_assert!({
        let counts = p.point_counts();
        let exact = (counts.boundary + 2 * counts.interior - 2) as f64 / 2.0;
        (total - exact).abs() <= 1e-9
    });
    VisibilityReport { per_point, total }
}

/// The polygon with every coordinate multiplied by k. Areas scale by k²,
/// boundary counts by k, and the shape stays simple, so no revalidation
/// runs. Panics if k = 0; fails with Overflow when a scaled coordinate
/// would leave the supported range.
pub fn scale(p: &Polygon, k: u32) -> Result<Polygon> {
    assert!(k >= 1, "scale factor must be positive");
    let k = k as i64;
    let mut scaled = Vec::with_capacity(p.vertices().len());
    for v in p.vertices() {
        let (x, y) = (v.x as i128 * k as i128, v.y as i128 * k as i128);
        if x.unsigned_abs() > COORD_LIMIT as u128 || y.unsigned_abs() > COORD_LIMIT as u128 {
            return Err(Error::Overflow);
        }
        scaled.push(LatticePoint::new(x as i64, y as i64));
    }
    Ok(Polygon::from_ccw_unchecked(scaled))
}

/// One row of a scaling study: the interior count of the k-fold scaled
/// polygon with the exact area estimate N^i(kP)/k² and its deficit from
/// the true area.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalingRow {
    pub k: u32,
    pub interior: u64,
    pub ratio: Rational,
    pub deficit: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingReport {
    pub twice_area: TwiceArea,
    pub boundary: u64,
    pub rows: Vec<ScalingRow>,
}

/// Counts interior points of kP for k = 1..=k_max and checks the exact
/// identity N^i(kP) = k²·A - k·N^b/2 + 1 for every row; the ratio column
/// then approaches A from below with deficit exactly N^b/(2k) - 1/k².
pub fn scaling_study(p: &Polygon, k_max: u32) -> Result<ScalingReport> {
    assert!(k_max >= 1, "need at least one scale factor");
    let twice_area = p.shoelace_twice_area();
    let boundary = p.boundary_count();
    let mut rows = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        let scaled = scale(p, k)?;
        let interior = scaled.interior_count();
        let kk = k as i128;
        // doubled form of the identity keeps everything integral
        let expected = kk * kk * twice_area.value() as i128 - kk * boundary as i128 + 2;
        assert_eq!(
            2 * interior as i128,
            expected,
            "interior count of {k}-fold scaling disagrees with the point-count identity"
        );
        let ratio = Rational::new(interior as i128, kk * kk);
        let deficit = Rational::new(twice_area.value() as i128, 2) - ratio;
        debug_assert_eq!(
            deficit,
            Rational::new(boundary as i128, 2 * kk) - Rational::new(1, kk * kk)
        );
        rows.push(ScalingRow {
            k,
            interior,
            ratio,
            deficit,
        });
    }
    Ok(ScalingReport {
        twice_area,
        boundary,
        rows,
    })
}
