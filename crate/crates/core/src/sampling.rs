//! Random simple lattice polygons for studies, property tests, and
//! benches: rejection sampling of star-shaped vertex rings.

use crate::lattice::LatticePoint;
use crate::polygon::Polygon;
use rand::Rng;
use std::cmp::Ordering;

/// Draws a random simple polygon with 3..=max_vertices vertices and
/// coordinates in [-coord_bound, coord_bound].
///
/// Candidate points are ordered by exact angle around their centroid and
/// the result is validated; invalid candidates (duplicate rays, collinear
/// collapses) are rejected and redrawn, so the polygon returned is always
/// valid. Determinism follows the given generator.
pub fn random_simple_polygon<R: Rng + ?Sized>(
    rng: &mut R,
    max_vertices: usize,
    coord_bound: i64,
) -> Polygon {
    assert!(max_vertices >= 3);
    assert!(coord_bound >= 1);
    loop {
        let n = rng.gen_range(3..=max_vertices);
        let mut pts: Vec<LatticePoint> = (0..n)
            .map(|_| {
                LatticePoint::new(
                    rng.gen_range(-coord_bound..=coord_bound),
                    rng.gen_range(-coord_bound..=coord_bound),
                )
            })
            .collect();
        pts.sort();
        pts.dedup();
        if pts.len() < 3 {
            continue;
        }
        sort_by_angle_around_centroid(&mut pts);
        if let Ok(polygon) = Polygon::validate(pts) {
            return polygon;
        }
    }
}

fn sort_by_angle_around_centroid(pts: &mut [LatticePoint]) {
    let n = pts.len() as i128;
    let sx: i128 = pts.iter().map(|p| p.x as i128).sum();
    let sy: i128 = pts.iter().map(|p| p.y as i128).sum();
    // work with n*(p - centroid), which keeps everything integral
    pts.sort_by(|&a, &b| {
        let u = (a.x as i128 * n - sx, a.y as i128 * n - sy);
        let v = (b.x as i128 * n - sx, b.y as i128 * n - sy);
        angle_cmp(u, v)
    });
}

fn half_plane(v: (i128, i128)) -> u8 {
    // 0 for angles in [0, pi), counting from the positive x axis
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn angle_cmp(u: (i128, i128), v: (i128, i128)) -> Ordering {
    half_plane(u).cmp(&half_plane(v)).then_with(|| {
        let cross = u.0 * v.1 - u.1 * v.0;
        // counterclockwise order; ties (same ray) break by distance
        cross.cmp(&0).reverse().then_with(|| {
            let du = u.0 * u.0 + u.1 * u.1;
            let dv = v.0 * v.0 + v.1 * v.1;
            du.cmp(&dv)
        })
    })
}
