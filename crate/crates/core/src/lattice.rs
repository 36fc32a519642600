//! Exact integer-pair primitives: gcd, the extended Euclidean algorithm,
//! simple-vector tests, primitive-cell partners, unimodular basis changes,
//! and the minimal lattice triangle over a given base vector.
//!
//! Everything here is a pure function over immutable values. Inputs are
//! expected to stay within [`COORD_LIMIT`]; intermediates are widened to
//! i128 so that every determinant and product is exact, and any narrowing
//! back to i64 is checked.

use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Largest coordinate magnitude accepted by polygon validation and scaling.
///
/// At this bound a 2x2 determinant needs ~62 bits, so i128 intermediates
/// keep all arithmetic exact with a wide margin.
pub const COORD_LIMIT: i64 = 1_000_000_000;

/// A displacement between lattice points of Z².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub x: i64,
    pub y: i64,
}

/// A point of the integer lattice Z².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticeVector {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn is_zero(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// Exact cross product `self.x * other.y - self.y * other.x`.
    ///
    /// Twice the signed area of the triangle spanned by the two vectors.
    pub fn cross(self, other: Self) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }

    pub fn dot(self, other: Self) -> i128 {
        self.x as i128 * other.x as i128 + self.y as i128 * other.y as i128
    }

    /// A lattice vector is simple when its segment passes through no
    /// intermediate lattice point, i.e. its components are coprime.
    pub fn is_simple(self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(gcd(self.x, self.y) == 1)
    }

    /// Number of lattice points strictly between the origin and `self`
    /// on the segment joining them: gcd(|x|, |y|) - 1.
    pub fn interior_lattice_points(self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(gcd(self.x, self.y) - 1)
    }

    /// The canonical partner vector `w` with `det(self, w) = +1`, so the
    /// parallelogram spanned by the pair is a primitive cell.
    ///
    /// Partners differ by integer multiples of `self`; the representative
    /// with `0 <= w.x < |x|` (or `0 <= w.y < |y|` when `x = 0`) is returned
    /// so the output is deterministic.
    pub fn primitive_partner(self) -> Result<LatticeVector> {
        let g = gcd(self.x, self.y);
        if g != 1 {
            return Err(Error::NotSimple(self.x, self.y, g));
        }
        let cert = extended_gcd(self.x, self.y)?;
        // s*x + t*y = 1, so w = (-t, s) satisfies x*w.y - y*w.x = 1.
        let w = LatticeVector::new(-cert.t, cert.s);
        let (wx, wy) = if self.x != 0 {
            let m = self.x.abs() as i128;
            let r = (w.x as i128).rem_euclid(m);
            let j = (r - w.x as i128) / self.x as i128;
            (r, w.y as i128 + j * self.y as i128)
        } else {
            let m = self.y.abs() as i128;
            let r = (w.y as i128).rem_euclid(m);
            let j = (r - w.y as i128) / self.y as i128;
            (w.x as i128 + j * self.x as i128, r)
        };
        let w = LatticeVector::new(narrow(wx)?, narrow(wy)?);
        debug_assert_eq!(self.cross(w), 1);
        Ok(w)
    }

    /// `2k` partner vectors spanning primitive cells with `self`: the
    /// canonical partner shifted by j·self for j = 0, -1, 1, -2, ... and
    /// each shift's negation. Every returned `w` has |det(self, w)| = 1.
    pub fn all_partners(self, k: usize) -> Result<Vec<LatticeVector>> {
        let w = self.primitive_partner()?;
        let mut out = Vec::with_capacity(2 * k);
        for idx in 0..k {
            let j = idx.div_ceil(2) as i128 * if idx % 2 == 1 { -1 } else { 1 };
            let vx = narrow(w.x as i128 + j * self.x as i128)?;
            let vy = narrow(w.y as i128 + j * self.y as i128)?;
            let v = LatticeVector::new(vx, vy);
            out.push(v);
            out.push(-v);
        }
        Ok(out)
    }
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn to_vector(self) -> LatticeVector {
        LatticeVector::new(self.x, self.y)
    }
}

impl Neg for LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        LatticeVector::new(-self.x, -self.y)
    }
}

impl Add for LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: LatticeVector) -> LatticeVector {
        LatticeVector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticeVector;
    fn sub(self, rhs: LatticePoint) -> LatticeVector {
        LatticeVector::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Add<LatticeVector> for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: LatticeVector) -> LatticePoint {
        LatticePoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// gcd(|a|, |b|); gcd(0, 0) = 0.
pub fn gcd(a: i64, b: i64) -> u64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The Bézout identity s·a + t·b = g for a pair of integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub a: i64,
    pub b: i64,
    /// gcd(|a|, |b|), always positive here (inputs not both zero).
    pub g: i64,
    pub s: i64,
    pub t: i64,
}

impl BezoutCertificate {
    /// Exact check of the identity this certificate claims.
    pub fn holds(&self) -> bool {
        self.s as i128 * self.a as i128 + self.t as i128 * self.b as i128 == self.g as i128
    }
}

impl fmt::Display for BezoutCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sign, t_abs) = if self.t < 0 {
            ("-", -(self.t as i128))
        } else {
            ("+", self.t as i128)
        };
        write!(
            f,
            "{} = {}*{} {} {}*{}",
            self.g, self.s, self.a, sign, t_abs, self.b
        )
    }
}

/// Extended Euclidean algorithm with a canonical coefficient choice.
///
/// The coefficient s is unique modulo b/g; the representative in
/// (-|b|/(2g), |b|/(2g)] is returned so results are reproducible, and t
/// follows from the identity.
pub fn extended_gcd(a: i64, b: i64) -> Result<BezoutCertificate> {
    if a == 0 && b == 0 {
        return Err(Error::BothZero);
    }
    let (mut old_r, mut r) = (a.unsigned_abs() as i128, b.unsigned_abs() as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    let g = old_r;
    let mut s = old_s * a.signum() as i128;
    let t;
    if b == 0 {
        t = 0;
    } else {
        // reduce s into (-m/2, m/2] where m = |b|/g
        let m = b.unsigned_abs() as i128 / g;
        s = s.rem_euclid(m);
        if 2 * s > m {
            s -= m;
        }
        t = (g - s * a as i128) / b as i128;
    }
    Ok(BezoutCertificate {
        a,
        b,
        g: narrow(g)?,
        s: narrow(s)?,
        t: narrow(t)?,
    })
}

/// Integer 2x2 matrix relating two lattice bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisChange {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl BasisChange {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }

    pub fn det(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }

    /// Two bases generate the same lattice exactly when |det| = 1.
    pub fn is_unimodular(&self) -> bool {
        self.det().unsigned_abs() == 1
    }

    /// Image of `v` under this matrix.
    pub fn apply(&self, v: LatticeVector) -> Result<LatticeVector> {
        let x = self.a as i128 * v.x as i128 + self.b as i128 * v.y as i128;
        let y = self.c as i128 * v.x as i128 + self.d as i128 * v.y as i128;
        Ok(LatticeVector::new(narrow(x)?, narrow(y)?))
    }
}

/// The apex (α, β) minimizing |a·β - b·α| over all apexes not collinear
/// with (a, b), together with that minimum, which equals gcd(|a|, |b|).
///
/// The triangle {(0,0), (a,b), (α,β)} attains the smallest possible
/// twice-area for a lattice triangle over the base (a, b) and encloses no
/// lattice point. The apex is read off the Bézout certificate: with
/// s·a + t·b = g, the vector (-t, s) gives a·s - b·(-t) = g.
pub fn minimal_triangle(a: i64, b: i64) -> Result<(LatticeVector, u64)> {
    if a == 0 && b == 0 {
        return Err(Error::ZeroVector);
    }
    let cert = extended_gcd(a, b)?;
    let apex = LatticeVector::new(-cert.t, cert.s);
    debug_assert_eq!(LatticeVector::new(a, b).cross(apex), cert.g as i128);
    Ok((apex, cert.g as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(173, 16), 1);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(-12, 8), 4);
        assert_eq!(gcd(i64::MIN, 0), 1 << 63);
    }

    #[test]
    fn gcd_matches_divisor_scan() {
        // independent oracle: largest common divisor by exhaustive scan
        let brute = |a: u64, b: u64| {
            (1..=a.max(b))
                .rev()
                .find(|&d| a.is_multiple_of(d) && b.is_multiple_of(d))
        };
        assert_eq!(brute(12, 8), Some(4));
        assert_eq!(gcd(12, 8), 4);
        for a in 1..=30i64 {
            for b in 1..=30i64 {
                assert_eq!(gcd(a, b), brute(a as u64, b as u64).unwrap());
            }
        }
    }

    #[test]
    fn extended_gcd_worked_example() {
        let cert = extended_gcd(173, 16).unwrap();
        assert_eq!((cert.g, cert.s, cert.t), (1, 5, -54));
        assert!(cert.holds());
        assert_eq!(cert.to_string(), "1 = 5*173 - 54*16");
    }

    #[test]
    fn extended_gcd_identity_case() {
        let cert = extended_gcd(1, 0).unwrap();
        assert_eq!((cert.g, cert.s, cert.t), (1, 1, 0));
    }

    #[test]
    fn extended_gcd_matches_exhaustive_search() {
        // oracle: all (s, t) with |s|,|t| <= 8 satisfying s*12 + t*8 = 4
        let mut witnesses = vec![];
        for s in -8i64..=8 {
            for t in -8i64..=8 {
                if s * 12 + t * 8 == 4 {
                    witnesses.push((s, t));
                }
            }
        }
        assert!(witnesses.contains(&(1, -1)));
        let cert = extended_gcd(12, 8).unwrap();
        assert_eq!(cert.g, 4);
        assert!(witnesses.contains(&(cert.s, cert.t)));
        assert!(cert.holds());
    }

    #[test]
    fn extended_gcd_rejects_zero_pair() {
        assert_eq!(extended_gcd(0, 0), Err(Error::BothZero));
    }

    #[test]
    fn extended_gcd_canonical_bound_and_signs() {
        for a in -40i64..=40 {
            for b in -40i64..=40 {
                if a == 0 && b == 0 {
                    continue;
                }
                let cert = extended_gcd(a, b).unwrap();
                assert!(cert.holds(), "identity fails for ({a}, {b})");
                assert_eq!(cert.g as u64, gcd(a, b));
                if b != 0 {
                    // canonical representative: |s| <= |b| / (2g)
                    assert!(
                        2 * cert.s.abs() * cert.g <= b.abs(),
                        "({a}, {b}) -> s={}",
                        cert.s
                    );
                }
            }
        }
    }

    #[test]
    fn simple_vector_examples() {
        assert!(LatticeVector::new(173, 16).is_simple().unwrap());
        assert!(LatticeVector::new(1, 0).is_simple().unwrap());
        assert!(!LatticeVector::new(6, 4).is_simple().unwrap());
        assert_eq!(LatticeVector::new(0, 0).is_simple(), Err(Error::ZeroVector));
    }

    #[test]
    fn segment_interior_points_match_walk() {
        // oracle: walk every lattice point strictly between 0 and v
        let walk = |v: LatticeVector| {
            let mut count = 0;
            for x in -60i64..=60 {
                for y in -60i64..=60 {
                    if (x, y) == (0, 0) || (x, y) == (v.x, v.y) {
                        continue;
                    }
                    let p = LatticeVector::new(x, y);
                    if v.cross(p) == 0 && p.dot(v) > 0 && p.dot(p) < v.dot(v) {
                        count += 1;
                    }
                }
            }
            count
        };
        assert_eq!(walk(LatticeVector::new(6, 4)), 1); // only (3, 2)
        assert_eq!(
            LatticeVector::new(6, 4).interior_lattice_points().unwrap(),
            1
        );
        assert_eq!(
            LatticeVector::new(1, 1).interior_lattice_points().unwrap(),
            0
        );
        assert_eq!(walk(LatticeVector::new(0, 5)), 4);
        assert_eq!(
            LatticeVector::new(0, 5).interior_lattice_points().unwrap(),
            4
        );
    }

    #[test]
    fn primitive_partner_worked_example() {
        let u = LatticeVector::new(173, 16);
        let w = u.primitive_partner().unwrap();
        assert_eq!(w, LatticeVector::new(54, 5));
        assert_eq!(u.cross(w), 1);
    }

    #[test]
    fn primitive_partner_standard_basis() {
        assert_eq!(
            LatticeVector::new(1, 0).primitive_partner().unwrap(),
            LatticeVector::new(0, 1)
        );
    }

    #[test]
    fn primitive_partner_canonical_small_case() {
        // oracle: exhaust 0 <= w.x < 3 for u = (3, 2)
        let u = LatticeVector::new(3, 2);
        let mut found = None;
        for wx in 0..3i64 {
            for wy in -10..=10i64 {
                if u.cross(LatticeVector::new(wx, wy)) == 1 {
                    found = Some(LatticeVector::new(wx, wy));
                }
            }
        }
        assert_eq!(found, Some(LatticeVector::new(1, 1)));
        assert_eq!(u.primitive_partner().unwrap(), LatticeVector::new(1, 1));
    }

    #[test]
    fn primitive_partner_rejects_non_simple() {
        assert_eq!(
            LatticeVector::new(6, 4).primitive_partner(),
            Err(Error::NotSimple(6, 4, 2))
        );
    }

    #[test]
    fn primitive_partner_axis_and_negative_cases() {
        for u in [
            LatticeVector::new(0, 1),
            LatticeVector::new(0, -1),
            LatticeVector::new(-1, 0),
            LatticeVector::new(-3, 2),
            LatticeVector::new(5, -7),
        ] {
            let w = u.primitive_partner().unwrap();
            assert_eq!(u.cross(w), 1, "u = {u}");
            if u.x != 0 {
                assert!(0 <= w.x && w.x < u.x.abs());
            } else {
                assert!(0 <= w.y && w.y < u.y.abs());
            }
        }
    }

    #[test]
    fn all_partners_worked_example() {
        let u = LatticeVector::new(173, 16);
        let partners = u.all_partners(2).unwrap();
        assert_eq!(partners.len(), 4);
        for &w in &[
            LatticeVector::new(54, 5),
            LatticeVector::new(-54, -5),
            LatticeVector::new(119, 11),
            LatticeVector::new(-119, -11),
        ] {
            assert!(partners.contains(&w), "missing {w}");
        }
        for w in partners {
            assert_eq!(u.cross(w).unsigned_abs(), 1);
        }
    }

    #[test]
    fn all_partners_unit_vector() {
        let partners = LatticeVector::new(1, 0).all_partners(1).unwrap();
        assert_eq!(
            partners,
            vec![LatticeVector::new(0, 1), LatticeVector::new(0, -1)]
        );
    }

    #[test]
    fn all_partners_all_unimodular() {
        let u = LatticeVector::new(3, 2);
        let partners = u.all_partners(3).unwrap();
        assert_eq!(partners.len(), 6);
        for w in partners {
            assert_eq!(u.cross(w).unsigned_abs(), 1);
        }
    }

    #[test]
    fn unimodular_checks() {
        assert!(BasisChange::new(1, 0, 0, 1).is_unimodular());
        assert!(BasisChange::new(2, 1, 1, 1).is_unimodular());
        assert!(!BasisChange::new(2, 0, 0, 2).is_unimodular());
    }

    #[test]
    fn minimal_triangle_examples() {
        // oracle: brute force over |alpha|, |beta| <= 10 for the base (6, 4)
        let base = LatticeVector::new(6, 4);
        let mut best = u64::MAX;
        for ax in -10i64..=10 {
            for ay in -10i64..=10 {
                let c = base.cross(LatticeVector::new(ax, ay)).unsigned_abs() as u64;
                if c > 0 {
                    best = best.min(c);
                }
            }
        }
        assert_eq!(best, 2);
        let (apex, twice) = minimal_triangle(6, 4).unwrap();
        assert_eq!(twice, 2);
        assert_eq!(base.cross(apex).unsigned_abs(), 2);
        assert_eq!(apex, LatticeVector::new(1, 1));

        assert_eq!(
            minimal_triangle(1, 0).unwrap(),
            (LatticeVector::new(0, 1), 1)
        );
        assert_eq!(minimal_triangle(173, 16).unwrap().1, 1);
        assert_eq!(minimal_triangle(0, 0), Err(Error::ZeroVector));
    }

    #[test]
    fn partner_of_partner_stays_simple() {
        // det(u, w) = 1 forces w simple; spot-check the derived fact
        for u in [LatticeVector::new(173, 16), LatticeVector::new(3, 2)] {
            let w = u.primitive_partner().unwrap();
            assert!(w.is_simple().unwrap());
        }
    }
}
