//! Farey sequences: all reduced fractions in [0, 1] with bounded
//! denominator, in ascending order, plus the neighbor identity, mediants,
//! and the bridge from neighbor pairs to primitive lattice cells.

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use std::cmp::Ordering;
use std::fmt;

/// Largest accepted sequence order; |F_n| grows like 3n²/π², so this caps
/// memory at a few hundred million entries.
pub const MAX_ORDER: u32 = 1_000_000;

/// A reduced proper fraction num/den with 0 <= num <= den.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: u64,
    den: u64,
}

impl Fraction {
    /// Reduces on construction. Panics on a zero denominator or an
    /// improper fraction (num > den).
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "denominator must be positive");
        assert!(num <= den, "fraction must lie in [0, 1]");
        let g = crate::lattice::gcd(num as i64, den as i64);
        Fraction {
            num: num / g,
            den: den / g,
        }
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// The Farey sequence of order n: every reduced p/q with 0 <= p <= q <= n,
/// ascending. Runs the next-term recurrence from the seed pair 0/1, 1/n,
/// which is O(|F_n|) time and constant extra space per step.
///
/// Panics if n = 0; orders above [`MAX_ORDER`] are refused.
pub fn farey_sequence(n: u32) -> Result<Vec<Fraction>> {
    assert!(n >= 1, "sequence order must be at least 1");
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n as u64, MAX_ORDER as u64));
    }
    let n = n as u64;
    let mut out = vec![Fraction { num: 0, den: 1 }];
    let (mut a, mut b, mut c, mut d) = (0u64, 1u64, 1u64, n);
    while c <= n {
        out.push(Fraction { num: c, den: d });
        let k = (n + b) / d;
        (a, b, c, d) = (c, d, k * c - a, k * d - b);
    }
    Ok(out)
}

/// Checks the neighbor identity bc - ad = 1 for every adjacent pair
/// a/b < c/d of the given sequence.
pub fn verify_neighbors(seq: &[Fraction]) -> bool {
    seq.windows(2)
        .all(|w| w[1].num as u128 * w[0].den as u128 == 1 + w[0].num as u128 * w[1].den as u128)
}

/// The mediant (a+c)/(b+d) of two ordered fractions, reduced. It always
/// lies strictly between them; for Farey neighbors it is already reduced
/// and is the first fraction to appear between the pair.
pub fn mediant(lo: Fraction, hi: Fraction) -> Result<Fraction> {
    if lo >= hi {
        return Err(Error::NotOrdered);
    }
    Ok(Fraction::new(lo.num + hi.num, lo.den + hi.den))
}

/// Maps a Farey neighbor pair a/b < c/d to the lattice vectors (b, a) and
/// (d, c). The neighbor identity makes their determinant exactly 1, so
/// the pair spans a primitive cell.
pub fn neighbor_to_cell(lo: Fraction, hi: Fraction) -> Result<(LatticeVector, LatticeVector)> {
    let det = hi.num as i128 * lo.den as i128 - lo.num as i128 * hi.den as i128;
    if det != 1 {
        return Err(Error::NotNeighbors);
    }
    Ok((
        LatticeVector::new(lo.den as i64, lo.num as i64),
        LatticeVector::new(hi.den as i64, hi.num as i64),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(num: u64, den: u64) -> Fraction {
        Fraction::new(num, den)
    }

    /// Oracle: enumerate every reduced fraction with den <= n and sort.
    fn farey_by_enumeration(n: u64) -> Vec<Fraction> {
        let mut all = vec![];
        for den in 1..=n {
            for num in 0..=den {
                if crate::lattice::gcd(num as i64, den as i64) == 1 {
                    all.push(frac(num, den));
                }
            }
        }
        all.sort();
        all.dedup();
        all
    }

    #[test]
    fn order_one() {
        assert_eq!(farey_sequence(1).unwrap(), vec![frac(0, 1), frac(1, 1)]);
    }

    #[test]
    fn order_five_matches_enumeration() {
        let expected: Vec<Fraction> = [
            (0, 1),
            (1, 5),
            (1, 4),
            (1, 3),
            (2, 5),
            (1, 2),
            (3, 5),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 1),
        ]
        .iter()
        .map(|&(p, q)| frac(p, q))
        .collect();
        assert_eq!(farey_by_enumeration(5), expected);
        assert_eq!(farey_sequence(5).unwrap(), expected);
    }

    #[test]
    fn order_100_length_from_totient_sieve() {
        // oracle: |F_n| = 1 + sum of Euler's totient over 1..=n
        let n = 100usize;
        let mut phi: Vec<usize> = (0..=n).collect();
        for p in 2..=n {
            if phi[p] == p {
                let mut m = p;
                while m <= n {
                    phi[m] -= phi[m] / p;
                    m += p;
                }
            }
        }
        let expected_len = 1 + phi[1..=n].iter().sum::<usize>();
        assert_eq!(expected_len, 3045);
        assert_eq!(farey_sequence(100).unwrap().len(), 3045);
    }

    #[test]
    fn neighbor_identity_holds_and_detects_tampering() {
        let f5 = farey_sequence(5).unwrap();
        assert!(verify_neighbors(&f5));
        // 1/3 and 2/5 are adjacent: 3*2 - 1*5 = 1
        let i = f5.iter().position(|&f| f == frac(1, 3)).unwrap();
        assert_eq!(f5[i + 1], frac(2, 5));
        assert!(verify_neighbors(&farey_sequence(1).unwrap()));
        assert!(!verify_neighbors(&[frac(0, 1), frac(1, 2), frac(1, 3)]));
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(mediant(frac(0, 1), frac(1, 1)).unwrap(), frac(1, 2));
        let m = mediant(frac(1, 3), frac(2, 5)).unwrap();
        assert_eq!(m, frac(3, 8));
        assert!(frac(1, 3) < m && m < frac(2, 5));
        // first fraction to appear between 1/2 and 1/1 shows up in F_3
        let m = mediant(frac(1, 2), frac(1, 1)).unwrap();
        assert_eq!(m, frac(2, 3));
        assert!(farey_sequence(3).unwrap().contains(&m));
        assert!(!farey_sequence(2).unwrap().contains(&m));
        assert_eq!(mediant(frac(1, 2), frac(1, 2)), Err(Error::NotOrdered));
        assert_eq!(mediant(frac(2, 3), frac(1, 3)), Err(Error::NotOrdered));
    }

    #[test]
    fn neighbor_cells_are_primitive() {
        let (u, v) = neighbor_to_cell(frac(1, 3), frac(2, 5)).unwrap();
        assert_eq!((u, v), (LatticeVector::new(3, 1), LatticeVector::new(5, 2)));
        assert_eq!(u.cross(v).unsigned_abs(), 1);

        let (u, v) = neighbor_to_cell(frac(0, 1), frac(1, 1)).unwrap();
        assert_eq!((u, v), (LatticeVector::new(1, 0), LatticeVector::new(1, 1)));
        assert_eq!(u.cross(v), 1);

        let (u, v) = neighbor_to_cell(frac(1, 2), frac(2, 3)).unwrap();
        assert_eq!(u.cross(v).unsigned_abs(), 1);

        assert_eq!(
            neighbor_to_cell(frac(1, 3), frac(3, 5)),
            Err(Error::NotNeighbors)
        );
    }

    #[test]
    fn refuses_oversized_order() {
        assert_eq!(
            farey_sequence(MAX_ORDER + 1),
            Err(Error::TooLarge(MAX_ORDER as u64 + 1, MAX_ORDER as u64))
        );
    }
}
