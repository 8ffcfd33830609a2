//! Torsion ideals of Z[√3].
//!
//! A torsion summand Z[√3]/(g) is determined by the ideal (g), not by the
//! generator: any unit multiple generates the same quotient. The ideal is
//! identified exactly by the Hermite normal form of its lattice in the
//! integer basis (1, √3), which is what equality and ordering use.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::QuadInt;

/// The ideal (generator)·Z[√3] viewed as the torsion module
/// Z[√3]/(generator).
///
/// `hnf` is the unique basis [[d1, 0], [c, d2]] of the ideal lattice with
/// d1, d2 > 0 and 0 ≤ c < d1, rows written in coordinates (rational part,
/// √3 part). The quotient has |norm(generator)| = d1·d2 elements.
#[derive(Clone)]
pub struct TorsionIdeal {
    hnf: [[BigInt; 2]; 2],
    generator: QuadInt,
    quotient_size: BigInt,
}

impl PartialEq for TorsionIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.hnf == other.hnf
    }
}

impl Eq for TorsionIdeal {}

impl PartialOrd for TorsionIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TorsionIdeal {
    /// Ordered by quotient size first, then by the HNF entries; the
    /// generator carries no extra information once the HNF is fixed.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (&self.quotient_size, &self.hnf).cmp(&(&other.quotient_size, &other.hnf))
    }
}

impl TorsionIdeal {
    /// Panics if `g` is zero (the quotient would not be torsion).
    pub fn new(g: &QuadInt) -> Self {
        assert!(!g.is_zero(), "torsion ideal needs a nonzero generator");
        let generator = g.canonical_associate();
        let quotient_size = g.norm().abs();

        // Lattice rows g = (a, b) and √3·g = (3b, a). With xb + ya = d2
        // the rows (xa + 3yb, d2) and (|N|/d2, 0) are a basis again
        // (the change of basis has determinant ±1).
        let (a, b) = (generator.a().clone(), generator.b().clone());
        let egcd = b.extended_gcd(&a);
        let (mut d2, mut x, mut y) = (egcd.gcd, egcd.x, egcd.y);
        if d2.is_negative() {
            d2 = -d2;
            x = -x;
            y = -y;
        }
        let d1 = &quotient_size / &d2;
        let c = (x * &a + BigInt::from(3) * y * &b).mod_floor(&d1);
        TorsionIdeal { hnf: [[d1, BigInt::zero()], [c, d2]], generator, quotient_size }
    }

    /// Canonical generator of the ideal.
    pub fn generator(&self) -> &QuadInt {
        &self.generator
    }

    pub fn hnf(&self) -> &[[BigInt; 2]; 2] {
        &self.hnf
    }

    /// Number of elements of the quotient, |norm(generator)| = det(hnf).
    pub fn quotient_size(&self) -> &BigInt {
        &self.quotient_size
    }

    /// Short display name: a quotient of size n prints as `Zn`.
    pub fn name(&self) -> String {
        alloc::format!("Z{}", self.quotient_size)
    }
}

impl fmt::Debug for TorsionIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}(({}))", self.quotient_size, self.generator)
    }
}

impl fmt::Display for TorsionIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}", self.quotient_size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b)
    }

    fn hnf_i64(t: &TorsionIdeal) -> [[i64; 2]; 2] {
        let h = t.hnf();
        [
            [i64::try_from(&h[0][0]).unwrap(), i64::try_from(&h[0][1]).unwrap()],
            [i64::try_from(&h[1][0]).unwrap(), i64::try_from(&h[1][1]).unwrap()],
        ]
    }

    #[test]
    fn sqrt3_ideal() {
        let t = TorsionIdeal::new(&QuadInt::sqrt3());
        assert_eq!(t.quotient_size(), &BigInt::from(3));
        assert_eq!(hnf_i64(&t), [[3, 0], [0, 1]]);
        assert_eq!(t.name(), "Z3");
    }

    #[test]
    fn unit_invariance() {
        let g = qi(1, 1);
        let eps = QuadInt::fundamental_unit();
        let t1 = TorsionIdeal::new(&g);
        let t2 = TorsionIdeal::new(&(&g * &eps));
        let t3 = TorsionIdeal::new(&-&g);
        let t4 = TorsionIdeal::new(&(&(&g * &eps) * &eps));
        assert_eq!(t1, t2);
        assert_eq!(t1, t3);
        assert_eq!(t1, t4);
        assert_eq!(hnf_i64(&t1), [[2, 0], [1, 1]]);
    }

    #[test]
    fn determinant_is_quotient_size() {
        for (a, b) in [(2, 0), (1, 1), (0, 1), (5, 2), (4, -1), (7, 3)] {
            let g = qi(a, b);
            if g.is_zero() {
                continue;
            }
            let t = TorsionIdeal::new(&g);
            let h = t.hnf();
            let det = &h[0][0] * &h[1][1] - &h[0][1] * &h[1][0];
            assert_eq!(&det, t.quotient_size());
            assert!(h[1][0] < h[0][0] && !h[1][0].is_negative());
        }
    }

    #[test]
    fn distinct_ideals_differ() {
        assert_ne!(TorsionIdeal::new(&qi(0, 1)), TorsionIdeal::new(&qi(3, 0)));
        assert_ne!(TorsionIdeal::new(&qi(2, 0)), TorsionIdeal::new(&qi(1, 1)));
    }
}
