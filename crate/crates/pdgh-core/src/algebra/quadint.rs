//! The ring Z[√3].
//!
//! Z[√3] is norm-Euclidean: rounding both coordinates of the exact quotient
//! in Q(√3) to nearest integers leaves a remainder of fractional norm at most
//! 3/4, so the usual Euclidean algorithm (and with it gcd and Smith normal
//! form) works. The unit group is infinite, generated by −1 and 2+√3; every
//! sensible notion of "canonical" element must therefore normalize units,
//! see [`QuadInt::canonical_associate`].

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element a + b√3 of Z[√3]. Arithmetic is exact; coordinates are
/// arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    a: BigInt,
    b: BigInt,
}

impl QuadInt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        QuadInt { a: a.into(), b: b.into() }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        QuadInt { a: n.into(), b: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    /// √3 itself.
    pub fn sqrt3() -> Self {
        Self::new(0, 1)
    }

    /// The fundamental unit 2+√3.
    pub fn fundamental_unit() -> Self {
        Self::new(2, 1)
    }

    /// Rational part.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of √3.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Field norm a² − 3b². Multiplicative; zero only at zero.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(3) * &self.b * &self.b
    }

    /// A nonzero element is a unit iff its norm is ±1.
    pub fn is_unit(&self) -> bool {
        self.norm().abs().is_one()
    }

    /// Galois conjugate a − b√3.
    pub fn conj(&self) -> Self {
        QuadInt { a: self.a.clone(), b: -&self.b }
    }

    /// Sign of the real embedding a + b·1.732… , computed exactly.
    ///
    /// For mixed coordinate signs the comparison a ≷ −b√3 squares both
    /// sides; equality cannot occur away from zero since √3 is irrational.
    pub fn signum(&self) -> Ordering {
        match (self.a.sign(), self.b.sign()) {
            (num_bigint::Sign::NoSign, num_bigint::Sign::NoSign) => Ordering::Equal,
            (num_bigint::Sign::Minus, num_bigint::Sign::NoSign)
            | (num_bigint::Sign::NoSign, num_bigint::Sign::Minus)
            | (num_bigint::Sign::Minus, num_bigint::Sign::Minus) => Ordering::Less,
            (num_bigint::Sign::Plus, num_bigint::Sign::NoSign)
            | (num_bigint::Sign::NoSign, num_bigint::Sign::Plus)
            | (num_bigint::Sign::Plus, num_bigint::Sign::Plus) => Ordering::Greater,
            (num_bigint::Sign::Plus, num_bigint::Sign::Minus) => {
                // a + b√3 > 0  ⟺  a² > 3b²
                self.norm().cmp(&BigInt::zero())
            }
            (num_bigint::Sign::Minus, num_bigint::Sign::Plus) => {
                // a + b√3 > 0  ⟺  3b² > a²
                BigInt::zero().cmp(&self.norm())
            }
        }
    }

    /// Euclidean division: returns (q, r) with self = q·d + r and
    /// |norm(r)| < |norm(d)|. The quotient rounds both coordinates of the
    /// exact quotient in Q(√3) to nearest integers, ties to even.
    ///
    /// Panics if `d` is zero.
    pub fn divmod(&self, d: &QuadInt) -> (QuadInt, QuadInt) {
        assert!(!d.is_zero(), "division by zero in Z[\u{221a}3]");
        // self/d = self·conj(d) / norm(d), coordinatewise over Q.
        let num = self * &d.conj();
        let den = d.norm();
        let q = QuadInt { a: round_div(&num.a, &den), b: round_div(&num.b, &den) };
        let r = self - &(&q * d);
        debug_assert!(r.norm().abs() < d.norm().abs());
        (q, r)
    }

    /// True iff `self` divides `other` exactly.
    pub fn divides(&self, other: &QuadInt) -> bool {
        !self.is_zero() && other.divmod(self).1.is_zero()
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &QuadInt) -> QuadInt {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Greatest common divisor as the canonical generator of the ideal
    /// (x, y). Returns zero only when both inputs are zero.
    pub fn gcd(x: &QuadInt, y: &QuadInt) -> QuadInt {
        let mut u = x.clone();
        let mut v = y.clone();
        while !v.is_zero() {
            let r = u.divmod(&v).1;
            u = v;
            v = r;
        }
        u.canonical_associate()
    }

    /// The canonical representative among the associates {±(2+√3)^k · self}.
    ///
    /// It is the unique associate g with σ(g) > 0 and
    /// |N| ≤ σ(g)² < |N|·σ(2+√3)², where σ is the real embedding and
    /// N the norm; both comparisons are carried out exactly inside Z[√3].
    /// Depending only on the ideal, this is what makes Smith normal form
    /// diagonals and torsion generators comparable.
    pub fn canonical_associate(&self) -> QuadInt {
        if self.is_zero() {
            return QuadInt::zero();
        }
        let mut g = if self.signum() == Ordering::Less { -self } else { self.clone() };
        let n = QuadInt { a: self.norm().abs(), b: BigInt::zero() };
        let eps = QuadInt::fundamental_unit();
        let eps_inv = QuadInt::new(2, -1);
        let upper = &n * &QuadInt::new(7, 4); // |N|·σ(ε²), ε² = 7+4√3
        loop {
            let g2 = &g * &g; // σ(g²) = σ(g)² > 0
            if (&g2 - &n).signum() == Ordering::Less {
                g = &g * &eps;
            } else if (&g2 - &upper).signum() != Ordering::Less {
                g = &g * &eps_inv;
            } else {
                return g;
            }
        }
    }
}

/// Nearest-integer division n/d, ties to even.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (n, d) = if d.is_negative() { (-n, -d) } else { (n.clone(), d.clone()) };
    let (q, r) = n.div_mod_floor(&d);
    // 0 ≤ r < d; round up when 2r > d, and on ties when q is odd.
    let twice: BigInt = &r * 2;
    match twice.cmp(&d) {
        Ordering::Less => q,
        Ordering::Greater => q + 1,
        Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1
            }
        }
    }
}

impl fmt::Debug for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = |b: &BigInt| -> String {
            use alloc::string::ToString;
            if b.is_one() {
                "\u{221a}3".to_string()
            } else if (-b).is_one() {
                "-\u{221a}3".to_string()
            } else {
                alloc::format!("{b}\u{221a}3")
            }
        };
        if self.a.is_zero() {
            write!(f, "{}", root(&self.b))
        } else if self.b.is_negative() {
            write!(f, "{}-{}", self.a, root(&-&self.b))
        } else {
            write!(f, "{}+{}", self.a, root(&self.b))
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: QuadInt) -> QuadInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: &QuadInt) -> QuadInt {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadInt> for &QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: QuadInt) -> QuadInt {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}
forward_binop!(Add, add);

impl Sub<&QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        QuadInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}
forward_binop!(Sub, sub);

impl Mul<&QuadInt> for &QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        // (a₁+b₁√3)(a₂+b₂√3) = (a₁a₂+3b₁b₂) + (a₁b₂+a₂b₁)√3
        QuadInt {
            a: &self.a * &rhs.a + BigInt::from(3) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}
forward_binop!(Mul, mul);

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { a: -&self.a, b: -&self.b }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { a: -self.a, b: -self.b }
    }
}

impl AddAssign<&QuadInt> for QuadInt {
    fn add_assign(&mut self, rhs: &QuadInt) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&QuadInt> for QuadInt {
    fn sub_assign(&mut self, rhs: &QuadInt) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&QuadInt> for QuadInt {
    fn mul_assign(&mut self, rhs: &QuadInt) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(a: i64, b: i64) -> QuadInt {
        QuadInt::new(a, b)
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(qi(0, 1) * qi(0, 1), qi(3, 0));
        assert_eq!(qi(1, 1) * qi(-1, 1), qi(2, 0));
        assert_eq!(qi(2, 1) + qi(-2, -1), QuadInt::zero());
    }

    #[test]
    fn norm_and_units() {
        assert_eq!(qi(2, 1).norm(), BigInt::from(1));
        assert_eq!(qi(1, 1).norm(), BigInt::from(-2));
        assert!(qi(2, 1).is_unit());
        assert!(qi(-2, 1).is_unit());
        assert!(!qi(1, 1).is_unit());
        assert!(!QuadInt::zero().is_unit());
    }

    #[test]
    fn signum_mixed_signs() {
        assert_eq!(qi(2, -1).signum(), Ordering::Greater); // 2 > √3
        assert_eq!(qi(1, -1).signum(), Ordering::Less); // 1 < √3
        assert_eq!(qi(-1, 1).signum(), Ordering::Greater);
        assert_eq!(qi(-2, 1).signum(), Ordering::Less);
        assert_eq!(QuadInt::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn divmod_examples() {
        let (q, r) = qi(3, 0).divmod(&qi(0, 1));
        assert_eq!((q, r), (qi(0, 1), QuadInt::zero()));

        let (q, r) = qi(5, 1).divmod(&qi(1, 1));
        assert_eq!(&q * &qi(1, 1) + &r, qi(5, 1));
        assert!(r.norm().abs() < qi(1, 1).norm().abs());
        assert_eq!(q, qi(-1, 2));
        assert!(r.is_zero());

        let (q, r) = qi(1, 0).divmod(&qi(2, 0));
        assert_eq!(&q * &qi(2, 0) + &r, qi(1, 0));
        assert!(r.norm().abs() < BigInt::from(4));
    }

    #[test]
    fn round_div_ties_to_even() {
        let rd = |n: i64, d: i64| round_div(&BigInt::from(n), &BigInt::from(d));
        assert_eq!(rd(1, 2), BigInt::from(0));
        assert_eq!(rd(3, 2), BigInt::from(2));
        assert_eq!(rd(-1, 2), BigInt::from(0));
        assert_eq!(rd(-3, 2), BigInt::from(-2));
        assert_eq!(rd(7, 3), BigInt::from(2));
        assert_eq!(rd(-7, 3), BigInt::from(-2));
        assert_eq!(rd(5, -2), BigInt::from(-2));
    }

    #[test]
    fn canonical_associate_fixes_units() {
        let g = qi(0, 1); // √3 is already canonical
        assert_eq!(g.canonical_associate(), g);
        let eps = QuadInt::fundamental_unit();
        assert_eq!((&g * &eps).canonical_associate(), g);
        assert_eq!((-&g).canonical_associate(), g);
        assert_eq!((&(&g * &eps) * &eps).canonical_associate(), g);
        assert_eq!(eps.canonical_associate(), QuadInt::one());
        assert_eq!(qi(-1, 1).canonical_associate(), qi(1, 1));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(QuadInt::gcd(&qi(3, 0), &qi(0, 1)), qi(0, 1));
        assert_eq!(QuadInt::gcd(&qi(2, 0), &qi(1, 1)), qi(1, 1));
        let x = qi(5, -3);
        assert_eq!(QuadInt::gcd(&x, &QuadInt::zero()), x.canonical_associate());
        assert_eq!(QuadInt::gcd(&QuadInt::zero(), &QuadInt::zero()), QuadInt::zero());
    }
}
