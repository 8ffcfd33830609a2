//! The two graded algebras the cube construction is built on, given by
//! structure constants on monomial bases, plus a verifier for every
//! relation the commutativity of the cubes depends on.
//!
//! The circle algebra is Z[√3][x]/(x³) with basis 1, x, x², graded
//! deg xⁱ = 1−i, carrying a Frobenius structure and a "half genus"
//! endomorphism h = multiplication by √3·x, so that h² = mΔ. The counting
//! algebra is Z[√3][y]/(y²) with deg 1 = 0, deg y = 1; it only ever gets
//! tensored in with a fresh unit factor.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{QuadInt, QuadMatrix};

/// Dimension of the circle algebra as a free Z[√3]-module.
pub(crate) const M_RANK: usize = 3;

/// deg xᵃ in the circle algebra.
pub(crate) fn m_degree(a: u8) -> i64 {
    1 - a as i64
}

/// x^a · x^b, truncated above x².
pub(crate) fn mult_exp(a: u8, b: u8) -> Option<u8> {
    let s = a + b;
    (s <= 2).then_some(s)
}

/// Δ(xᵃ) as pairs of exponents, every coefficient 1.
pub(crate) fn comult_exp(a: u8) -> &'static [(u8, u8)] {
    match a {
        0 => &[(0, 2), (1, 1), (2, 0)],
        1 => &[(1, 2), (2, 1)],
        2 => &[(2, 2)],
        _ => unreachable!("exponent out of range"),
    }
}

/// h(xᵃ) = √3·x^(a+1); the caller multiplies in the √3.
pub(crate) fn half_exp(a: u8) -> Option<u8> {
    (a < 2).then_some(a + 1)
}

/// ε(xᵃ): 1 on x², 0 otherwise.
fn trace_exp(a: u8) -> QuadInt {
    if a == 2 {
        QuadInt::one()
    } else {
        QuadInt::zero()
    }
}

fn mult_matrix() -> QuadMatrix {
    let mut m = QuadMatrix::zeros(3, 9);
    for a in 0..3u8 {
        for b in 0..3u8 {
            if let Some(s) = mult_exp(a, b) {
                m.set(s as usize, (3 * a + b) as usize, QuadInt::one());
            }
        }
    }
    m
}

fn comult_matrix() -> QuadMatrix {
    let mut m = QuadMatrix::zeros(9, 3);
    for a in 0..3u8 {
        for &(p, q) in comult_exp(a) {
            m.set((3 * p + q) as usize, a as usize, QuadInt::one());
        }
    }
    m
}

fn half_matrix() -> QuadMatrix {
    let mut m = QuadMatrix::zeros(3, 3);
    for a in 0..3u8 {
        if let Some(b) = half_exp(a) {
            m.set(b as usize, a as usize, QuadInt::sqrt3());
        }
    }
    m
}

fn unit_matrix() -> QuadMatrix {
    let mut m = QuadMatrix::zeros(3, 1);
    m.set(0, 0, QuadInt::one());
    m
}

fn trace_matrix() -> QuadMatrix {
    let mut m = QuadMatrix::zeros(1, 3);
    for a in 0..3u8 {
        m.set(0, a as usize, trace_exp(a));
    }
    m
}

fn swap_matrix() -> QuadMatrix {
    let mut m = QuadMatrix::zeros(9, 9);
    for a in 0..3 {
        for b in 0..3 {
            m.set(3 * b + a, 3 * a + b, QuadInt::one());
        }
    }
    m
}

/// Outcome of one verified identity. `counterexample` names the first
/// basis column where the two sides differ.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: &'static str,
    pub ok: bool,
    pub counterexample: Option<String>,
}

fn check(name: &'static str, lhs: &QuadMatrix, rhs: &QuadMatrix) -> RelationCheck {
    debug_assert_eq!((lhs.rows(), lhs.cols()), (rhs.rows(), rhs.cols()));
    for c in 0..lhs.cols() {
        for r in 0..lhs.rows() {
            if lhs.get(r, c) != rhs.get(r, c) {
                return RelationCheck {
                    name,
                    ok: false,
                    counterexample: Some(format!(
                        "basis column {c}: row {r} gives {} vs {}",
                        lhs.get(r, c),
                        rhs.get(r, c)
                    )),
                };
            }
        }
    }
    RelationCheck { name, ok: true, counterexample: None }
}

/// Verify every identity the cube commutativity proof leans on, on the
/// full monomial basis: unit/counit, (co)associativity, (co)commutativity,
/// the Frobenius relation, h² = mΔ and the four puncture moves.
pub fn verify_frobenius_relations() -> Vec<RelationCheck> {
    let m = mult_matrix();
    let d = comult_matrix();
    let h = half_matrix();
    let u = unit_matrix();
    let e = trace_matrix();
    let id = QuadMatrix::identity(3);
    let swap = swap_matrix();

    let mut out = vec![
        check("unit, left", &m.mul(&u.kronecker(&id)), &id),
        check("unit, right", &m.mul(&id.kronecker(&u)), &id),
        check("counit, left", &e.kronecker(&id).mul(&d), &id),
        check("counit, right", &id.kronecker(&e).mul(&d), &id),
        check("associativity", &m.mul(&m.kronecker(&id)), &m.mul(&id.kronecker(&m))),
        check("coassociativity", &d.kronecker(&id).mul(&d), &id.kronecker(&d).mul(&d)),
        check("commutativity", &m.mul(&swap), &m),
        check("cocommutativity", &swap.mul(&d), &d),
    ];

    let dm = d.mul(&m);
    out.push(check("Frobenius, left", &id.kronecker(&m).mul(&d.kronecker(&id)), &dm));
    out.push(check("Frobenius, right", &m.kronecker(&id).mul(&id.kronecker(&d)), &dm));

    out.push(check("half genus squared", &h.mul(&h), &m.mul(&d)));

    let hm = h.mul(&m);
    out.push(check("puncture move, into left leg", &m.mul(&h.kronecker(&id)), &hm));
    out.push(check("puncture move, into right leg", &m.mul(&id.kronecker(&h)), &hm));
    let dh = d.mul(&h);
    out.push(check("puncture move, out of left leg", &h.kronecker(&id).mul(&d), &dh));
    out.push(check("puncture move, out of right leg", &id.kronecker(&h).mul(&d), &dh));
    out
}

/// True when every relation holds.
pub fn frobenius_relations_hold() -> bool {
    verify_frobenius_relations().iter().all(|c| c.ok)
}
