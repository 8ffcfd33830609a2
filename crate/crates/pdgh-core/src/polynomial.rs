//! The partial-dual genus polynomial and its grading by subset size.
//!
//! For a ribbon graph G the polynomial sums z^(Euler genus of the partial
//! dual) over all edge subsets. Two evaluation routes are kept separate on
//! purpose: the fast one traces boundary circles of spanning subgraphs in
//! G itself, the slow one actually builds every partial dual and measures
//! it. They must agree, and the test suites hold them against each other.

use core::fmt;

use num_bigint::BigInt;

use crate::algebra::{BiLaurent, LaurentPoly};
use crate::ribbon::{EdgeSet, RibbonGraph};

/// Subset enumeration refused: 2^|E| terms would be too many.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapExceeded {
    pub edges: usize,
    pub cap: usize,
}

impl fmt::Display for CapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph has {} edges, cap is {} (override to proceed)", self.edges, self.cap)
    }
}

impl core::error::Error for CapExceeded {}

/// How to obtain the Euler genus of each partial dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Count boundary circles of the spanning subgraphs on A and on its
    /// complement; the genus of G^A is 2c + |E| − |F(A)| − |F(A^c)|.
    Faces,
    /// Construct G^A itself and read its Euler genus off. Slower by an
    /// edge factor; exists as an independent witness for `Faces`.
    Duals,
}

pub const FACES_EDGE_CAP: usize = 20;
pub const DUALS_EDGE_CAP: usize = 12;

impl Mode {
    pub fn default_cap(self) -> usize {
        match self {
            Mode::Faces => FACES_EDGE_CAP,
            Mode::Duals => DUALS_EDGE_CAP,
        }
    }
}

fn check_cap(g: &RibbonGraph, cap: usize) -> Result<(), CapExceeded> {
    if g.edge_count() > cap {
        return Err(CapExceeded { edges: g.edge_count(), cap });
    }
    Ok(())
}

/// Σ_A w^|A| z^(−|F(A)|−|F(A^c)|), the shift-free core of the graded
/// polynomial: multiplying by z^(2c+|E|) turns it into
/// [`graded_pd_genus_polynomial`].
pub fn e_tilde(g: &RibbonGraph) -> Result<BiLaurent, CapExceeded> {
    e_tilde_with_cap(g, FACES_EDGE_CAP)
}

pub fn e_tilde_with_cap(g: &RibbonGraph, cap: usize) -> Result<BiLaurent, CapExceeded> {
    check_cap(g, cap)?;
    let n = g.edge_count();
    let fs = g.flag_system();
    let faces: alloc::vec::Vec<i64> = EdgeSet::all(n).map(|a| fs.face_count(a) as i64).collect();
    let mut out = BiLaurent::zero(["w", "z"]);
    for a in EdgeSet::all(n) {
        let fc = faces[a.bits() as usize] + faces[a.complement(n).bits() as usize];
        out.add_term((a.len() as i64, -fc), BigInt::from(1));
    }
    Ok(out)
}

/// Σ_A w^|A| z^(Euler genus of G^A) in the variables (w, z).
pub fn graded_pd_genus_polynomial(g: &RibbonGraph, mode: Mode) -> Result<BiLaurent, CapExceeded> {
    graded_pd_genus_polynomial_with_cap(g, mode, mode.default_cap())
}

pub fn graded_pd_genus_polynomial_with_cap(
    g: &RibbonGraph,
    mode: Mode,
    cap: usize,
) -> Result<BiLaurent, CapExceeded> {
    match mode {
        Mode::Faces => {
            let shift = 2 * g.component_count() as i64 + g.edge_count() as i64;
            Ok(e_tilde_with_cap(g, cap)?.mul_monomial(&BigInt::from(1), (0, shift)))
        }
        Mode::Duals => {
            check_cap(g, cap)?;
            let mut out = BiLaurent::zero(["w", "z"]);
            for a in EdgeSet::all(g.edge_count()) {
                out.add_term((a.len() as i64, g.partial_dual(a).euler_genus()), BigInt::from(1));
            }
            Ok(out)
        }
    }
}

/// Σ_A z^(Euler genus of G^A): the graded polynomial at w = 1.
pub fn pd_genus_polynomial(g: &RibbonGraph, mode: Mode) -> Result<LaurentPoly, CapExceeded> {
    pd_genus_polynomial_with_cap(g, mode, mode.default_cap())
}

pub fn pd_genus_polynomial_with_cap(
    g: &RibbonGraph,
    mode: Mode,
    cap: usize,
) -> Result<LaurentPoly, CapExceeded> {
    Ok(graded_pd_genus_polynomial_with_cap(g, mode, cap)?.specialize_one(0))
}

/// Whether every partial dual of `g` has the same ungraded polynomial.
/// True for every ribbon graph; false would mean a bug. Costs 2^|E|
/// polynomial evaluations, hence the explicit cap.
pub fn partial_duals_agree(g: &RibbonGraph, cap: usize) -> Result<bool, CapExceeded> {
    let base = pd_genus_polynomial_with_cap(g, Mode::Faces, cap)?;
    for a in EdgeSet::all(g.edge_count()) {
        if pd_genus_polynomial_with_cap(&g.partial_dual(a), Mode::Faces, cap)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}
