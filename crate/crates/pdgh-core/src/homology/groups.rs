//! Cohomology of the cube complex and the checks tying it back to the
//! genus polynomial.
//!
//! Everything happens blockwise: within one (j, k) block the groups are
//! cokernels of maps between free Z[√3]-modules, so Smith normal form
//! gives free ranks and torsion at once. The graded Euler characteristic
//! Σ (−1)^i (free rank) p^j q^k equals the one read off the cochain ranks,
//! and substituting w = −q²(1+p), z = (q⁻¹+1+q)⁻¹ into the graded genus
//! polynomial produces the same series; [`e_tilde_from_euler`] inverts
//! that substitution.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::algebra::{BiLaurent, LaurentPoly, TorsionIdeal, VarImage};
use crate::polynomial::{e_tilde_with_cap, CapExceeded};
use crate::ribbon::RibbonGraph;

use super::complex::{build_complex_with_cap, BlockComplex, Complex, HOMOLOGY_EDGE_CAP};
use super::reduce::rank_and_torsion;

/// One cohomology group: free rank and torsion quotients, the latter
/// ordered by divisibility as Smith normal form produces them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupEntry {
    pub free: usize,
    pub torsion: Vec<TorsionIdeal>,
}

/// All nonzero groups, keyed by (cohomological degree i, j, k).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedGroups {
    edges: usize,
    groups: BTreeMap<(usize, i64, i64), GroupEntry>,
}

impl BigradedGroups {
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn get(&self, i: usize, j: i64, k: i64) -> Option<&GroupEntry> {
        self.groups.get(&(i, j, k))
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, i64, i64), &GroupEntry)> {
        self.groups.iter().map(|(&key, entry)| (key, entry))
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    /// Σ (−1)^i (free rank) p^j q^k. Torsion has rank zero and drops out.
    pub fn euler_characteristic(&self) -> BiLaurent {
        let mut out = BiLaurent::zero(["p", "q"]);
        for (&(i, j, k), entry) in &self.groups {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out.add_term((j, k), BigInt::from(sign * entry.free as i64));
        }
        out
    }

    /// Reassemble from per-block results, e.g. after computing blocks on
    /// several workers. Zero entries are dropped.
    pub fn from_entries(
        edges: usize,
        entries: impl IntoIterator<Item = ((usize, i64, i64), GroupEntry)>,
    ) -> Self {
        let groups =
            entries.into_iter().filter(|(_, e)| e.free > 0 || !e.torsion.is_empty()).collect();
        BigradedGroups { edges, groups }
    }
}

pub fn bigraded_homology(g: &RibbonGraph) -> Result<BigradedGroups, CapExceeded> {
    bigraded_homology_with_cap(g, HOMOLOGY_EDGE_CAP)
}

pub fn bigraded_homology_with_cap(
    g: &RibbonGraph,
    cap: usize,
) -> Result<BigradedGroups, CapExceeded> {
    Ok(homology_of(&build_complex_with_cap(g, cap)?))
}

pub fn homology_of(c: &Complex) -> BigradedGroups {
    let mut groups = BTreeMap::new();
    for (&(j, k), block) in c.blocks() {
        for (i, entry) in block_homology(block) {
            groups.insert((i, j, k), entry);
        }
    }
    BigradedGroups { edges: c.edge_count(), groups }
}

/// The nonzero groups of one (j, k) block, as (level, group) pairs.
/// Independent across blocks, so callers may fan blocks out to workers.
pub fn block_homology(block: &BlockComplex) -> Vec<(usize, GroupEntry)> {
    let n = block.dims().len() - 1;
    let reduced: Vec<_> = (0..n).map(|i| rank_and_torsion(block.map(i))).collect();
    let mut out = Vec::new();
    for (i, &dim) in block.dims().iter().enumerate() {
        let rank_out = if i < n { reduced[i].rank } else { 0 };
        let rank_in = if i > 0 { reduced[i - 1].rank } else { 0 };
        let free = dim as i64 - rank_out as i64 - rank_in as i64;
        assert!(free >= 0, "image exceeds kernel; differential is broken");
        let torsion: Vec<TorsionIdeal> = if i > 0 {
            reduced[i - 1].torsion_diag.iter().map(TorsionIdeal::new).collect()
        } else {
            Vec::new()
        };
        if free > 0 || !torsion.is_empty() {
            out.push((i, GroupEntry { free: free as usize, torsion }));
        }
    }
    out
}

/// Reads the subset-sum polynomial back off a cube Euler characteristic:
/// substituting p = −1 − wq⁻² turns −q²(1+p) back into w, each power of w
/// is then expanded in powers of q⁻¹+1+q, and the power s becomes the
/// z-exponent −s. Returns None when the series is not of that shape.
pub fn e_tilde_from_euler(chi: &BiLaurent) -> Option<BiLaurent> {
    let mut p_image = BiLaurent::zero(["w", "q"]);
    p_image.add_term((0, 0), BigInt::from(-1));
    p_image.add_term((1, -2), BigInt::from(-1));
    let q_image = VarImage::both(
        BiLaurent::monomial(["w", "q"], 1, (0, 1)),
        BiLaurent::monomial(["w", "q"], 1, (0, -1)),
    );
    let in_wq = chi.substitute([&VarImage::direct(p_image), &q_image], ["w", "q"]).ok()?;

    let mut base = LaurentPoly::zero();
    for e in [-1, 0, 1] {
        base.add_term(e, BigInt::from(1));
    }
    let mut out = BiLaurent::zero(["w", "z"]);
    for (m, slice) in in_wq.by_first_var() {
        for (s, lambda) in slice.expand_in_powers(&base)? {
            out.add_term((m, -s), lambda);
        }
    }
    Some(out)
}

/// The identities connecting complex, cohomology and polynomial for one
/// graph. All four hold for every ribbon graph; a false field means a bug.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    /// Consecutive differentials compose to zero.
    pub differential_squares_to_zero: bool,
    /// Cochain-level and cohomology-level Euler characteristics agree.
    pub euler_levels_agree: bool,
    /// Substituting w = −q²(1+p), z = (q⁻¹+1+q)⁻¹ into the graded genus
    /// polynomial yields the Euler characteristic.
    pub substitution_matches: bool,
    /// [`e_tilde_from_euler`] recovers the subset-sum polynomial.
    pub expansion_recovers: bool,
}

impl TheoremCheck {
    pub fn all_hold(&self) -> bool {
        self.differential_squares_to_zero
            && self.euler_levels_agree
            && self.substitution_matches
            && self.expansion_recovers
    }
}

pub fn check_theorem(g: &RibbonGraph) -> Result<TheoremCheck, CapExceeded> {
    check_theorem_with_cap(g, HOMOLOGY_EDGE_CAP)
}

pub fn check_theorem_with_cap(g: &RibbonGraph, cap: usize) -> Result<TheoremCheck, CapExceeded> {
    let c = build_complex_with_cap(g, cap)?;
    let chi_cochain = c.euler_characteristic();
    let groups = homology_of(&c);
    let chi_homology = groups.euler_characteristic();
    let et = e_tilde_with_cap(g, cap)?;

    let mut w_image = BiLaurent::zero(["p", "q"]);
    w_image.add_term((0, 2), BigInt::from(-1));
    w_image.add_term((1, 2), BigInt::from(-1));
    let mut t = BiLaurent::zero(["p", "q"]);
    for e in [-1, 0, 1] {
        t.add_term((0, e), BigInt::from(1));
    }
    let substituted = et
        .substitute([&VarImage::direct(w_image), &VarImage::inverse(t)], ["p", "q"])
        .expect("z only occurs with negative exponents");

    Ok(TheoremCheck {
        differential_squares_to_zero: c.d_squared_is_zero(),
        euler_levels_agree: chi_cochain == chi_homology,
        substitution_matches: substituted == chi_cochain,
        expansion_recovers: e_tilde_from_euler(&chi_homology).as_ref() == Some(&et),
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

/// Whether cohomology is independent of the edge numbering. Tries every
/// permutation up to 4 edges; beyond that only adjacent transpositions,
/// which generate the rest.
pub fn reorder_invariant(g: &RibbonGraph) -> Result<bool, CapExceeded> {
    reorder_invariant_with_cap(g, HOMOLOGY_EDGE_CAP)
}

pub fn reorder_invariant_with_cap(g: &RibbonGraph, cap: usize) -> Result<bool, CapExceeded> {
    let n = g.edge_count();
    let base = bigraded_homology_with_cap(g, cap)?;
    let orders: Vec<Vec<usize>> = if n <= 4 {
        permutations(n)
    } else {
        (0..n - 1)
            .map(|t| {
                let mut o: Vec<usize> = (0..n).collect();
                o.swap(t, t + 1);
                o
            })
            .collect()
    };
    for order in orders {
        if bigraded_homology_with_cap(&g.with_edge_order(&order), cap)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}
