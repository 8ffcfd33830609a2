//! Rank and torsion of a sparse matrix over Z[√3].
//!
//! Cube differentials are large but almost entirely reducible by unit
//! pivots: eliminating at a unit entry contributes a unit to the Smith
//! diagonal, which creates no torsion, and both the row and the column of
//! the pivot disappear from the problem. Doing this directly on sparse
//! columns leaves a residue that is usually tiny (its entries all lie in
//! (√3)), and only that residue goes through the dense Smith routine.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::{smith_normal_form, QuadInt, QuadMatrix};

use super::complex::SparseMap;

/// Rank together with the non-unit, nonzero part of the Smith diagonal,
/// in divisibility order: all a cokernel computation needs.
pub(crate) struct RankAndTorsion {
    pub rank: usize,
    pub torsion_diag: Vec<QuadInt>,
}

struct Workspace {
    cols: Vec<BTreeMap<u32, QuadInt>>,
    /// Which live columns touch each row; kept in lockstep with `cols`.
    row_cols: Vec<BTreeSet<u32>>,
}

impl Workspace {
    fn new(m: &SparseMap) -> Self {
        let mut ws = Workspace {
            cols: vec![BTreeMap::new(); m.cols()],
            row_cols: vec![BTreeSet::new(); m.rows()],
        };
        for c in 0..m.cols() {
            for &(r, a, b) in m.column(c) {
                ws.cols[c].insert(r, QuadInt::new(a, b));
                ws.row_cols[r as usize].insert(c as u32);
            }
        }
        ws
    }

    /// Gaussian step at a unit entry (r, c): clear row r from every other
    /// column, then drop row r and column c. The implicit row operations
    /// that would clear column c touch nothing outside it, so dropping is
    /// all that is left of them.
    fn eliminate(&mut self, r: u32, c: u32) {
        let pivot_col = core::mem::take(&mut self.cols[c as usize]);
        let pivot = pivot_col[&r].clone();
        let others: Vec<u32> =
            self.row_cols[r as usize].iter().copied().filter(|&c2| c2 != c).collect();
        for c2 in others {
            let b = self.cols[c2 as usize][&r].clone();
            let q = b.exact_div(&pivot);
            for (&rr, v) in &pivot_col {
                let col = &mut self.cols[c2 as usize];
                let new = match col.get(&rr) {
                    Some(old) => old - &(&q * v),
                    None => -&(&q * v),
                };
                if new.is_zero() {
                    col.remove(&rr);
                    self.row_cols[rr as usize].remove(&c2);
                } else {
                    col.insert(rr, new);
                    self.row_cols[rr as usize].insert(c2);
                }
            }
            debug_assert!(!self.cols[c2 as usize].contains_key(&r));
        }
        for &rr in pivot_col.keys() {
            self.row_cols[rr as usize].remove(&c);
        }
    }

    /// Smallest-fill unit entry of one column, if any.
    fn unit_in_column(&self, c: usize) -> Option<u32> {
        self.cols[c]
            .iter()
            .filter(|(_, v)| v.is_unit())
            .min_by_key(|(r, _)| self.row_cols[**r as usize].len())
            .map(|(&r, _)| r)
    }

    /// A live entry of minimal |norm|, ties broken toward low fill.
    fn min_norm_entry(&self) -> Option<(u32, u32)> {
        let mut best: Option<(BigInt, usize, u32, u32)> = None;
        for (c, col) in self.cols.iter().enumerate() {
            for (&r, v) in col {
                let norm = v.norm().abs();
                let fill = (col.len() - 1) * (self.row_cols[r as usize].len() - 1);
                if best.as_ref().is_none_or(|(bn, bf, _, _)| (&norm, fill) < (bn, *bf)) {
                    best = Some((norm, fill, r, c as u32));
                }
            }
        }
        best.map(|(_, _, r, c)| (r, c))
    }

    fn divides_all(&self, p: &QuadInt) -> bool {
        self.cols.iter().all(|col| col.values().all(|v| p.divides(v)))
    }

    fn residue(&self) -> QuadMatrix {
        let live_cols: Vec<usize> =
            (0..self.cols.len()).filter(|&c| !self.cols[c].is_empty()).collect();
        let mut live_rows: BTreeSet<u32> = BTreeSet::new();
        for &c in &live_cols {
            live_rows.extend(self.cols[c].keys());
        }
        let row_index: BTreeMap<u32, usize> =
            live_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let mut m = QuadMatrix::zeros(live_rows.len(), live_cols.len());
        for (j, &c) in live_cols.iter().enumerate() {
            for (r, v) in &self.cols[c] {
                m.set(row_index[r], j, v.clone());
            }
        }
        m
    }
}

pub(crate) fn rank_and_torsion(m: &SparseMap) -> RankAndTorsion {
    let mut ws = Workspace::new(m);
    let mut unit_rank = 0;

    // Sweep until a whole pass finds no unit: elimination can both create
    // and consume units elsewhere, so one pass is not enough.
    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..ws.cols.len() {
            while let Some(r) = ws.unit_in_column(c) {
                ws.eliminate(r, c as u32);
                unit_rank += 1;
                progress = true;
            }
        }
    }

    // No units left. A pivot dividing every remaining entry still
    // eliminates sparsely, and its Smith-diagonal contribution is itself:
    // everything that survives stays a multiple of it, so the chain
    // condition takes care of itself and no new units appear. Twisted
    // edges produce whole blocks of this kind, all entries in (√3).
    let mut diag = Vec::new();
    while let Some((r, c)) = ws.min_norm_entry() {
        let pivot = ws.cols[c as usize][&r].clone();
        debug_assert!(!pivot.is_unit(), "unit sweep left a unit behind");
        if !ws.divides_all(&pivot) {
            break;
        }
        ws.eliminate(r, c);
        diag.push(pivot.canonical_associate());
    }

    let residue = ws.residue();
    let mut rank = unit_rank + diag.len();
    if !residue.is_zero() {
        let smith = smith_normal_form(&residue);
        rank += smith.rank;
        diag.extend(smith.diag.iter().filter(|d| !d.is_zero()).cloned());
    }
    let torsion_diag = diag.into_iter().filter(|d| !d.is_unit()).collect();
    RankAndTorsion { rank, torsion_diag }
}
