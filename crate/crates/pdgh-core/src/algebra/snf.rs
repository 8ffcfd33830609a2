//! Smith normal form over Z[√3].
//!
//! Classical elimination over a Euclidean domain: pick the entry of minimal
//! nonzero |norm| as pivot (ties broken by (row, col)), clear its row and
//! column with Euclidean division, and fold non-divisible entries of the
//! remaining block into the pivot row until the pivot divides everything.
//! Each round strictly shrinks the minimal |norm| of the working block, so
//! the loop terminates. Diagonal entries are reported as canonical
//! associates; without that normalization they would only be defined up to
//! the infinite unit group.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use super::{QuadInt, QuadMatrix};

/// Result of [`smith_normal_form`]: `left · m · right` is diagonal with
/// `diag[t]` dividing `diag[t+1]`, and `left`, `right` invertible over
/// Z[√3]. `diag` has length min(rows, cols), zeros trailing.
pub struct Smith {
    pub diag: Vec<QuadInt>,
    pub rank: usize,
    pub left: QuadMatrix,
    pub right: QuadMatrix,
}

pub fn smith_normal_form(m: &QuadMatrix) -> Smith {
    let rows = m.rows();
    let cols = m.cols();
    let mut w = m.clone();
    let mut left = QuadMatrix::identity(rows);
    let mut right = QuadMatrix::identity(cols);
    let steps = rows.min(cols);

    for t in 0..steps {
        loop {
            let Some((pi, pj)) = min_norm_pivot(&w, t) else {
                break; // remaining block is zero
            };
            w.swap_rows(t, pi);
            left.swap_rows(t, pi);
            w.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if w.get(i, t).is_zero() {
                    continue;
                }
                let q = w.get(i, t).divmod(w.get(t, t)).0;

                if !q.is_zero() {
                    w.row_sub(i, t, &q);
                    left.row_sub(i, t, &q);
                }
                if !w.get(i, t).is_zero() {
                    clean = false; // remainder with smaller norm; re-pivot
                }
            }
            for j in t + 1..cols {
                if w.get(t, j).is_zero() {
                    continue;
                }
                let q = w.get(t, j).divmod(w.get(t, t)).0;
                if !q.is_zero() {
                    w.col_sub(j, t, &q);
                    right.col_sub(j, t, &q);
                }
                if !w.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            // Row and column are clear; make the pivot divide the rest of
            // the block, otherwise pull the offending row in and repeat.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !w.get(t, t).divides(w.get(i, j)));
            match offender {
                Some((i, _)) => {
                    w.row_add(t, i);
                    left.row_add(t, i);
                }
                None => break,
            }
        }
    }

    let mut diag = Vec::with_capacity(steps);
    for t in 0..steps {
        let d = w.get(t, t).clone();
        if !d.is_zero() {
            let canonical = d.canonical_associate();
            if canonical != d {
                let u = canonical.exact_div(&d);
                w.scale_row(t, &u);
                left.scale_row(t, &u);
            }
        }
        diag.push(w.get(t, t).clone());
    }
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    Smith { diag, rank, left, right }
}

/// Entry of minimal nonzero |norm| in the block [t.., t..], ties by (row, col).
fn min_norm_pivot(w: &QuadMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..w.rows() {
        for j in t..w.cols() {
            let e = w.get(i, j);
            if e.is_zero() {
                continue;
            }
            let n = e.norm().abs();
            if best.as_ref().is_none_or(|(bn, _, _)| n < *bn) {
                best = Some((n, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}
