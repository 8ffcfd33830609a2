//! Per-edge maps of the resolution cube.
//!
//! A cube edge adds one edge-ribbon e to the spanning subgraph (or, on the
//! complement side, removes it). The boundary circles not meeting e's ends
//! persist unchanged; the ones flanking e merge (two into one), split (one
//! into two) or carry over (one to one, a genus move). This module detects
//! which of the three happens and applies the corresponding structure map
//! to monomial tensors, factor positions ordered the same way circles are:
//! by minimal corner arc.

use alloc::vec::Vec;

use crate::algebra::QuadInt;
use crate::ribbon::{CirclePartition, FlagSystem, RibbonGraph};

use super::frobenius::{comult_exp, half_exp, mult_exp};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum CircleAction {
    Merge { from: (usize, usize), to: usize },
    Split { from: usize, to: (usize, usize) },
    Half { from: usize, to: usize },
}

/// How one cube edge rewires the tensor factors of a circle partition.
#[derive(Clone, Debug)]
pub(crate) struct EdgeMapSpec {
    pub action: CircleAction,
    /// (source factor, target factor) for every untouched circle
    pub fixed: Vec<(usize, usize)>,
}

/// The ≤4 corner arcs flanking the two ends of edge `e`: the arcs around
/// the attachment slots of its half-edges. A circle meets `e`'s ribbon iff
/// it contains one of these.
pub(crate) fn flank_arcs(g: &RibbonGraph, fs: &FlagSystem, e: usize) -> Vec<usize> {
    let (h1, h2) = g.edge_ends(e);
    let mut arcs: Vec<usize> =
        [2 * h1, 2 * h1 + 1, 2 * h2, 2 * h2 + 1].into_iter().map(|f| fs.arc_of(f)).collect();
    arcs.sort_unstable();
    arcs.dedup();
    arcs
}

fn touched(p: &CirclePartition, flanks: &[usize]) -> Vec<usize> {
    let mut blocks: Vec<usize> = flanks.iter().map(|&a| p.block_of_arc(a)).collect();
    blocks.sort_unstable();
    blocks.dedup();
    blocks
}

/// Classify what toggling edge `e` does between two circle partitions of
/// the same graph. Panics when the partitions do not come from subsets
/// differing exactly in `e`: that would be a bug, not bad input.
pub(crate) fn edge_map_spec(
    from: &CirclePartition,
    to: &CirclePartition,
    flanks: &[usize],
) -> EdgeMapSpec {
    let tf = touched(from, flanks);
    let tt = touched(to, flanks);
    let action = match (tf.as_slice(), tt.as_slice()) {
        ([a, b], [c]) => CircleAction::Merge { from: (*a, *b), to: *c },
        ([a], [c, d]) => CircleAction::Split { from: *a, to: (*c, *d) },
        ([a], [c]) => CircleAction::Half { from: *a, to: *c },
        _ => panic!("a ribbon end touches {} -> {} circles", tf.len(), tt.len()),
    };
    debug_assert_eq!(
        to.circle_count() as i64 - from.circle_count() as i64,
        match action {
            CircleAction::Merge { .. } => -1,
            CircleAction::Split { .. } => 1,
            CircleAction::Half { .. } => 0,
        },
        "touched pattern disagrees with circle counts"
    );

    let mut fixed = Vec::with_capacity(from.circle_count().saturating_sub(2));
    for (b, arcs) in from.blocks().iter().enumerate() {
        if tf.contains(&b) {
            continue;
        }
        let t = to.block_of_arc(arcs[0]);
        debug_assert_eq!(to.blocks()[t], *arcs, "untouched circle changed its arcs");
        fixed.push((b, t));
    }
    EdgeMapSpec { action, fixed }
}

/// Apply the spec to one monomial: exponents indexed by source factor in,
/// a short sum of (coefficient, exponents by target factor) out. Terms
/// killed by the truncation x³ = 0 are dropped.
pub(crate) fn apply_edge_map(
    spec: &EdgeMapSpec,
    exps: &[u8],
    target_len: usize,
) -> Vec<(QuadInt, Vec<u8>)> {
    let mut template = alloc::vec![0u8; target_len];
    for &(s, t) in &spec.fixed {
        template[t] = exps[s];
    }
    match spec.action {
        CircleAction::Merge { from: (a, b), to } => match mult_exp(exps[a], exps[b]) {
            Some(s) => {
                template[to] = s;
                alloc::vec![(QuadInt::one(), template)]
            }
            None => Vec::new(),
        },
        CircleAction::Split { from, to: (c, d) } => comult_exp(exps[from])
            .iter()
            .map(|&(p, q)| {
                let mut out = template.clone();
                out[c] = p;
                out[d] = q;
                (QuadInt::one(), out)
            })
            .collect(),
        CircleAction::Half { from, to } => match half_exp(exps[from]) {
            Some(s) => {
                template[to] = s;
                alloc::vec![(QuadInt::sqrt3(), template)]
            }
            None => Vec::new(),
        },
    }
}

/// Exponent of the sign carried by the cube edge A -> A ∪ {e}: the number
/// of chosen edges before position e.
pub(crate) fn sign_exponent(a_bits: u32, e: usize) -> u32 {
    (a_bits & ((1 << e) - 1)).count_ones()
}
