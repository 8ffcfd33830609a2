use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::flags::FlagSystem;
use super::graph::RibbonGraph;
use super::trace::orbits;

/// The isomorphism check enumerates flag relabelings and is capped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoSizeError {
    pub edges: usize,
    pub cap: usize,
}

impl fmt::Display for IsoSizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "isomorphism check supports at most {} edges, graph has {}", self.cap, self.edges)
    }
}

impl core::error::Error for IsoSizeError {}

const ISO_EDGE_CAP: usize = 10;

/// Canonical form of one connected component: the lexicographically
/// smallest relabeled involution triple over all start flags and both
/// mirror images. Two components are isomorphic as ribbon graphs iff
/// their canonical forms agree; the mirror variant (tau1 conjugated by
/// tau2, which reverses every rotation) makes reflected drawings equal.
fn component_certificate(fs: &FlagSystem, component: &[usize]) -> Vec<u32> {
    let n = component.len();
    let mut local = vec![usize::MAX; fs.flag_count()];
    for (i, &f) in component.iter().enumerate() {
        local[f] = i;
    }
    let tau = |variant: usize, i: usize, f: usize| -> usize {
        match (variant, i) {
            (1, 1) => fs.tau2(fs.tau1(fs.tau2(f))),
            _ => fs.tau(i, f),
        }
    };

    let mut best: Option<Vec<u32>> = None;
    for variant in 0..2 {
        for &start in component {
            let mut number = vec![u32::MAX; n];
            let mut order = Vec::with_capacity(n);
            number[local[start]] = 0;
            order.push(start);
            let mut next = 1u32;
            let mut i = 0;
            while i < order.len() {
                let f = order[i];
                for t in 0..3 {
                    let g = tau(variant, t, f);
                    if number[local[g]] == u32::MAX {
                        number[local[g]] = next;
                        next += 1;
                        order.push(g);
                    }
                }
                i += 1;
            }
            debug_assert_eq!(order.len(), n);
            let mut cand = Vec::with_capacity(3 * n + 1);
            cand.push(n as u32);
            for t in 0..3 {
                for &f in &order {
                    cand.push(number[local[tau(variant, t, f)]]);
                }
            }
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.expect("component is nonempty")
}

fn certificate(g: &RibbonGraph) -> Vec<Vec<u32>> {
    let fs = g.flag_system();
    let n = fs.flag_count();
    let tables = [fs.tau_table(0), fs.tau_table(1), fs.tau_table(2)];
    let mut certs: Vec<Vec<u32>> =
        orbits(n, &tables).iter().map(|component| component_certificate(&fs, component)).collect();
    certs.sort_unstable();
    certs
}

impl RibbonGraph {
    /// Whether two ribbon graphs are equivalent: some relabeling of
    /// half-edges, reordering of rotations/edges and flipping of
    /// vertex-disks turns one into the other.
    pub fn is_isomorphic_to(&self, other: &RibbonGraph) -> Result<bool, IsoSizeError> {
        for g in [self, other] {
            if g.edge_count() > ISO_EDGE_CAP {
                return Err(IsoSizeError { edges: g.edge_count(), cap: ISO_EDGE_CAP });
            }
        }
        if self.edge_count() != other.edge_count() || self.vertex_count() != other.vertex_count() {
            return Ok(false);
        }
        Ok(certificate(self) == certificate(other))
    }
}
