use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::graph::{EdgeSpec, RibbonGraph, VertexSpec};

/// Invalid placement for a gluing operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpError {
    VertexOutOfRange {
        side: u8,
        vertex: usize,
        count: usize,
    },
    /// Gaps of a degree-d rotation are numbered 0..=d (d and 0 coincide).
    GapOutOfRange {
        side: u8,
        gap: usize,
        degree: usize,
    },
}

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OpError::VertexOutOfRange { side, vertex, count } => {
                write!(f, "graph {side} has {count} vertices, index {vertex} is out of range")
            }
            OpError::GapOutOfRange { side, gap, degree } => {
                write!(f, "vertex on side {side} has degree {degree}, gap {gap} is out of range")
            }
        }
    }
}

impl core::error::Error for OpError {}

fn fresh(taken: &mut BTreeSet<String>, base: &str) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    taken.insert(name.clone());
    name
}

/// Specs of `g2` with every name that collides with `g1` primed until
/// fresh. Returns the taken-name sets too so callers can mint more names.
fn relabeled_specs(
    g1: &RibbonGraph,
    g2: &RibbonGraph,
) -> (Vec<VertexSpec>, Vec<EdgeSpec>, [BTreeSet<String>; 3]) {
    let mut vnames: BTreeSet<String> =
        (0..g1.vertex_count()).map(|v| g1.vertex_name(v).to_string()).collect();
    let mut enames: BTreeSet<String> =
        (0..g1.edge_count()).map(|e| g1.edge_name(e).to_string()).collect();
    let mut hnames: BTreeSet<String> =
        (0..g1.half_edge_count()).map(|h| g1.half_name(h).to_string()).collect();

    let (mut vs, mut es) = g2.to_specs();
    let mut hmap: Vec<(String, String)> = Vec::new();
    for v in &mut vs {
        v.name = fresh(&mut vnames, &v.name.clone());
        for h in &mut v.rotation {
            let new = fresh(&mut hnames, h);
            if new != *h {
                hmap.push((h.clone(), new.clone()));
                *h = new;
            }
        }
    }
    for e in &mut es {
        e.name = fresh(&mut enames, &e.name.clone());
        for end in [&mut e.ends.0, &mut e.ends.1] {
            if let Some((_, new)) = hmap.iter().find(|(old, _)| old == end) {
                *end = new.clone();
            }
        }
    }
    (vs, es, [vnames, enames, hnames])
}

fn check_placement(g: &RibbonGraph, side: u8, vertex: usize, gap: usize) -> Result<(), OpError> {
    if vertex >= g.vertex_count() {
        return Err(OpError::VertexOutOfRange { side, vertex, count: g.vertex_count() });
    }
    if gap > g.degree(vertex) {
        return Err(OpError::GapOutOfRange { side, gap, degree: g.degree(vertex) });
    }
    Ok(())
}

/// Both graphs side by side; the copy of `g2` is relabeled away from `g1`
/// by appending primes. Vertex and edge orders are g1's then g2's.
pub fn disjoint_union(g1: &RibbonGraph, g2: &RibbonGraph) -> RibbonGraph {
    let (vs2, es2, _) = relabeled_specs(g1, g2);
    let (mut vs, mut es) = g1.to_specs();
    vs.extend(vs2);
    es.extend(es2);
    RibbonGraph::new(vs, es).expect("relabeled union is well-formed")
}

/// Paste the disks of `g1`'s vertex `v1` and `g2`'s vertex `v2` into one
/// vertex: the rotation of `v2` (read from gap `pos2`) is spliced into the
/// rotation of `v1` at gap `pos1`. Gap t is the space before rotation
/// slot t.
pub fn ribbon_join(
    g1: &RibbonGraph,
    v1: usize,
    pos1: usize,
    g2: &RibbonGraph,
    v2: usize,
    pos2: usize,
) -> Result<RibbonGraph, OpError> {
    check_placement(g1, 1, v1, pos1)?;
    check_placement(g2, 2, v2, pos2)?;
    let (mut vs2, es2, _) = relabeled_specs(g1, g2);
    let (mut vs, mut es) = g1.to_specs();

    let spliced = vs2.remove(v2);
    let target = &mut vs[v1].rotation;
    let tail = target.split_off(pos1);
    target.extend_from_slice(&spliced.rotation[pos2..]);
    target.extend_from_slice(&spliced.rotation[..pos2]);
    target.extend(tail);

    vs.extend(vs2);
    es.extend(es2);
    Ok(RibbonGraph::new(vs, es).expect("spliced rotation system is well-formed"))
}

/// Join the two graphs by one fresh ribbon from gap `pos1` of `g1`'s
/// vertex `v1` to gap `pos2` of `g2`'s vertex `v2`. The new edge comes
/// last in edge order.
pub fn bar_amalgamation(
    g1: &RibbonGraph,
    v1: usize,
    pos1: usize,
    g2: &RibbonGraph,
    v2: usize,
    pos2: usize,
    twisted: bool,
) -> Result<RibbonGraph, OpError> {
    check_placement(g1, 1, v1, pos1)?;
    check_placement(g2, 2, v2, pos2)?;
    let (vs2, es2, [_, mut enames, mut hnames]) = relabeled_specs(g1, g2);
    let (mut vs, mut es) = g1.to_specs();
    let offset = vs.len();
    vs.extend(vs2);
    es.extend(es2);

    let b1 = fresh(&mut hnames, "b1");
    let b2 = fresh(&mut hnames, "b2");
    vs[v1].rotation.insert(pos1, b1.clone());
    vs[offset + v2].rotation.insert(pos2, b2.clone());
    es.push(EdgeSpec { name: fresh(&mut enames, "bar"), ends: (b1, b2), twisted });
    Ok(RibbonGraph::new(vs, es).expect("amalgamated rotation system is well-formed"))
}
