//! What partial duality must and must not change, exercised over random
//! graphs and every subset of their edges.

mod common;

use common::{fixtures, random_graph, rng};
use pdgh_core::polynomial::{pd_genus_polynomial_with_cap, Mode};
use pdgh_core::ribbon::{EdgeSet, RibbonGraph};

const CAP: usize = 8;

fn suite(g: &RibbonGraph, label: &str) {
    let n = g.edge_count();
    let base = pd_genus_polynomial_with_cap(g, Mode::Faces, CAP).unwrap();
    let fs = g.flag_system();
    for a in EdgeSet::all(n) {
        let d = g.partial_dual(a);
        assert_eq!(
            pd_genus_polynomial_with_cap(&d, Mode::Faces, CAP).unwrap(),
            base,
            "{label}: polynomial changed under the dual at {:?}",
            a.iter().collect::<Vec<_>>()
        );
        assert_eq!(d.edge_count(), n, "{label}: edge count changed");
        assert_eq!(d.component_count(), g.component_count(), "{label}: components changed");
        assert_eq!(
            d.vertex_count(),
            fs.face_count(a),
            "{label}: dual at {:?} should have one vertex per boundary circle of A",
            a.iter().collect::<Vec<_>>()
        );
        assert_eq!(
            d.is_orientable(),
            g.is_orientable(),
            "{label}: orientability changed under the dual at {:?}",
            a.iter().collect::<Vec<_>>()
        );
        assert!(
            d.partial_dual(a).is_isomorphic_to(g).unwrap(),
            "{label}: dualizing twice at {:?} lost the graph",
            a.iter().collect::<Vec<_>>()
        );
    }
}

/// For e outside B, the dual at e trades "e missing from the subgraph"
/// for "e present": its boundary circles over B are those of the
/// original graph over B plus e.
fn single_edge_face_counts(g: &RibbonGraph, label: &str) {
    let n = g.edge_count();
    for e in 0..n {
        let d = g.partial_dual(EdgeSet::from_bits(0).with(e));
        let dfs = d.flag_system();
        let gfs = g.flag_system();
        for b in EdgeSet::all(n) {
            if b.contains(e) {
                continue;
            }
            assert_eq!(
                dfs.face_count(b),
                gfs.face_count(b.with(e)),
                "{label}: dual at e{}, subset {:?}",
                e + 1,
                b.iter().collect::<Vec<_>>()
            );
        }
    }
}

#[test]
fn named_graphs_pass_the_dual_suite() {
    for (label, g) in fixtures() {
        suite(&g, label);
        single_edge_face_counts(&g, label);
    }
}

#[test]
fn random_graphs_pass_the_dual_suite() {
    let mut rng = rng(0x9e377);
    for case in 0..20 {
        let g = random_graph(&mut rng, 5, 4);
        let label = format!("case {case}");
        suite(&g, &label);
        single_edge_face_counts(&g, &label);
    }
}
