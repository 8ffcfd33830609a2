use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::graph::{EdgeSet, EdgeSpec, RibbonGraph, VertexSpec};

impl RibbonGraph {
    /// The partial dual with respect to the edge subset `a`.
    ///
    /// On flags this is a single stroke: swap the roles of tau0 and tau2 on
    /// every flag of an `a`-edge. The rest is reading the new rotation
    /// system back off:
    ///
    /// * new half-edge pairs are the orbits of the new side-switch; for
    ///   each edge the pair holding flag `2h` of its lower half-edge `h`
    ///   inherits that half-edge's name, the other pair gets the other name;
    /// * new vertices are the ⟨tau1, tau2'⟩ orbits, walked from their
    ///   minimal flag with `f ↦ tau1(tau2'(f))` and named v0, v1, … in
    ///   order of that minimal flag;
    /// * the flag a walk enters a pair through is the pair's new side 0;
    ///   an edge is twisted in the dual iff its new tau0 maps side-0 flag
    ///   to side-0 flag.
    ///
    /// Edge names, edge order and end order are preserved, so dualizing
    /// twice restores the original graph up to vertex names.
    pub fn partial_dual(&self, a: EdgeSet) -> RibbonGraph {
        assert!(a.iter().all(|e| e < self.edge_count()), "edge subset out of range");
        let fs = self.flag_system();
        let n = fs.flag_count();
        let in_a = |f: usize| fs.edge_of(f).is_some_and(|e| a.contains(e));
        let tau0p: Vec<usize> =
            (0..n).map(|f| if in_a(f) { fs.tau2(f) } else { fs.tau0(f) }).collect();
        let tau2p: Vec<usize> =
            (0..n).map(|f| if in_a(f) { fs.tau0(f) } else { fs.tau2(f) }).collect();
        let pair_of = |f: usize| f.min(tau2p[f]);

        let mut pair_name: BTreeMap<usize, String> = BTreeMap::new();
        for e in 0..self.edge_count() {
            let (h1, h2) = self.edge_ends(e);
            let (lo, hi) = if h1 < h2 { (h1, h2) } else { (h2, h1) };
            let lo_pair = pair_of(2 * lo);
            let hi_pair = pair_of(tau0p[2 * lo]);
            debug_assert_ne!(lo_pair, hi_pair);
            pair_name.insert(lo_pair, self.half_name(lo).to_string());
            pair_name.insert(hi_pair, self.half_name(hi).to_string());
        }

        let mut side0: BTreeMap<&str, usize> = BTreeMap::new();
        let mut vertices = Vec::new();
        let mut visited = alloc::vec![false; n];
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let name = format!("v{}", vertices.len());
            if fs.is_synthetic(start) {
                visited[start] = true;
                visited[tau2p[start]] = true;
                vertices.push(VertexSpec { name, rotation: Vec::new() });
                continue;
            }
            let mut rotation = Vec::new();
            let mut f = start;
            loop {
                visited[f] = true;
                visited[tau2p[f]] = true;
                let pname = pair_name[&pair_of(f)].as_str();
                side0.insert(pname, f);
                rotation.push(pname.to_string());
                f = fs.tau1(tau2p[f]);
                if f == start {
                    break;
                }
            }
            vertices.push(VertexSpec { name, rotation });
        }

        let edges = (0..self.edge_count())
            .map(|e| {
                let (h1, h2) = self.edge_ends(e);
                let n1 = self.half_name(h1);
                let n2 = self.half_name(h2);
                let s1 = side0[n1];
                let s2 = side0[n2];
                let twisted = if tau0p[s1] == s2 {
                    true
                } else {
                    debug_assert_eq!(tau0p[s1], tau2p[s2]);
                    false
                };
                EdgeSpec {
                    name: self.edge_name(e).to_string(),
                    ends: (n1.to_string(), n2.to_string()),
                    twisted,
                }
            })
            .collect();

        RibbonGraph::new(vertices, edges)
            .expect("partial dual rebuilt from a valid involution system")
    }
}
