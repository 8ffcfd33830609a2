use alloc::vec;
use alloc::vec::Vec;

use super::graph::{EdgeSet, RibbonGraph};
use super::trace::CornerArc;

/// The flag decomposition of a ribbon graph.
///
/// Every half-edge `h` carries two flags `2h` and `2h+1`, one per side of
/// the ribbon end. Three fixed-point-free involutions generate everything:
///
/// * `tau0` crosses an edge-ribbon. A flat ribbon swaps sides, a twisted
///   one preserves them.
/// * `tau1` moves along a vertex-disk boundary to the next rotation slot:
///   side 1 of slot `t` meets side 0 of slot `t+1`.
/// * `tau2` switches sides within one half-edge.
///
/// Vertices are the ⟨tau1, tau2⟩ orbits, edges the ⟨tau0, tau2⟩ orbits,
/// boundary circles of a subgraph the ⟨tau0-or-tau2, tau1⟩ orbits. An
/// isolated vertex contributes two synthetic flags (its whole disk
/// boundary) on which all three involutions agree.
pub struct FlagSystem {
    tau: [Vec<u32>; 3],
    /// flag -> owning edge, `None` for synthetic flags
    flag_edge: Vec<Option<u32>>,
    flag_vertex: Vec<u32>,
    /// flag -> corner arc it borders
    flag_arc: Vec<u32>,
    arcs: Vec<CornerArc>,
}

impl FlagSystem {
    pub fn new(g: &RibbonGraph) -> Self {
        let isolated: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).collect();
        let n = 4 * g.edge_count() + 2 * isolated.len();

        let mut tau0 = vec![0u32; n];
        let mut tau1 = vec![0u32; n];
        let mut tau2 = vec![0u32; n];
        let mut flag_edge = vec![None; n];
        let mut flag_vertex = vec![0u32; n];
        let mut flag_arc = vec![0u32; n];
        let mut arcs = Vec::new();

        for v in 0..g.vertex_count() {
            let rot = g.rotation(v);
            let d = rot.len();
            let base = arcs.len() as u32;
            for t in 0..d.max(1) {
                arcs.push(CornerArc { vertex: v, slot: t });
            }
            // arc (v,t) lies between rotation slots t and t+1; its two
            // flanking flags are tau1-partners
            for t in 0..d {
                let a = 2 * rot[t] as u32 + 1;
                let b = 2 * rot[(t + 1) % d] as u32;
                tau1[a as usize] = b;
                tau1[b as usize] = a;
                flag_arc[a as usize] = base + t as u32;
                flag_arc[b as usize] = base + t as u32;
            }
            for &h in rot {
                let f = 2 * h as u32;
                tau2[f as usize] = f + 1;
                tau2[f as usize + 1] = f;
                flag_edge[f as usize] = Some(g.edge_of_half(h) as u32);
                flag_edge[f as usize + 1] = Some(g.edge_of_half(h) as u32);
                flag_vertex[f as usize] = v as u32;
                flag_vertex[f as usize + 1] = v as u32;
            }
        }

        for e in 0..g.edge_count() {
            let (h1, h2) = g.edge_ends(e);
            for s in 0..2u32 {
                let a = 2 * h1 as u32 + s;
                let b = if g.edge_twisted(e) { 2 * h2 as u32 + s } else { 2 * h2 as u32 + 1 - s };
                tau0[a as usize] = b;
                tau0[b as usize] = a;
            }
        }

        for (k, &v) in isolated.iter().enumerate() {
            let f = (4 * g.edge_count() + 2 * k) as u32;
            for tau in [&mut tau0, &mut tau1, &mut tau2] {
                tau[f as usize] = f + 1;
                tau[f as usize + 1] = f;
            }
            flag_vertex[f as usize] = v as u32;
            flag_vertex[f as usize + 1] = v as u32;
            let arc = arcs
                .iter()
                .position(|a| a.vertex == v)
                .expect("every vertex owns at least one arc") as u32;
            flag_arc[f as usize] = arc;
            flag_arc[f as usize + 1] = arc;
        }

        let fs = FlagSystem { tau: [tau0, tau1, tau2], flag_edge, flag_vertex, flag_arc, arcs };
        if cfg!(debug_assertions) {
            for i in 0..3 {
                for f in 0..n {
                    let g1 = fs.tau[i][f] as usize;
                    debug_assert_ne!(g1, f, "tau{i} has a fixed point");
                    debug_assert_eq!(fs.tau[i][g1] as usize, f, "tau{i} is not an involution");
                }
            }
        }
        fs
    }

    pub fn flag_count(&self) -> usize {
        self.tau[0].len()
    }

    pub fn tau(&self, i: usize, f: usize) -> usize {
        self.tau[i][f] as usize
    }

    pub fn tau0(&self, f: usize) -> usize {
        self.tau[0][f] as usize
    }

    pub fn tau1(&self, f: usize) -> usize {
        self.tau[1][f] as usize
    }

    pub fn tau2(&self, f: usize) -> usize {
        self.tau[2][f] as usize
    }

    pub(crate) fn tau_table(&self, i: usize) -> &[u32] {
        &self.tau[i]
    }

    /// The edge a flag belongs to; synthetic flags belong to none.
    pub fn edge_of(&self, f: usize) -> Option<usize> {
        self.flag_edge[f].map(|e| e as usize)
    }

    pub fn vertex_of(&self, f: usize) -> usize {
        self.flag_vertex[f] as usize
    }

    pub fn is_synthetic(&self, f: usize) -> bool {
        self.flag_edge[f].is_none()
    }

    /// Index (into [`Self::arcs`]) of the corner arc the flag borders.
    pub fn arc_of(&self, f: usize) -> usize {
        self.flag_arc[f] as usize
    }

    /// All corner arcs, vertex by vertex in rotation order. An isolated
    /// vertex owns a single arc, its whole disk boundary.
    pub fn arcs(&self) -> &[CornerArc] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// The table of tau0 restricted to the edges in `a`: flags of `a`-edges
    /// cross their ribbon, all other flags just switch sides. Orbits of
    /// this together with tau1 trace the boundary circles of the spanning
    /// subgraph on `a`.
    pub(crate) fn tau0_within(&self, a: EdgeSet) -> Vec<u32> {
        (0..self.flag_count() as u32)
            .map(|f| match self.flag_edge[f as usize] {
                Some(e) if a.contains(e as usize) => self.tau[0][f as usize],
                _ => self.tau[2][f as usize],
            })
            .collect()
    }
}

impl RibbonGraph {
    pub fn flag_system(&self) -> FlagSystem {
        FlagSystem::new(self)
    }
}
