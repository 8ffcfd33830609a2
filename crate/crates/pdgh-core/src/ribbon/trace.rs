use alloc::vec;
use alloc::vec::Vec;

use super::flags::FlagSystem;
use super::graph::{EdgeSet, RibbonGraph};

/// One arc of a vertex-disk boundary: the piece between rotation slots
/// `slot` and `slot + 1`. A degree-d vertex has d arcs (one whole-boundary
/// arc when d = 0). Arcs are what boundary circles of subgraphs are made
/// of, so they index the tensor factors downstream.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CornerArc {
    pub vertex: usize,
    pub slot: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
}

/// The boundary circles of a spanning subgraph, as a partition of the
/// corner arcs. Blocks are sorted internally and ordered by their minimal
/// arc, which fixes a deterministic circle order everywhere downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePartition {
    blocks: Vec<Vec<usize>>,
    arc_block: Vec<usize>,
}

impl CirclePartition {
    pub fn circle_count(&self) -> usize {
        self.blocks.len()
    }

    /// Arc ids per circle, each ascending; circles ordered by first entry.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of_arc(&self, arc: usize) -> usize {
        self.arc_block[arc]
    }
}

/// Orbits of flags under the joint action of the given permutation tables,
/// each orbit ascending, orbits ordered by their minimal flag.
pub(crate) fn orbits(n: usize, tables: &[&[u32]]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < orbit.len() {
            let f = orbit[i];
            for t in tables {
                let g = t[f] as usize;
                if !seen[g] {
                    seen[g] = true;
                    orbit.push(g);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

impl FlagSystem {
    /// Boundary circles of the spanning subgraph (V, a): follow tau1 along
    /// vertex boundaries, cross the ribbons of `a`, skip over the ends of
    /// all other edges.
    pub fn circle_partition(&self, a: EdgeSet) -> CirclePartition {
        let t0 = self.tau0_within(a);
        let flag_orbits = orbits(self.flag_count(), &[&t0, self.tau_table(1)]);
        let mut arc_block = vec![usize::MAX; self.arc_count()];
        let mut blocks = Vec::with_capacity(flag_orbits.len());
        for orbit in &flag_orbits {
            let mut arcs: Vec<usize> = orbit.iter().map(|&f| self.arc_of(f)).collect();
            arcs.sort_unstable();
            arcs.dedup();
            blocks.push(arcs);
        }
        blocks.sort_unstable();
        for (b, arcs) in blocks.iter().enumerate() {
            for &arc in arcs {
                arc_block[arc] = b;
            }
        }
        debug_assert!(arc_block.iter().all(|&b| b != usize::MAX), "arcs not covered");
        CirclePartition { blocks, arc_block }
    }

    pub fn face_count(&self, a: EdgeSet) -> usize {
        self.circle_partition(a).circle_count()
    }

    pub(crate) fn component_count(&self) -> usize {
        orbits(self.flag_count(), &[self.tau_table(0), self.tau_table(1), self.tau_table(2)]).len()
    }

    /// A ribbon graph is orientable exactly when its flags admit a proper
    /// 2-coloring with all three involutions color-swapping (the two colors
    /// are the local orientations).
    pub(crate) fn is_orientable(&self) -> bool {
        let n = self.flag_count();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(f) = stack.pop() {
                for i in 0..3 {
                    let g = self.tau(i, f);
                    if color[g] == u8::MAX {
                        color[g] = 1 - color[f];
                        stack.push(g);
                    } else if color[g] == color[f] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl RibbonGraph {
    pub fn circle_partition(&self, a: EdgeSet) -> CirclePartition {
        self.flag_system().circle_partition(a)
    }

    /// Number of boundary circles of the spanning subgraph on `a`.
    pub fn face_count(&self, a: EdgeSet) -> usize {
        self.flag_system().face_count(a)
    }

    pub fn counts(&self) -> Counts {
        let fs = self.flag_system();
        Counts {
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            faces: fs.face_count(self.full_edge_set()),
            components: fs.component_count(),
        }
    }

    pub fn component_count(&self) -> usize {
        self.flag_system().component_count()
    }

    /// Euler genus 2c − V + E − F: twice the genus when orientable, the
    /// number of cross-caps when not. Zero exactly for disjoint spheres.
    pub fn euler_genus(&self) -> i64 {
        let Counts { vertices, edges, faces, components } = self.counts();
        2 * components as i64 - vertices as i64 + edges as i64 - faces as i64
    }

    pub fn is_orientable(&self) -> bool {
        self.flag_system().is_orientable()
    }
}
