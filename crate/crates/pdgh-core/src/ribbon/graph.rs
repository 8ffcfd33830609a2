use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Input description of one vertex: a name and the cyclic rotation of
/// half-edge names around its disk. The rotation may be empty (an isolated
/// vertex).
#[derive(Clone, Debug)]
pub struct VertexSpec {
    pub name: String,
    pub rotation: Vec<String>,
}

/// Input description of one edge: a name, the two half-edge names it joins,
/// and whether the ribbon is attached with a half-turn.
#[derive(Clone, Debug)]
pub struct EdgeSpec {
    pub name: String,
    pub ends: (String, String),
    pub twisted: bool,
}

/// Why a vertex/edge description does not define a ribbon graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BuildError {
    DuplicateVertexName(String),
    DuplicateEdgeName(String),
    /// A half-edge name appears twice among the rotations.
    RepeatedHalfEdge(String),
    /// An edge references a half-edge name absent from every rotation.
    UnknownHalfEdge(String),
    /// Two edges claim the same half-edge.
    ReusedHalfEdge(String),
    /// An edge joins a half-edge to itself.
    SelfPairedHalfEdge(String),
    /// A half-edge sits in a rotation but belongs to no edge.
    DanglingHalfEdge(String),
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::DuplicateVertexName(n) => write!(f, "duplicate vertex name `{n}`"),
            BuildError::DuplicateEdgeName(n) => write!(f, "duplicate edge name `{n}`"),
            BuildError::RepeatedHalfEdge(n) => {
                write!(f, "half-edge `{n}` appears in more than one rotation slot")
            }
            BuildError::UnknownHalfEdge(n) => {
                write!(f, "edge references unknown half-edge `{n}`")
            }
            BuildError::ReusedHalfEdge(n) => {
                write!(f, "half-edge `{n}` belongs to more than one edge")
            }
            BuildError::SelfPairedHalfEdge(n) => {
                write!(f, "edge joins half-edge `{n}` to itself")
            }
            BuildError::DanglingHalfEdge(n) => {
                write!(f, "half-edge `{n}` belongs to no edge")
            }
        }
    }
}

impl core::error::Error for BuildError {}

struct Vertex {
    name: String,
    rotation: Vec<usize>,
}

struct Edge {
    name: String,
    ends: (usize, usize),
    twisted: bool,
}

/// A ribbon graph: vertex rotations plus signed edge pairings.
///
/// Half-edges are indexed in rotation order (vertex by vertex), edges and
/// vertices in input order. Every half-edge belongs to exactly one rotation
/// slot and exactly one edge; these invariants are checked by [`RibbonGraph::new`]
/// and hold for every graph handed out by this module.
pub struct RibbonGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    half_names: Vec<String>,
    /// half-edge -> (vertex, slot in its rotation)
    half_vertex: Vec<(usize, usize)>,
    /// half-edge -> edge
    half_edge: Vec<usize>,
}

impl RibbonGraph {
    pub fn new(vertices: Vec<VertexSpec>, edges: Vec<EdgeSpec>) -> Result<Self, BuildError> {
        let mut vertex_names = BTreeSet::new();
        let mut half_index: BTreeMap<String, usize> = BTreeMap::new();
        let mut half_names = Vec::new();
        let mut half_vertex = Vec::new();
        let mut built_vertices = Vec::with_capacity(vertices.len());
        for (vi, spec) in vertices.into_iter().enumerate() {
            if !vertex_names.insert(spec.name.clone()) {
                return Err(BuildError::DuplicateVertexName(spec.name));
            }
            let mut rotation = Vec::with_capacity(spec.rotation.len());
            for (slot, h) in spec.rotation.into_iter().enumerate() {
                if half_index.contains_key(&h) {
                    return Err(BuildError::RepeatedHalfEdge(h));
                }
                let idx = half_names.len();
                half_index.insert(h.clone(), idx);
                half_names.push(h);
                half_vertex.push((vi, slot));
                rotation.push(idx);
            }
            built_vertices.push(Vertex { name: spec.name, rotation });
        }

        let mut edge_names = BTreeSet::new();
        let mut half_edge = alloc::vec![usize::MAX; half_names.len()];
        let mut built_edges = Vec::with_capacity(edges.len());
        for (ei, spec) in edges.into_iter().enumerate() {
            if !edge_names.insert(spec.name.clone()) {
                return Err(BuildError::DuplicateEdgeName(spec.name));
            }
            let (na, nb) = spec.ends;
            if na == nb {
                return Err(BuildError::SelfPairedHalfEdge(na));
            }
            let mut resolve = |n: String| -> Result<usize, BuildError> {
                let &idx = half_index.get(&n).ok_or(BuildError::UnknownHalfEdge(n.clone()))?;
                if half_edge[idx] != usize::MAX {
                    return Err(BuildError::ReusedHalfEdge(n));
                }
                half_edge[idx] = ei;
                Ok(idx)
            };
            let a = resolve(na)?;
            let b = resolve(nb)?;
            built_edges.push(Edge { name: spec.name, ends: (a, b), twisted: spec.twisted });
        }
        if let Some(h) = half_edge.iter().position(|&e| e == usize::MAX) {
            return Err(BuildError::DanglingHalfEdge(half_names[h].clone()));
        }

        Ok(RibbonGraph {
            vertices: built_vertices,
            edges: built_edges,
            half_names,
            half_vertex,
            half_edge,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn half_edge_count(&self) -> usize {
        self.half_names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v].name
    }

    /// Half-edge indices around vertex `v`, in rotation order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.vertices[v].rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertices[v].rotation.len()
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edges[e].name
    }

    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        self.edges[e].ends
    }

    pub fn edge_twisted(&self, e: usize) -> bool {
        self.edges[e].twisted
    }

    pub fn half_name(&self, h: usize) -> &str {
        &self.half_names[h]
    }

    /// The (vertex, rotation slot) a half-edge is attached to.
    pub fn half_vertex(&self, h: usize) -> (usize, usize) {
        self.half_vertex[h]
    }

    pub fn edge_of_half(&self, h: usize) -> usize {
        self.half_edge[h]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// The set of all edges.
    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.edge_count())
    }

    /// The graph written back out as input specs, names and all.
    pub(crate) fn to_specs(&self) -> (Vec<VertexSpec>, Vec<EdgeSpec>) {
        let vertices = self
            .vertices
            .iter()
            .map(|v| VertexSpec {
                name: v.name.clone(),
                rotation: v.rotation.iter().map(|&h| self.half_names[h].clone()).collect(),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| EdgeSpec {
                name: e.name.clone(),
                ends: (self.half_names[e.ends.0].clone(), self.half_names[e.ends.1].clone()),
                twisted: e.twisted,
            })
            .collect();
        (vertices, edges)
    }

    /// The same graph with its edge list permuted: the edge currently at
    /// index `order[t]` becomes edge t. Panics unless `order` is a
    /// permutation of 0..edge_count.
    pub fn with_edge_order(&self, order: &[usize]) -> RibbonGraph {
        assert_eq!(order.len(), self.edge_count(), "order must list every edge");
        let (vs, es) = self.to_specs();
        let mut seen = alloc::vec![false; es.len()];
        let es = order
            .iter()
            .map(|&t| {
                assert!(!core::mem::replace(&mut seen[t], true), "repeated edge in order");
                es[t].clone()
            })
            .collect();
        RibbonGraph::new(vs, es).expect("permuting edges preserves validity")
    }
}

impl fmt::Debug for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RibbonGraph {{")?;
        for v in &self.vertices {
            write!(f, "  {} (", v.name)?;
            for (i, &h) in v.rotation.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.half_names[h])?;
            }
            writeln!(f, ")")?;
        }
        for e in &self.edges {
            writeln!(
                f,
                "  {} = {}{}{}",
                e.name,
                self.half_names[e.ends.0],
                if e.twisted { " ~ " } else { " - " },
                self.half_names[e.ends.1]
            )?;
        }
        write!(f, "}}")
    }
}

/// A subset of the edges of a ribbon graph, as a bitmask over edge indices.
///
/// Cheap to copy and to enumerate, which is all the subset-sum formulas
/// need. Capped at 32 edges; every routine that enumerates subsets applies
/// a far smaller cap first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSet {
    bits: u32,
}

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet { bits: 0 };

    pub fn from_bits(bits: u32) -> Self {
        EdgeSet { bits }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= 32, "edge sets are capped at 32 edges");
        if n == 32 {
            EdgeSet { bits: u32::MAX }
        } else {
            EdgeSet { bits: (1u32 << n) - 1 }
        }
    }

    pub fn contains(self, e: usize) -> bool {
        e < 32 && self.bits >> e & 1 == 1
    }

    #[must_use]
    pub fn with(self, e: usize) -> Self {
        assert!(e < 32);
        EdgeSet { bits: self.bits | 1 << e }
    }

    #[must_use]
    pub fn without(self, e: usize) -> Self {
        assert!(e < 32);
        EdgeSet { bits: self.bits & !(1 << e) }
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    /// Complement inside a graph with `n` edges.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        EdgeSet { bits: Self::full(n).bits & !self.bits }
    }

    #[must_use]
    pub fn symmetric_difference(self, other: Self) -> Self {
        EdgeSet { bits: self.bits ^ other.bits }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&e| self.bits >> e & 1 == 1)
    }

    /// All `2^n` subsets of an `n`-edge graph, in binary counter order.
    pub fn all(n: usize) -> impl Iterator<Item = EdgeSet> {
        assert!(n < 32, "subset enumeration is capped well below 32 edges");
        (0u32..1 << n).map(|bits| EdgeSet { bits })
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}
