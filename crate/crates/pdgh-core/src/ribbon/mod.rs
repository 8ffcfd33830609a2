//! Ribbon graphs as signed rotation systems.
//!
//! A ribbon graph is stored the way one draws it: every vertex-disk carries
//! a cyclic rotation of half-edge ends, every edge-ribbon joins two ends and
//! is either flat or attached with a half-turn. All topology (boundary
//! circles, genus, orientability, partial duality) is computed on the
//! derived [`FlagSystem`], where each edge contributes four flags and the
//! three involutions τ0, τ1, τ2 encode edges, rotations and sides.

mod dual;
mod flags;
mod graph;
mod iso;
mod ops;
mod trace;

#[cfg(test)]
pub(crate) mod tests_support {
    pub(crate) use super::graph::tests::{bouquet, isolated, loop_graph, path2, two_loops};
}

pub use flags::FlagSystem;
pub use graph::{BuildError, EdgeSet, EdgeSpec, RibbonGraph, VertexSpec};
pub use iso::IsoSizeError;
pub use ops::{bar_amalgamation, disjoint_union, ribbon_join, OpError};
pub use trace::{CirclePartition, CornerArc, Counts};
