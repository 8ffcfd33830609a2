//! The categorified genus polynomial: a bigraded cohomology over Z[√3].
//!
//! Each spanning subgraph A gets the module N^⊗|A| ⊗ M^⊗F(A) ⊗ M^⊗F(Aᶜ),
//! where M tracks boundary circles of a subgraph and of its complement and
//! N counts chosen edges; the subset cube's merge/split/half maps make
//! this a complex graded by (j, k), with j the y-count and k the shifted
//! internal degree. Cohomology is computed blockwise by Smith normal form,
//! and its graded Euler characteristic is the graded genus polynomial in
//! disguise: w = −q²(1+p), z = (q⁻¹+1+q)⁻¹.

mod complex;
mod cube;
mod frobenius;
mod groups;
mod reduce;

pub use complex::{
    build_complex, build_complex_with_cap, BlockComplex, Complex, SparseMap, HOMOLOGY_EDGE_CAP,
};
pub use frobenius::{frobenius_relations_hold, verify_frobenius_relations, RelationCheck};
pub use groups::{
    bigraded_homology, bigraded_homology_with_cap, block_homology, check_theorem,
    check_theorem_with_cap, e_tilde_from_euler, homology_of, reorder_invariant,
    reorder_invariant_with_cap, BigradedGroups, GroupEntry, TheoremCheck,
};
