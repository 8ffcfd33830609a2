//! Partial-dual genus polynomials of ribbon graphs and their categorification.
//!
//! The crate is split along the pipeline:
//!
//! * [`algebra`] — exact arithmetic in Z[√3], Laurent polynomials in one and
//!   two variables, and Smith normal form over Z[√3].
//! * [`ribbon`] — ribbon graphs as signed rotation systems, boundary tracing,
//!   partial duality, and the graph constructors (union, join, bar).
//! * [`polynomial`] — the partial-dual genus polynomial and its graded
//!   refinement, computed two independent ways.
//! * [`homology`] — the cube of a ribbon graph over the Frobenius algebra
//!   Z[√3,x]/(x³), the bigraded cochain complex, and its cohomology.
//!
//! Everything is `no_std` + `alloc`; all arithmetic is exact.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod homology;
pub mod polynomial;
pub mod ribbon;
