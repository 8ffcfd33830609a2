//! File formats for the `pdgh` command line tool.
//!
//! The binary itself lives in `main.rs`; this library carries the pieces
//! that are useful on their own (and testable without spawning a
//! process): the graph file parser/serializer and the JSON views of the
//! core data structures.

pub mod format;
pub mod json;
