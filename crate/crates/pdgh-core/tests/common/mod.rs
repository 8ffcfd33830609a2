//! Shared helpers for the integration suites: a seeded random ribbon
//! graph generator and the small named graphs the suites keep reaching
//! for.
#![allow(dead_code)]

use pdgh_core::ribbon::{EdgeSpec, RibbonGraph, VertexSpec};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly messy rotation system: up to `max_edges` ribbons with both
/// ends attached at random slots of up to `max_vertices` vertices
/// (loops, multi-edges and unused vertices all occur), random twists.
pub fn random_graph(rng: &mut ChaCha8Rng, max_edges: usize, max_vertices: usize) -> RibbonGraph {
    let e = rng.gen_range(0..=max_edges);
    let v = rng.gen_range(1..=max_vertices);
    let mut halves: Vec<usize> = (0..2 * e).collect();
    halves.shuffle(rng);
    let mut rotations = vec![Vec::new(); v];
    for h in halves {
        rotations[rng.gen_range(0..v)].push(format!("h{h}"));
    }
    let vertices = rotations
        .into_iter()
        .enumerate()
        .map(|(i, rotation)| VertexSpec { name: format!("v{i}"), rotation })
        .collect();
    let edges = (0..e)
        .map(|i| EdgeSpec {
            name: format!("e{}", i + 1),
            ends: (format!("h{}", 2 * i), format!("h{}", 2 * i + 1)),
            twisted: rng.gen_bool(0.5),
        })
        .collect();
    RibbonGraph::new(vertices, edges).expect("generated description is well-formed")
}

fn vspec(name: &str, rotation: &[&str]) -> VertexSpec {
    VertexSpec {
        name: name.to_string(),
        rotation: rotation.iter().map(|s| s.to_string()).collect(),
    }
}

fn espec(name: &str, a: &str, b: &str, twisted: bool) -> EdgeSpec {
    EdgeSpec { name: name.to_string(), ends: (a.to_string(), b.to_string()), twisted }
}

pub fn isolated() -> RibbonGraph {
    RibbonGraph::new(vec![vspec("v", &[])], vec![]).unwrap()
}

pub fn loop_graph(twisted: bool) -> RibbonGraph {
    RibbonGraph::new(vec![vspec("v", &["h1", "h2"])], vec![espec("e1", "h1", "h2", twisted)])
        .unwrap()
}

/// An untwisted and a twisted loop on one vertex, interleaved.
pub fn two_loops() -> RibbonGraph {
    RibbonGraph::new(
        vec![vspec("v", &["a1", "b1", "a2", "b2"])],
        vec![espec("e1", "a1", "a2", false), espec("e2", "b1", "b2", true)],
    )
    .unwrap()
}

/// A path on three vertices, both edges untwisted.
pub fn path2() -> RibbonGraph {
    RibbonGraph::new(
        vec![vspec("u", &["p1"]), vspec("v", &["p2", "p3"]), vspec("w", &["p4"])],
        vec![espec("e1", "p1", "p2", false), espec("e2", "p3", "p4", false)],
    )
    .unwrap()
}

pub fn fixtures() -> Vec<(&'static str, RibbonGraph)> {
    vec![
        ("isolated", isolated()),
        ("flat loop", loop_graph(false)),
        ("twisted loop", loop_graph(true)),
        ("two loops", two_loops()),
        ("path", path2()),
    ]
}
