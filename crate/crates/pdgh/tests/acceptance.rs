//! Acceptance suite: the frozen end-to-end checks a release must pass,
//! one numbered test per check so a run prints one verdict line for
//! each. All comparisons are exact, and every check carries the
//! wall-clock budget it has to meet.
//!
//! The two-loop and path goldens are frozen reference values. The
//! polynomial ones are small enough to recompute by hand from the
//! subset sums; the cohomology table is pinned against the independent
//! rank and torsion oracles exercised in the core crate's suites.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pdgh::format::parse_ribbon;
use pdgh_core::algebra::{BiLaurent, QuadInt, TorsionIdeal};
use pdgh_core::homology::{
    bigraded_homology, build_complex, check_theorem_with_cap, e_tilde_from_euler,
    verify_frobenius_relations, BigradedGroups, GroupEntry,
};
use pdgh_core::polynomial::{
    e_tilde, graded_pd_genus_polynomial, pd_genus_polynomial, pd_genus_polynomial_with_cap, Mode,
};
use pdgh_core::ribbon::{
    bar_amalgamation, disjoint_union, ribbon_join, EdgeSet, EdgeSpec, RibbonGraph, VertexSpec,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn assert_budget(start: Instant, budget: Duration) {
    let took = start.elapsed();
    assert!(took <= budget, "took {took:?}, budget is {budget:?}");
}

fn fixture_path(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn load(name: &str) -> RibbonGraph {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    parse_ribbon(&text).expect("fixture parses")
}

fn fixtures() -> Vec<(&'static str, RibbonGraph)> {
    ["isolated.rg", "loop_flat.rg", "loop_twisted.rg", "two_loops.rg", "path2.rg"]
        .into_iter()
        .map(|name| (name, load(name)))
        .collect()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Same shape as the generator in the core crate's suites: random
/// rotations, random twists; loops, multi-edges and bare vertices all
/// occur.
fn random_graph(rng: &mut ChaCha8Rng, max_edges: usize, max_vertices: usize) -> RibbonGraph {
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

fn poly2(vars: [&'static str; 2], terms: &[(i64, i64, i64)]) -> BiLaurent {
    let mut out = BiLaurent::zero(vars);
    for &(coeff, e0, e1) in terms {
        out.add_term((e0, e1), BigInt::from(coeff));
    }
    out
}

fn z3() -> TorsionIdeal {
    TorsionIdeal::new(&QuadInt::sqrt3())
}

fn group(free: usize, z3_count: usize) -> GroupEntry {
    GroupEntry { free, torsion: vec![z3(); z3_count] }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// The graded polynomial split by membership of edge `e`: the half
/// summed over subsets containing `e` and the half over the rest.
fn graded_split(g: &RibbonGraph, e: usize) -> (BiLaurent, BiLaurent) {
    let n = g.edge_count();
    let fs = g.flag_system();
    let shift = 2 * g.component_count() as i64 + n as i64;
    let mut with_e = BiLaurent::zero(["w", "z"]);
    let mut without_e = BiLaurent::zero(["w", "z"]);
    for a in EdgeSet::all(n) {
        let fc = fs.face_count(a) as i64 + fs.face_count(a.complement(n)) as i64;
        let half = if a.contains(e) { &mut with_e } else { &mut without_e };
        half.add_term((a.len() as i64, shift - fc), BigInt::from(1));
    }
    (with_e, without_e)
}

#[test]
fn c01_two_loop_polynomial_and_face_counts() {
    let start = Instant::now();
    let g = load("two_loops.rg");

    let out = Command::new(env!("CARGO_BIN_EXE_pdgh"))
        .args(["poly", &fixture_path("two_loops.rg")])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "2*z^2 + 2*z\n");

    for mode in [Mode::Faces, Mode::Duals] {
        assert_eq!(pd_genus_polynomial(&g, mode).unwrap().to_string(), "2*z^2 + 2*z");
    }

    // Boundary circles of the four spanning subgraphs; bit i is e{i+1}.
    let fs = g.flag_system();
    assert_eq!(fs.face_count(EdgeSet::EMPTY), 1);
    assert_eq!(fs.face_count(EdgeSet::EMPTY.with(0)), 2);
    assert_eq!(fs.face_count(EdgeSet::EMPTY.with(1)), 1);
    assert_eq!(fs.face_count(EdgeSet::full(2)), 1);

    assert_budget(start, Duration::from_secs(1));
}

#[test]
fn c02_two_loop_graded_polynomial_and_subset_sum() {
    let start = Instant::now();
    let g = load("two_loops.rg");

    let graded = graded_pd_genus_polynomial(&g, Mode::Faces).unwrap();
    assert_eq!(graded, poly2(["w", "z"], &[(1, 2, 2), (2, 1, 1), (1, 0, 2)]));
    assert_eq!(graded.to_string(), "w^2*z^2 + 2*w*z + z^2");
    assert_eq!(graded, graded_pd_genus_polynomial(&g, Mode::Duals).unwrap());

    let et = e_tilde(&g).unwrap();
    assert_eq!(et, poly2(["w", "z"], &[(1, 2, -2), (2, 1, -3), (1, 0, -2)]));
    assert_eq!(et.to_string(), "w^2*z^-2 + 2*w*z^-3 + z^-2");

    // The z-shift by 2c + |E| = 4 links the two forms.
    assert_eq!(et.mul_monomial(&BigInt::from(1), (0, 4)), graded);

    assert_budget(start, Duration::from_secs(1));
}

#[test]
fn c03_two_loop_cohomology_table() {
    let start = Instant::now();
    let g = load("two_loops.rg");
    let h = bigraded_homology(&g).unwrap();

    #[rustfmt::skip]
    let expected = BigradedGroups::from_entries(2, [
        ((0, 0, -2), group(1, 0)),
        ((1, 0, -1), group(0, 2)),
        ((1, 0, 0), group(3, 3)),
        ((1, 0, 1), group(10, 2)),
        ((1, 0, 2), group(12, 1)), ((2, 0, 2), group(0, 1)),
        ((1, 0, 3), group(10, 0)), ((2, 0, 3), group(0, 2)),
        ((1, 0, 4), group(3, 0)),  ((2, 0, 4), group(0, 3)),
        ((2, 0, 5), group(0, 2)),
        ((2, 0, 6), group(1, 0)),
        ((1, 1, -1), group(2, 0)),
        ((1, 1, 0), group(6, 0)),
        ((1, 1, 1), group(12, 0)),
        ((1, 1, 2), group(13, 0)), ((2, 1, 2), group(1, 1)),
        ((1, 1, 3), group(10, 0)), ((2, 1, 3), group(2, 2)),
        ((1, 1, 4), group(3, 0)),  ((2, 1, 4), group(3, 3)),
        ((2, 1, 5), group(2, 2)),
        ((2, 1, 6), group(2, 0)),
        ((2, 2, 2), group(1, 0)),
        ((2, 2, 3), group(2, 0)),
        ((2, 2, 4), group(3, 0)),
        ((2, 2, 5), group(2, 0)),
        ((2, 2, 6), group(1, 0)),
    ]);
    // Whole-table equality also pins every unlisted spot to zero.
    assert_eq!(h, expected);

    assert_budget(start, Duration::from_secs(10));
}

#[test]
fn c04_two_loop_euler_characteristic_and_its_specializations() {
    let start = Instant::now();
    let g = load("two_loops.rg");

    #[rustfmt::skip]
    let expected = poly2(["p", "q"], &[
        (1, 0, -2), (-3, 0, 0), (-10, 0, 1), (-12, 0, 2), (-10, 0, 3), (-3, 0, 4), (1, 0, 6),
        (-2, 1, -1), (-6, 1, 0), (-12, 1, 1), (-12, 1, 2), (-8, 1, 3), (2, 1, 5), (2, 1, 6),
        (1, 2, 2), (2, 2, 3), (3, 2, 4), (2, 2, 5), (1, 2, 6),
    ]);

    let chi = bigraded_homology(&g).unwrap().euler_characteristic();
    assert_eq!(chi, expected);
    assert_eq!(build_complex(&g).unwrap().euler_characteristic(), chi);

    // Undoing the substitution w = -q²(1+p), z = (q⁻¹+1+q)⁻¹ recovers
    // all three polynomial forms from the Euler characteristic.
    let et = e_tilde_from_euler(&chi).expect("series has the subset-sum shape");
    assert_eq!(et, e_tilde(&g).unwrap());
    let graded = et.mul_monomial(&BigInt::from(1), (0, 4));
    assert_eq!(graded, graded_pd_genus_polynomial(&g, Mode::Faces).unwrap());
    assert_eq!(graded.specialize_one(0), pd_genus_polynomial(&g, Mode::Faces).unwrap());

    assert_budget(start, Duration::from_secs(10));
}

#[test]
fn c05_random_graphs_satisfy_the_euler_characteristic_theorem() {
    let start = Instant::now();
    let mut r = rng(0xacce5);
    for case in 0..50 {
        let g = random_graph(&mut r, 4, 4);
        let check = check_theorem_with_cap(&g, 6).unwrap();
        assert!(check.all_hold(), "case {case}: {check:?}");
    }
    assert_budget(start, Duration::from_secs(120));
}

#[test]
fn c06_gluings_multiply_the_graded_polynomial() {
    let start = Instant::now();
    let mut r = rng(0x91ce);
    for case in 0..20 {
        let g1 = random_graph(&mut r, 4, 3);
        let g2 = random_graph(&mut r, 4, 3);
        let p1 = graded_pd_genus_polynomial(&g1, Mode::Faces).unwrap();
        let p2 = graded_pd_genus_polynomial(&g2, Mode::Faces).unwrap();
        let product = &p1 * &p2;

        let union = disjoint_union(&g1, &g2);
        assert_eq!(
            graded_pd_genus_polynomial(&union, Mode::Faces).unwrap(),
            product,
            "case {case}"
        );

        let v1 = r.gen_range(0..g1.vertex_count());
        let v2 = r.gen_range(0..g2.vertex_count());
        let pos1 = r.gen_range(0..=g1.degree(v1));
        let pos2 = r.gen_range(0..=g2.degree(v2));
        let join = ribbon_join(&g1, v1, pos1, &g2, v2, pos2).unwrap();
        assert_eq!(graded_pd_genus_polynomial(&join, Mode::Faces).unwrap(), product, "case {case}");

        let bar = bar_amalgamation(&g1, v1, pos1, &g2, v2, pos2, r.gen_bool(0.5)).unwrap();
        let bar_poly = graded_pd_genus_polynomial(&bar, Mode::Faces).unwrap();
        let one_plus_w = poly2(["w", "z"], &[(1, 0, 0), (1, 1, 0)]);
        assert_eq!(bar_poly, &one_plus_w * &product, "case {case}");
        // At w = 1 the bridge contributes a plain factor of two.
        assert_eq!(
            bar_poly.specialize_one(0),
            (&p1.specialize_one(0) * &p2.specialize_one(0)).scaled(&BigInt::from(2)),
            "case {case}"
        );
    }
    assert_budget(start, Duration::from_secs(60));
}

#[test]
fn c07_partial_duals_preserve_the_invariants() {
    let start = Instant::now();
    let mut r = rng(0xd0a1);
    for case in 0..20 {
        let g = random_graph(&mut r, 5, 4);
        let n = g.edge_count();
        let fs = g.flag_system();
        let base = pd_genus_polynomial_with_cap(&g, Mode::Faces, 8).unwrap();
        for a in EdgeSet::all(n) {
            let d = g.partial_dual(a);
            assert_eq!(
                pd_genus_polynomial_with_cap(&d, Mode::Faces, 8).unwrap(),
                base,
                "case {case} a={a:?}"
            );
            assert_eq!(d.edge_count(), n);
            assert_eq!(d.component_count(), g.component_count(), "case {case} a={a:?}");
            assert_eq!(d.vertex_count(), fs.face_count(a), "case {case} a={a:?}");
            assert_eq!(d.is_orientable(), g.is_orientable(), "case {case} a={a:?}");
            assert!(d.partial_dual(a).is_isomorphic_to(&g).unwrap(), "case {case} a={a:?}");

            // Face counts of a partial dual read off the original graph
            // through a symmetric difference.
            let dfs = d.flag_system();
            for b in EdgeSet::all(n) {
                assert_eq!(
                    dfs.face_count(b),
                    fs.face_count(a.symmetric_difference(b)),
                    "case {case} a={a:?} b={b:?}"
                );
            }
        }
    }
    assert_budget(start, Duration::from_secs(120));
}

#[test]
fn c08_single_edge_duals_trade_one_power_of_w() {
    let start = Instant::now();

    let g = load("two_loops.rg");
    let dual_at_e1 = g.partial_dual(EdgeSet::EMPTY.with(0));
    let graded = graded_pd_genus_polynomial(&dual_at_e1, Mode::Faces).unwrap();
    assert_eq!(graded, poly2(["w", "z"], &[(1, 2, 1), (2, 1, 2), (1, 0, 1)]));
    assert_eq!(graded.to_string(), "w^2*z + 2*w*z^2 + z");

    // Dualizing one edge swaps the powers of w between the half of the
    // sum over subsets containing it and the half over the rest.
    for (name, g) in fixtures() {
        for e in 0..g.edge_count() {
            let (with_e, without_e) = graded_split(&g, e);
            let dual =
                graded_pd_genus_polynomial(&g.partial_dual(EdgeSet::EMPTY.with(e)), Mode::Faces)
                    .unwrap();
            let expected = &with_e.mul_monomial(&BigInt::from(1), (-1, 0))
                + &without_e.mul_monomial(&BigInt::from(1), (1, 0));
            assert_eq!(dual, expected, "{name} e={e}");
        }
    }

    assert_budget(start, Duration::from_secs(1));
}

#[test]
fn c09_cohomology_separates_graphs_with_equal_polynomials() {
    let start = Instant::now();
    let g = load("path2.rg");
    let d = g.partial_dual(EdgeSet::EMPTY.with(0));

    let p = graded_pd_genus_polynomial(&g, Mode::Faces).unwrap();
    assert_eq!(p, poly2(["w", "z"], &[(1, 2, 0), (2, 1, 0), (1, 0, 0)]));
    assert_eq!(p.to_string(), "w^2 + 2*w + 1");
    assert_eq!(graded_pd_genus_polynomial(&d, Mode::Faces).unwrap(), p);
    assert!(!d.is_isomorphic_to(&g).unwrap());

    // Frozen expectation: the pair shares the polynomial, yet the dual
    // keeps a free rank at the (0, 2) corner of H⁰ that the path lacks.
    let hd = bigraded_homology(&d).unwrap();
    assert_eq!(hd.get(0, 0, 2), Some(&group(1, 0)));
    let hg = bigraded_homology(&g).unwrap();
    assert_eq!(hg.get(0, 0, 2), None);

    assert_budget(start, Duration::from_secs(10));
}

#[test]
fn c10_edge_reordering_never_moves_the_cohomology() {
    let start = Instant::now();
    for (name, g) in fixtures() {
        let base = bigraded_homology(&g).unwrap();
        for order in permutations(g.edge_count()) {
            let h = bigraded_homology(&g.with_edge_order(&order)).unwrap();
            assert_eq!(h, base, "{name} order {order:?}");
        }
    }
    assert_budget(start, Duration::from_secs(30));
}

#[test]
fn c11_frobenius_relations_hold_on_the_full_basis() {
    let start = Instant::now();
    let checks = verify_frobenius_relations();
    assert!(!checks.is_empty());
    for c in &checks {
        assert!(c.ok, "{} failed: {:?}", c.name, c.counterexample);
    }
    assert_budget(start, Duration::from_secs(1));
}
