//! JSON views of polynomials, cohomology tables and graphs.
//!
//! Shapes are stable and meant for machine consumption:
//!
//! - polynomial: `{"polynomial": [[coeff, [e0, e1]], ...]}` with terms in
//!   display order (descending total degree, then lexicographic) and
//!   coefficients as exact JSON numbers. One-variable polynomials use
//!   `e0 = 0`.
//! - cohomology: `{"groups": [{"i", "j", "k", "free", "torsion"}, ...]}`
//!   where each torsion summand records the size of the quotient and the
//!   Hermite normal form of its ideal in the basis (1, √3).
//! - graph: `{"graph": "<file format text>"}`.

use num_bigint::BigInt;
use pdgh_core::algebra::{BiLaurent, LaurentPoly};
use pdgh_core::homology::BigradedGroups;
use pdgh_core::ribbon::RibbonGraph;
use serde_json::{json, Number, Value};

use crate::format::serialize;

/// Exact integer as a JSON number, however many digits it takes.
fn number(n: &BigInt) -> Number {
    serde_json::from_str(&n.to_string()).expect("an integer literal is a JSON number")
}

pub fn bilaurent_value(p: &BiLaurent) -> Value {
    let terms: Vec<Value> =
        p.display_order().into_iter().map(|((e0, e1), c)| json!([number(&c), [e0, e1]])).collect();
    json!({ "polynomial": terms })
}

pub fn laurent_value(p: &LaurentPoly) -> Value {
    let mut terms: Vec<Value> = p.iter().map(|(e, c)| json!([number(c), [0, e]])).collect();
    terms.reverse();
    json!({ "polynomial": terms })
}

pub fn groups_value(h: &BigradedGroups) -> Value {
    let groups: Vec<Value> = h
        .iter()
        .map(|((i, j, k), entry)| {
            let torsion: Vec<Value> = entry
                .torsion
                .iter()
                .map(|t| {
                    let rows: Vec<Vec<Number>> =
                        t.hnf().iter().map(|row| row.iter().map(number).collect()).collect();
                    json!({ "size": number(t.quotient_size()), "hnf": rows })
                })
                .collect();
            json!({ "i": i, "j": j, "k": k, "free": entry.free, "torsion": torsion })
        })
        .collect();
    json!({ "groups": groups })
}

pub fn graph_value(g: &RibbonGraph) -> Value {
    json!({ "graph": serialize(g) })
}
