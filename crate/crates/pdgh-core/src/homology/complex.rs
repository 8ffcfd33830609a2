//! The cochain complex of the subset cube.
//!
//! Each edge subset A contributes the module
//!
//! > N^⊗|A| ⊗ M^⊗F(A) ⊗ M^⊗F(Aᶜ)
//!
//! with circle factors ordered by minimal corner arc, shifted so that its
//! second grading reads k = (internal degree) + 2|A|. The first grading j
//! counts y's in the N factors. The differential sums the cube edges
//! A → A ∪ {e} with sign (−1)^(#chosen edges before e); each cube edge
//! prepends 1_N, applies the merge/split/half map to the circles of A and,
//! independently, to the circles of Aᶜ (there e is removed). Both gradings
//! are preserved, so the complex decomposes into finite blocks indexed by
//! (j, k) and the cohomological degree i = |A| runs 0..=|E|.
//!
//! Basis monomials are packed into integers: mixed radix (y-bits, base-3
//! exponents of the A circles, base-3 exponents of the Aᶜ circles), first
//! tensor factor most significant. Within one (j, k, i) the basis is
//! ordered by subset, then by packed code.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::{BiLaurent, QuadInt, QuadMatrix};
use crate::polynomial::CapExceeded;
use crate::ribbon::{CirclePartition, EdgeSet, RibbonGraph};

use super::cube::{apply_edge_map, edge_map_spec, flank_arcs, sign_exponent};
use super::frobenius::{m_degree, M_RANK};

/// Default refusal point for the cube: 2^|E| subsets, each carrying a
/// tensor product of three-dimensional factors, grow fast.
pub const HOMOLOGY_EDGE_CAP: usize = 6;

/// Mixed-radix layout of one subset's monomials.
struct Shape {
    nv: usize,
    nw: usize,
    pow3w: u64,
    pow3vw: u64,
}

impl Shape {
    fn new(nv: usize, nw: usize) -> Self {
        let pow3w = (M_RANK as u64).pow(nw as u32);
        Shape { nv, nw, pow3w, pow3vw: pow3w * (M_RANK as u64).pow(nv as u32) }
    }

    fn pack(&self, nbits: u32, v: &[u8], w: &[u8]) -> u64 {
        let fold = |ds: &[u8]| ds.iter().fold(0u64, |acc, &d| acc * M_RANK as u64 + d as u64);
        (nbits as u64) * self.pow3vw + fold(v) * self.pow3w + fold(w)
    }
}

/// All base-3 digit vectors of the given length, ascending as the numbers
/// they spell with the first digit most significant.
fn digit_vectors(len: usize) -> Vec<Vec<u8>> {
    let total = M_RANK.pow(len as u32);
    let mut out = Vec::with_capacity(total);
    for mut n in 0..total {
        let mut v = alloc::vec![0u8; len];
        for t in (0..len).rev() {
            v[t] = (n % M_RANK) as u8;
            n /= M_RANK;
        }
        out.push(v);
    }
    out
}

/// Basis of one cohomological level of one (j, k) block: a sorted run of
/// packed codes per contributing subset.
#[derive(Default)]
struct LevelBasis {
    subsets: Vec<u32>,
    runs: Vec<Vec<u64>>,
    offsets: Vec<usize>,
    total: usize,
}

impl LevelBasis {
    fn push_run(&mut self, bits: u32, codes: Vec<u64>) {
        debug_assert!(self.subsets.last().is_none_or(|&b| b < bits));
        self.subsets.push(bits);
        self.offsets.push(self.total);
        self.total += codes.len();
        self.runs.push(codes);
    }

    fn index_of(&self, bits: u32, code: u64) -> usize {
        let r = self.subsets.binary_search(&bits).expect("subset contributes to this block");
        let p = self.runs[r].binary_search(&code).expect("code is a basis monomial");
        self.offsets[r] + p
    }
}

/// Column-major sparse matrix over Z[√3]. Cube differentials only carry
/// the coefficients ±1, ±√3 and ±3, so entries hold machine integers
/// (a, b) meaning a + b√3.
pub struct SparseMap {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, i32, i32)>>,
}

impl SparseMap {
    pub(crate) fn new(rows: usize, cols: usize) -> Self {
        SparseMap { rows, cols, columns: alloc::vec![Vec::new(); cols] }
    }

    pub(crate) fn push(&mut self, r: usize, c: usize, a: i32, b: i32) {
        self.columns[c].push((r as u32, a, b));
    }

    pub(crate) fn finish(&mut self) {
        for col in &mut self.columns {
            col.sort_unstable_by_key(|&(r, _, _)| r);
            debug_assert!(col.windows(2).all(|w| w[0].0 < w[1].0), "duplicate entry");
        }
    }

    pub(crate) fn column(&self, c: usize) -> &[(u32, i32, i32)] {
        &self.columns[c]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> QuadMatrix {
        let mut m = QuadMatrix::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, a, b) in col {
                m.set(r as usize, c, QuadInt::new(a, b));
            }
        }
        m
    }

    /// Whether `after ∘ before` vanishes, computed column by column
    /// without densifying.
    pub fn compose_is_zero(after: &SparseMap, before: &SparseMap) -> bool {
        assert_eq!(after.cols, before.rows, "shape mismatch");
        let mut acc: BTreeMap<u32, (i64, i64)> = BTreeMap::new();
        for col in &before.columns {
            acc.clear();
            for &(mid, a1, b1) in col {
                for &(r, a2, b2) in &after.columns[mid as usize] {
                    let e = acc.entry(r).or_insert((0, 0));
                    e.0 += a1 as i64 * a2 as i64 + 3 * b1 as i64 * b2 as i64;
                    e.1 += a1 as i64 * b2 as i64 + b1 as i64 * a2 as i64;
                }
            }
            if acc.values().any(|&(a, b)| a != 0 || b != 0) {
                return false;
            }
        }
        true
    }
}

/// One (j, k) block: module ranks per cohomological level and the
/// differentials between consecutive levels.
pub struct BlockComplex {
    dims: Vec<usize>,
    maps: Vec<SparseMap>,
}

impl BlockComplex {
    /// Ranks of levels 0..=|E|.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The differential out of level i.
    pub fn map(&self, i: usize) -> &SparseMap {
        &self.maps[i]
    }
}

pub struct Complex {
    edges: usize,
    blocks: BTreeMap<(i64, i64), BlockComplex>,
}

impl Complex {
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn blocks(&self) -> &BTreeMap<(i64, i64), BlockComplex> {
        &self.blocks
    }

    /// Σ (−1)^i p^j q^k over the whole basis, no homology taken.
    pub fn euler_characteristic(&self) -> BiLaurent {
        let mut out = BiLaurent::zero(["p", "q"]);
        for (&(j, k), block) in &self.blocks {
            let mut chi = 0i64;
            for (i, &d) in block.dims.iter().enumerate() {
                chi += if i % 2 == 0 { d as i64 } else { -(d as i64) };
            }
            out.add_term((j, k), BigInt::from(chi));
        }
        out
    }

    pub fn d_squared_is_zero(&self) -> bool {
        self.blocks.values().all(|block| {
            (1..block.maps.len())
                .all(|i| SparseMap::compose_is_zero(&block.maps[i], &block.maps[i - 1]))
        })
    }
}

pub fn build_complex(g: &RibbonGraph) -> Result<Complex, CapExceeded> {
    build_complex_with_cap(g, HOMOLOGY_EDGE_CAP)
}

pub fn build_complex_with_cap(g: &RibbonGraph, cap: usize) -> Result<Complex, CapExceeded> {
    let n = g.edge_count();
    if n > cap {
        return Err(CapExceeded { edges: n, cap });
    }
    let fs = g.flag_system();
    let mask = if n == 0 { 0u32 } else { (1u32 << n) - 1 };

    let parts: Vec<CirclePartition> =
        (0..=mask).map(|b| fs.circle_partition(EdgeSet::from_bits(b))).collect();
    let shapes: Vec<Shape> = (0..=mask)
        .map(|b| {
            let comp = (!b) & mask;
            Shape::new(parts[b as usize].circle_count(), parts[comp as usize].circle_count())
        })
        .collect();
    let max_circles = shapes.iter().map(|s| s.nv.max(s.nw)).max().unwrap_or(0);
    let digits: Vec<Vec<Vec<u8>>> = (0..=max_circles).map(digit_vectors).collect();

    // Pass 1: enumerate every monomial of every subset, grouped by (j, k).
    let mut bases: BTreeMap<(i64, i64), Vec<LevelBasis>> = BTreeMap::new();
    for bits in 0..=mask {
        let i = bits.count_ones() as usize;
        let sh = &shapes[bits as usize];
        let mut local: BTreeMap<(i64, i64), Vec<u64>> = BTreeMap::new();
        for nbits in 0..1u32 << i {
            let j = nbits.count_ones() as i64;
            for (vi, v) in digits[sh.nv].iter().enumerate() {
                let kv = v.iter().map(|&d| m_degree(d)).sum::<i64>();
                for (wi, w) in digits[sh.nw].iter().enumerate() {
                    let k = kv + w.iter().map(|&d| m_degree(d)).sum::<i64>() + 2 * i as i64;
                    let code = (nbits as u64) * sh.pow3vw + (vi as u64) * sh.pow3w + wi as u64;
                    local.entry((j, k)).or_default().push(code);
                }
            }
        }
        for (jk, codes) in local {
            bases.entry(jk).or_insert_with(|| (0..=n).map(|_| LevelBasis::default()).collect())[i]
                .push_run(bits, codes);
        }
    }

    let mut blocks: BTreeMap<(i64, i64), BlockComplex> = bases
        .iter()
        .map(|(&jk, levels)| {
            let dims: Vec<usize> = levels.iter().map(|l| l.total).collect();
            let maps = (0..n).map(|i| SparseMap::new(dims[i + 1], dims[i])).collect();
            (jk, BlockComplex { dims, maps })
        })
        .collect();

    // Pass 2: walk the cube edges and fill in the differentials.
    let flanks: Vec<Vec<usize>> = (0..n).map(|e| flank_arcs(g, &fs, e)).collect();
    for bits in 0..=mask {
        let i = bits.count_ones() as usize;
        let sh = &shapes[bits as usize];
        for e in (0..n).filter(|&e| bits & (1 << e) == 0) {
            let bbits = bits | 1 << e;
            let shb = &shapes[bbits as usize];
            let spec_v = edge_map_spec(&parts[bits as usize], &parts[bbits as usize], &flanks[e]);
            let spec_w = edge_map_spec(
                &parts[((!bits) & mask) as usize],
                &parts[((!bbits) & mask) as usize],
                &flanks[e],
            );
            let negate = sign_exponent(bits, e) % 2 == 1;

            for nbits in 0..1u32 << i {
                let j = nbits.count_ones() as i64;
                for (vi, v) in digits[sh.nv].iter().enumerate() {
                    let kv = v.iter().map(|&d| m_degree(d)).sum::<i64>();
                    let tv = apply_edge_map(&spec_v, v, shb.nv);
                    if tv.is_empty() {
                        continue;
                    }
                    for (wi, w) in digits[sh.nw].iter().enumerate() {
                        let k = kv + w.iter().map(|&d| m_degree(d)).sum::<i64>() + 2 * i as i64;
                        let tw = apply_edge_map(&spec_w, w, shb.nw);
                        if tw.is_empty() {
                            continue;
                        }
                        let levels = &bases[&(j, k)];
                        let col = levels[i].index_of(
                            bits,
                            (nbits as u64) * sh.pow3vw + (vi as u64) * sh.pow3w + wi as u64,
                        );
                        let map = &mut blocks.get_mut(&(j, k)).unwrap().maps[i];
                        for (cv, v2) in &tv {
                            for (cw, w2) in &tw {
                                let c = cv * cw;
                                let (mut a, mut b) = (
                                    c.a().to_i32().expect("small coefficient"),
                                    c.b().to_i32().expect("small coefficient"),
                                );
                                if negate {
                                    a = -a;
                                    b = -b;
                                }
                                let row =
                                    levels[i + 1].index_of(bbits, shb.pack(nbits << 1, v2, w2));
                                map.push(row, col, a, b);
                            }
                        }
                    }
                }
            }
        }
    }

    for block in blocks.values_mut() {
        for map in &mut block.maps {
            map.finish();
        }
    }
    Ok(Complex { edges: n, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::e_tilde;
    use crate::ribbon::tests_support::{isolated, loop_graph, path2, two_loops};

    fn level_total(c: &Complex, i: usize) -> usize {
        c.blocks().values().map(|b| b.dims()[i]).sum()
    }

    #[test]
    fn two_loops_level_ranks() {
        let c = build_complex(&two_loops()).unwrap();
        assert_eq!(level_total(&c, 0), 9);
        assert_eq!(level_total(&c, 1), 108);
        assert_eq!(level_total(&c, 2), 36);
    }

    #[test]
    fn differential_squares_to_zero() {
        for g in [two_loops(), path2(), isolated(), loop_graph(false), loop_graph(true)] {
            let c = build_complex(&g).unwrap();
            assert!(c.d_squared_is_zero(), "{g:?}");
        }
    }

    #[test]
    fn euler_characteristic_of_a_vertex_is_a_squared_triangle() {
        let c = build_complex(&isolated()).unwrap();
        let mut t2 = BiLaurent::zero(["p", "q"]);
        for (e, c) in [(-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1)] {
            t2.add_term((0, e), BigInt::from(c));
        }
        assert_eq!(c.euler_characteristic(), t2);
    }

    #[test]
    fn euler_characteristic_of_two_loops() {
        let c = build_complex(&two_loops()).unwrap();
        let mut want = BiLaurent::zero(["p", "q"]);
        let rows: [(i64, &[(i64, i64)]); 3] = [
            (0, &[(-2, 1), (0, -3), (1, -10), (2, -12), (3, -10), (4, -3), (6, 1)]),
            (1, &[(-1, -2), (0, -6), (1, -12), (2, -12), (3, -8), (5, 2), (6, 2)]),
            (2, &[(2, 1), (3, 2), (4, 3), (5, 2), (6, 1)]),
        ];
        for (j, terms) in rows {
            for &(k, c) in terms {
                want.add_term((j, k), BigInt::from(c));
            }
        }
        assert_eq!(c.euler_characteristic(), want);
    }

    #[test]
    fn euler_characteristic_is_the_substituted_polynomial() {
        // w ↦ −q²(1+p), z ↦ (q⁻¹+1+q)⁻¹ turns the subset sum into the
        // cube's graded rank count.
        for g in [two_loops(), path2(), loop_graph(true)] {
            let chi = build_complex(&g).unwrap().euler_characteristic();
            let mut by_subset = BiLaurent::zero(["p", "q"]);
            let t = {
                let mut t = BiLaurent::zero(["p", "q"]);
                for e in [-1, 0, 1] {
                    t.add_term((0, e), BigInt::from(1));
                }
                t
            };
            let fs = g.flag_system();
            for a in EdgeSet::all(g.edge_count()) {
                let mut w = BiLaurent::zero(["p", "q"]);
                w.add_term((0, 2), BigInt::from(-1));
                w.add_term((1, 2), BigInt::from(-1));
                let faces = fs.circle_partition(a).circle_count()
                    + fs.circle_partition(a.complement(g.edge_count())).circle_count();
                by_subset = &by_subset + &(&w.pow(a.len() as u32) * &t.pow(faces as u32));
            }
            assert_eq!(chi, by_subset, "{g:?}");
            assert!(!e_tilde(&g).unwrap().is_zero());
        }
    }

    #[test]
    fn cap_refuses_big_graphs() {
        let g = crate::ribbon::tests_support::bouquet(7);
        assert_eq!(build_complex(&g).err(), Some(CapExceeded { edges: 7, cap: HOMOLOGY_EDGE_CAP }));
    }
}
