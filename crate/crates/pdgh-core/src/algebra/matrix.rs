//! Dense matrices over Z[√3]. Only what elimination and the cochain
//! differentials need; nothing here is sparse or clever.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::QuadInt;

/// Row-major matrix of [`QuadInt`] entries with fixed dimensions.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QuadInt>,
}

impl QuadMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QuadMatrix { rows, cols, data: vec![QuadInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QuadInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QuadInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QuadMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &QuadInt {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: QuadInt) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &QuadInt) {
        let cur = self.get(r, c) + v;
        self.set(r, c, cur);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(QuadInt::is_zero)
    }

    pub fn mul(&self, rhs: &QuadMatrix) -> QuadMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = QuadMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * rhs.get(k, j);
                    out.add_to(i, j, &v);
                }
            }
        }
        out
    }

    /// Kronecker product: the matrix of `self ⊗ rhs` acting on tensor
    /// products, first factor most significant in the basis order.
    pub fn kronecker(&self, rhs: &QuadMatrix) -> QuadMatrix {
        let mut out = QuadMatrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a * rhs.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row(dst) −= q·row(src)
    pub fn row_sub(&mut self, dst: usize, src: usize, q: &QuadInt) {
        for c in 0..self.cols {
            let v = self.get(dst, c) - &(self.get(src, c) * q);
            self.set(dst, c, v);
        }
    }

    /// col(dst) −= q·col(src)
    pub fn col_sub(&mut self, dst: usize, src: usize, q: &QuadInt) {
        for r in 0..self.rows {
            let v = self.get(r, dst) - &(self.get(r, src) * q);
            self.set(r, dst, v);
        }
    }

    /// row(dst) += row(src)
    pub fn row_add(&mut self, dst: usize, src: usize) {
        for c in 0..self.cols {
            let v = self.get(dst, c) + self.get(src, c);
            self.set(dst, c, v);
        }
    }

    pub fn scale_row(&mut self, r: usize, u: &QuadInt) {
        for c in 0..self.cols {
            let v = self.get(r, c) * u;
            self.set(r, c, v);
        }
    }
}

impl fmt::Debug for QuadMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{}{}", self.get(r, c), if c + 1 < self.cols { ", " } else { "" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_against_identity() {
        let mut m = QuadMatrix::zeros(2, 3);
        m.set(0, 0, QuadInt::new(1, 1));
        m.set(1, 2, QuadInt::sqrt3());
        assert_eq!(QuadMatrix::identity(2).mul(&m), m);
        assert_eq!(m.mul(&QuadMatrix::identity(3)), m);
    }

    #[test]
    fn kronecker_with_identity_blocks() {
        let mut a = QuadMatrix::zeros(1, 2);
        a.set(0, 0, QuadInt::from_int(2));
        a.set(0, 1, QuadInt::sqrt3());
        let k = a.kronecker(&QuadMatrix::identity(2));
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k.get(0, 0), &QuadInt::from_int(2));
        assert_eq!(k.get(1, 3), &QuadInt::sqrt3());
        assert!(k.get(0, 1).is_zero() && k.get(1, 0).is_zero());
        // mixed product: (A⊗I)(I⊗C) = A⊗C
        let mut c = QuadMatrix::zeros(2, 1);
        c.set(0, 0, QuadInt::new(0, 1));
        c.set(1, 0, QuadInt::new(1, 1));
        let lhs = a.kronecker(&QuadMatrix::identity(2)).mul(&QuadMatrix::identity(2).kronecker(&c));
        assert_eq!(lhs, a.kronecker(&c));
    }

    #[test]
    fn empty_dimensions() {
        let a = QuadMatrix::zeros(0, 3);
        let b = QuadMatrix::zeros(3, 2);
        let c = a.mul(&b);
        assert_eq!((c.rows(), c.cols()), (0, 2));
        assert!(QuadMatrix::zeros(0, 0).is_zero());
    }
}
