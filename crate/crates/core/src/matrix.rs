//! Rectangular matrices over an exact coefficient ring.
//!
//! Zero-dimensional shapes (`n×0`, `0×m`) are first-class: they are the
//! units of the block direct sum, and a product through a zero dimension is
//! the zero matrix of the outer shape.
//!
//! Text form: `n m ; e11 e12 … ; e21 …` with one group per row. Rationals
//! print as `p/q`, Gaussian rationals as `p/q+r/si`.

use crate::error::{ensure, Precondition, Result};
use crate::scalar::{Ring, Scalar};
use num::traits::Zero;
use std::fmt;
use std::ops::Mul;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>, // row-major, rows*cols entries
}

impl<S: Ring> Matrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Self {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count {} does not match shape {rows}x{cols}",
            entries.len()
        );
        Matrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Matrix::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| S::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        debug_assert!(r < self.rows && c < self.cols);
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn row_vec(&self, r: usize) -> Vec<S> {
        (0..self.cols).map(|c| self.at(r, c).clone()).collect()
    }

    pub fn col_vec(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn map<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix::new(self.rows, self.cols, self.entries.iter().map(&mut f).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in add");
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() + other.at(r, c).clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sub");
        Matrix::from_fn(self.rows, self.cols, |r, c| {
            self.at(r, c).clone() - other.at(r, c).clone()
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|e| -e.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|e| k.clone() * e.clone())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in product: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        Matrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                acc = acc + self.at(r, k).clone() * other.at(k, c).clone();
            }
            acc
        })
    }

    /// Block direct sum, `self` in the top-left corner.
    pub fn oplus(&self, other: &Self) -> Self {
        let (n1, m1) = self.shape();
        let (n2, m2) = other.shape();
        Matrix::from_fn(n1 + n2, m1 + m2, |r, c| {
            if r < n1 && c < m1 {
                self.at(r, c).clone()
            } else if r >= n1 && c >= m1 {
                other.at(r - n1, c - m1).clone()
            } else {
                S::zero()
            }
        })
    }

    /// Kronecker product, `self` indexing the coarse blocks.
    pub fn kron(&self, other: &Self) -> Self {
        let (n1, m1) = self.shape();
        let (n2, m2) = other.shape();
        Matrix::from_fn(n1 * n2, m1 * m2, |r, c| {
            self.at(r / n2, c / m2).clone() * other.at(r % n2, c % m2).clone()
        })
    }

    pub fn trace(&self) -> S {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut acc = S::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }
}

impl<S: Scalar> Matrix<S> {
    /// Conjugate transpose; coincides with `transpose` over the rationals.
    pub fn star(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).conj())
    }

    /// Equal to its own conjugate transpose.
    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.star()
    }

    pub fn from_rat_matrix(m: &Matrix<crate::scalar::Rat>) -> Self {
        m.map(|e| S::from_rat(e.clone()))
    }

    /// `Some` when every entry is rational.
    pub fn to_rat_matrix(&self) -> Option<Matrix<crate::scalar::Rat>> {
        let mut out = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            out.push(e.to_rat()?);
        }
        Some(Matrix::new(self.rows, self.cols, out))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let groups: Vec<&str> = s.split(';').collect();
        let header: Vec<&str> = groups[0].split_whitespace().collect();
        ensure!(
            header.len() == 2,
            "matrix text must start with `n m`, got `{}`",
            groups[0].trim()
        );
        let rows: usize = header[0]
            .parse()
            .map_err(|_| Precondition::new(format!("bad row count `{}`", header[0])))?;
        let cols: usize = header[1]
            .parse()
            .map_err(|_| Precondition::new(format!("bad column count `{}`", header[1])))?;
        let mut entries = Vec::with_capacity(rows * cols);
        for g in &groups[1..] {
            for tok in g.split_whitespace() {
                entries.push(S::parse(tok).map_err(Precondition::new)?);
            }
        }
        ensure!(
            entries.len() == rows * cols,
            "matrix text has {} entries, shape {}x{} needs {}",
            entries.len(),
            rows,
            cols,
            rows * cols
        );
        Ok(Matrix::new(rows, cols, entries))
    }
}

impl<S: Ring> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.rows, self.cols)?;
        if self.rows * self.cols == 0 {
            return Ok(());
        }
        for r in 0..self.rows {
            write!(f, " ;")?;
            for c in 0..self.cols {
                write!(f, " {}", self.at(r, c))?;
            }
        }
        Ok(())
    }
}

impl<S: Ring> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        self.matmul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int, GaussRat, Rat};

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix<Rat> {
        Matrix::from_rows(vec![vec![rat_int(a), rat_int(b)], vec![rat_int(c), rat_int(d)]])
    }

    #[test]
    fn transpose_involution() {
        let a = m2(1, 2, 3, 4);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn star_conjugates() {
        let z = GaussRat::from_parts(1, 2, 1, 3);
        let a = Matrix::from_rows(vec![vec![z.clone()]]);
        assert_eq!(a.star().at(0, 0), &z.conj());
        assert_eq!(a.star().star(), a);
    }

    #[test]
    fn zero_dim_shapes() {
        let a: Matrix<Rat> = Matrix::zero(0, 3);
        let b: Matrix<Rat> = Matrix::zero(3, 0);
        assert_eq!(a.shape(), (0, 3));
        // product through a zero dimension is the zero matrix of outer shape
        let p = b.matmul(&a);
        assert_eq!(p.shape(), (3, 3));
        assert!(p.is_zero_matrix());
        // the 0x0 matrix is the oplus unit
        let e: Matrix<Rat> = Matrix::zero(0, 0);
        let c = m2(1, 2, 3, 4);
        assert_eq!(c.oplus(&e), c);
        assert_eq!(e.oplus(&c), c);
    }

    #[test]
    fn oplus_blocks() {
        let a = m2(1, 0, 0, 1);
        let b = Matrix::from_rows(vec![vec![rat_int(5)]]);
        let s = a.oplus(&b);
        assert_eq!(s.shape(), (3, 3));
        assert_eq!(s.at(2, 2), &rat_int(5));
        assert_eq!(s.at(0, 2), &rat_int(0));
    }

    #[test]
    fn kron_shape_and_values() {
        let a = Matrix::from_rows(vec![vec![rat_int(1), rat_int(2)]]);
        let b = Matrix::from_rows(vec![vec![rat_int(3)], vec![rat_int(4)]]);
        let k = a.kron(&b);
        assert_eq!(k.shape(), (2, 2));
        assert_eq!(k, Matrix::from_rows(vec![
            vec![rat_int(3), rat_int(6)],
            vec![rat_int(4), rat_int(8)],
        ]));
    }

    #[test]
    fn display_parse_roundtrip() {
        let a = Matrix::from_rows(vec![
            vec![rat(1, 2), rat_int(-3)],
            vec![rat_int(0), rat(7, 5)],
        ]);
        let s = a.to_string();
        assert_eq!(s, "2 2 ; 1/2 -3 ; 0 7/5");
        assert_eq!(Matrix::<Rat>::parse(&s).unwrap(), a);

        let g = Matrix::from_rows(vec![vec![GaussRat::from_parts(1, 2, -3, 4)]]);
        let gs = g.to_string();
        assert_eq!(Matrix::<GaussRat>::parse(&gs).unwrap(), g);

        let e: Matrix<Rat> = Matrix::zero(0, 2);
        assert_eq!(Matrix::<Rat>::parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn parse_rejects_bad_counts() {
        assert!(Matrix::<Rat>::parse("2 2 ; 1 2 ; 3").is_err());
        assert!(Matrix::<Rat>::parse("x 2 ; 1 2").is_err());
    }
}
