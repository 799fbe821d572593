//! Exact linear algebra over a scalar field: echelon forms, kernels,
//! characteristic polynomials, positive-semidefiniteness, projections and
//! subspace intersections.
//!
//! Positive-semidefiniteness is decided by the coefficient sign rule on the
//! characteristic polynomial: writing det(xI − M) = Σ_k (−1)^k c_k x^{n−k},
//! M is PSD iff every c_k ≥ 0 (c_k is the sum of the k×k principal minors).
//! Unlike pivoted decompositions this stays correct for singular PSD input.

use crate::error::{ensure, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rat, Scalar};
use num::bigint::BigInt;
use num::traits::{Signed, Zero};

/// A linear subspace in canonical form: the basis vectors, read as rows,
/// form a reduced row echelon matrix with no zero rows, so two equal
/// subspaces have structurally equal representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<S> {
    ambient: usize,
    /// ambient × dim; columns are the basis vectors.
    basis: Matrix<S>,
}

impl<S: Scalar> Subspace<S> {
    /// Canonicalizes any spanning set (dependent vectors collapse).
    pub fn from_spanning(ambient: usize, vectors: &[Vec<S>]) -> Self {
        assert!(vectors.iter().all(|v| v.len() == ambient), "vector length mismatch");
        let as_rows = Matrix::from_fn(vectors.len(), ambient, |r, c| vectors[r][c].clone());
        let (rref, pivots) = rref(&as_rows);
        let dim = pivots.len();
        let basis = Matrix::from_fn(ambient, dim, |r, c| rref.at(c, r).clone());
        Subspace { ambient, basis }
    }

    pub fn from_columns(m: &Matrix<S>) -> Self {
        let cols: Vec<Vec<S>> = (0..m.cols()).map(|c| m.col_vec(c)).collect();
        Subspace::from_spanning(m.rows(), &cols)
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace::from_spanning(ambient, &[])
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_columns(&Matrix::identity(ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// ambient × dim matrix whose columns are the canonical basis.
    pub fn basis_matrix(&self) -> &Matrix<S> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<S>> {
        (0..self.dim()).map(|c| self.basis.col_vec(c)).collect()
    }

    pub fn contains(&self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut vectors = self.basis_vectors();
        vectors.push(v.to_vec());
        Subspace::from_spanning(self.ambient, &vectors).dim() == self.dim()
    }

    /// Image under `m` (column spans transported), canonicalized.
    pub fn image_under(&self, m: &Matrix<S>) -> Subspace<S> {
        assert_eq!(m.cols(), self.ambient);
        Subspace::from_columns(&m.matmul(&self.basis))
    }
}

/// Reduced row echelon form; returns the transformed matrix and the pivot
/// column indices (one per nonzero row, ascending).
pub fn rref<S: Scalar>(m: &Matrix<S>) -> (Matrix<S>, Vec<usize>) {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !a.at(i, c).is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                let tmp = a.at(r, j).clone();
                a.set(r, j, a.at(pr, j).clone());
                a.set(pr, j, tmp);
            }
        }
        let inv = S::one() / a.at(r, c).clone();
        for j in 0..cols {
            a.set(r, j, a.at(r, j).clone() * inv.clone());
        }
        for i in 0..rows {
            if i != r && !a.at(i, c).is_zero() {
                let f = a.at(i, c).clone();
                for j in 0..cols {
                    let v = a.at(i, j).clone() - f.clone() * a.at(r, j).clone();
                    a.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    rref(m).1.len()
}

/// Canonical basis of `{x : Mx = 0}`; dimension is `cols − rank` exactly.
pub fn kernel_basis<S: Scalar>(m: &Matrix<S>) -> Subspace<S> {
    let cols = m.cols();
    let (r, pivots) = rref(m);
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; cols];
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = Some(row);
        }
        v
    };
    let mut vectors = Vec::new();
    for free in 0..cols {
        if pivot_set[free].is_some() {
            continue;
        }
        let mut x = vec![S::zero(); cols];
        x[free] = S::one();
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = -r.at(row, free).clone();
        }
        vectors.push(x);
    }
    Subspace::from_spanning(cols, &vectors)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse<S: Scalar>(m: &Matrix<S>) -> Option<Matrix<S>> {
    assert!(m.is_square(), "inverse of a non-square matrix");
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m.at(r, c).clone()
        } else if c - n == r {
            S::one()
        } else {
            S::zero()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |r, c| red.at(r, n + c).clone()))
}

/// Monic characteristic polynomial det(xI − M), coefficients in descending
/// power order (`v[0] = 1`). Faddeev–LeVerrier recurrence.
pub fn char_poly<S: Scalar>(m: &Matrix<S>) -> Result<Vec<S>> {
    ensure!(m.is_square(), "M square");
    let n = m.rows();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(S::one());
    if n == 0 {
        return Ok(coeffs);
    }
    let mut mk = m.clone();
    for k in 1..=n {
        let ck = -(mk.trace() / S::from_int(k as i64));
        coeffs.push(ck.clone());
        if k < n {
            let shifted = mk.add(&Matrix::identity(n).scale(&ck));
            mk = m.matmul(&shifted);
        }
    }
    Ok(coeffs)
}

/// Exact PSD test for symmetric (Hermitian) matrices via the char-poly
/// coefficient sign rule.
pub fn is_psd<S: Scalar>(m: &Matrix<S>) -> Result<bool> {
    ensure!(m.is_hermitian(), "M square, symmetric (or Hermitian for GaussRational)");
    let coeffs = char_poly(m)?;
    for (k, a) in coeffs.iter().enumerate() {
        // c_k = (−1)^k a_k must be ≥ 0; Hermitian input keeps them rational.
        let a_rat = a
            .to_rat()
            .expect("characteristic polynomial of a Hermitian matrix has rational coefficients");
        let c = if k % 2 == 0 { a_rat } else { -a_rat };
        if c.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Operator ℓ₂-norm at most 1, decided exactly as PSD(I − a*a).
pub fn norm_leq_one<S: Scalar>(a: &Matrix<S>) -> bool {
    let gram = a.star().matmul(a);
    let test = Matrix::identity(a.cols()).sub(&gram);
    is_psd(&test).expect("I − a*a is Hermitian by construction")
}

/// Every entry has nonnegative p-adic valuation (p divides no denominator).
pub fn p_integral(a: &Matrix<Rat>, p: u64) -> Result<bool> {
    ensure!(crate::arith::is_prime(p), "p prime");
    let p = BigInt::from(p);
    Ok(a.entries().iter().all(|e| (e.denom() % &p) != BigInt::zero()))
}

/// Exact orthogonal projection onto the span: symmetric (Hermitian),
/// idempotent, and fixes the basis columnwise.
pub fn projection_onto<S: Scalar>(b: &Subspace<S>) -> Matrix<S> {
    let n = b.ambient_dim();
    if b.dim() == 0 {
        return Matrix::zero(n, n);
    }
    let bm = b.basis_matrix();
    let gram = bm.star().matmul(bm);
    let gram_inv = inverse(&gram).expect("Gram matrix of an independent basis is invertible");
    bm.matmul(&gram_inv).matmul(&bm.star())
}

/// Canonical basis of span(B1) ∩ span(B2).
pub fn subspace_intersect<S: Scalar>(b1: &Subspace<S>, b2: &Subspace<S>) -> Result<Subspace<S>> {
    ensure!(b1.ambient_dim() == b2.ambient_dim(), "equal ambient dimensions");
    let n = b1.ambient_dim();
    let (r1, r2) = (b1.dim(), b2.dim());
    if r1 == 0 || r2 == 0 {
        return Ok(Subspace::zero(n));
    }
    // kernel of [B1 | −B2] gives coefficient pairs of coincident vectors
    let stacked = Matrix::from_fn(n, r1 + r2, |r, c| {
        if c < r1 {
            b1.basis_matrix().at(r, c).clone()
        } else {
            -b2.basis_matrix().at(r, c - r1).clone()
        }
    });
    let ker = kernel_basis(&stacked);
    let mut vectors = Vec::new();
    for k in ker.basis_vectors() {
        let mut v = vec![S::zero(); n];
        for (j, coeff) in k.iter().take(r1).enumerate() {
            for (vi, value) in v.iter_mut().enumerate() {
                *value = value.clone() + coeff.clone() * b1.basis_matrix().at(vi, j).clone();
            }
        }
        vectors.push(v);
    }
    Ok(Subspace::from_spanning(n, &vectors))
}
