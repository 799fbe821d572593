//! Permutations of `{1,…,N}` and the interleaving permutation used by the
//! commutativity laws.
//!
//! Permutations are 1-indexed throughout, matching the index algebra of the
//! interleaving formula; the text form is the one-line image list.

use crate::error::{ensure, Precondition, Result};
use crate::matrix::Matrix;
use crate::scalar::Ring;
use num::traits::One;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// `images[i-1] = σ(i)`, values a bijection of `1..=len`.
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            ensure!(v >= 1 && v <= n && !seen[v], "images is a bijection of {{1,…,N}}");
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "size mismatch in composition");
        Permutation {
            images: (1..=self.size()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Matrix `E` with `E·e_j = e_{σ(j)}`, so that embedding is functorial:
    /// `embed(τ∘ρ) = embed(τ)·embed(ρ)`.
    pub fn to_matrix<S: Ring>(&self) -> Matrix<S> {
        let n = self.size();
        let mut m = Matrix::zero(n, n);
        for j in 1..=n {
            m.set(self.apply(j) - 1, j - 1, S::one());
        }
        m
    }

    pub fn parse(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Precondition::new(format!("bad permutation image `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.images {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// The interleaving permutation of `m·n` letters:
/// `σ_{m,n}((j−1)·m + i) = (i−1)·n + j` for `1 ≤ i ≤ m`, `1 ≤ j ≤ n`.
pub fn sigma_perm(m: usize, n: usize) -> Result<Permutation> {
    ensure!(m >= 1 && n >= 1, "m, n ≥ 1");
    let mut images = vec![0; m * n];
    for i in 1..=m {
        for j in 1..=n {
            images[(j - 1) * m + i - 1] = (i - 1) * n + j;
        }
    }
    Ok(Permutation { images })
}

/// Block transposition on `k+l` letters: the first `k` move past the last
/// `l`. This is the symmetry that swaps the two summands of a direct sum.
pub fn block_swap(k: usize, l: usize) -> Permutation {
    let mut images = Vec::with_capacity(k + l);
    for i in 1..=k {
        images.push(i + l);
    }
    for j in 1..=l {
        images.push(j);
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;

    #[test]
    fn sigma_2_3_table() {
        let s = sigma_perm(2, 3).unwrap();
        assert_eq!(s.to_string(), "1 4 2 5 3 6");
    }

    #[test]
    fn sigma_inverse_pair() {
        let s32 = sigma_perm(3, 2).unwrap();
        assert_eq!(s32.to_string(), "1 3 5 2 4 6");
        assert_eq!(s32, sigma_perm(2, 3).unwrap().inverse());
        for m in 1..=8 {
            for n in 1..=8 {
                let fwd = sigma_perm(m, n).unwrap();
                let bwd = sigma_perm(n, m).unwrap();
                assert!(fwd.compose(&bwd).is_identity(), "sigma {m},{n}");
            }
        }
    }

    #[test]
    fn sigma_degenerate_is_identity() {
        for k in 1..=6 {
            assert!(sigma_perm(1, k).unwrap().is_identity());
            assert!(sigma_perm(k, 1).unwrap().is_identity());
        }
        assert!(sigma_perm(0, 3).is_err());
    }

    #[test]
    fn group_laws() {
        let a = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let b = Permutation::from_images(vec![1, 3, 2]).unwrap();
        let c = Permutation::from_images(vec![3, 2, 1]).unwrap();
        assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
        assert_eq!(a.compose(&Permutation::identity(3)), a);
    }

    #[test]
    fn embedding_functorial() {
        let a = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let b = Permutation::from_images(vec![1, 3, 2]).unwrap();
        let ma: Matrix<Rat> = a.to_matrix();
        let mb: Matrix<Rat> = b.to_matrix();
        assert_eq!(a.compose(&b).to_matrix::<Rat>(), ma.matmul(&mb));
        assert_eq!(a.inverse().to_matrix::<Rat>(), ma.transpose());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![1, 1, 3]).is_err());
        assert!(Permutation::from_images(vec![0, 1]).is_err());
        assert!(Permutation::parse("2 1 4 3").is_ok());
        assert!(Permutation::parse("2 x").is_err());
    }
}
