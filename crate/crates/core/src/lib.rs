//! Exact-arithmetic toolkit for matrix props over arithmetic coefficient
//! domains.
//!
//! The crate provides, over exact rationals and Gaussian rationals:
//!
//! * matrices with kernels, projections, characteristic polynomials, exact
//!   positive-semidefiniteness and p-adic integrality ([`matrix`], [`linalg`]);
//! * the prop layer: interleaving permutations, commutativity laws, and a
//!   sampled axiom-suite runner for any carrier ([`perm`], [`prop`]);
//! * the named concrete props (partial permutation matrices, signed variants,
//!   p-integral and norm-bounded matrices) with GL enumeration and Einstein
//!   addition ([`spp`], [`props`]);
//! * the residue prop of partial isometries at the archimedean place
//!   ([`residue`]);
//! * the Witt ring on the cyclotomic basis with Frobenius, lambda and trace
//!   structure, Ramanujan sums, and truncated zeta evaluations ([`witt`]);
//! * the compactified arithmetic site: points, opens, section membership,
//!   global-section enumeration, cyclotomic factorization and local zeta
//!   factors ([`site`], [`cyclo`]).
//!
//! All algebraic values are immutable and all operations are pure functions,
//! safe to share between threads.

pub mod arith;
pub mod cyclo;
pub mod error;
pub mod gen;
pub mod linalg;
pub mod matrix;
pub mod perm;
pub mod prop;
pub mod props;
pub mod residue;
pub mod scalar;
pub mod site;
pub mod spp;
pub mod witt;

pub use error::{Precondition, Result};
pub use matrix::Matrix;
pub use scalar::{GaussRat, Rat, Ring, Scalar};
