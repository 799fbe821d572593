//! Scalar domains: exact rationals and Gaussian rationals.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator (the representation the backing type guarantees on
//! construction). `GaussRat` pairs two of them as real and imaginary parts.
//! Every matrix fixes one scalar kind; the [`Ring`] / [`Scalar`] traits let
//! the matrix and linear-algebra code stay generic over the kind.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

/// Exact rational scalar, always in canonical (reduced) form.
pub type Rat = BigRational;

/// `n/d` as a `Rat`; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer embedded as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Coefficient domains a matrix can carry: commutative or not, but with
/// exact equality. Everything a prop carrier needs short of division.
pub trait Ring:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Eq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
{
}

/// Exact field scalars: the two coefficient kinds of the library.
pub trait Scalar: Ring + Div<Output = Self> {
    /// Complex conjugate (identity on rationals).
    fn conj(&self) -> Self;
    fn from_rat(r: Rat) -> Self;
    /// `Some` exactly when the value lies in the rational subfield.
    fn to_rat(&self) -> Option<Rat>;
    /// Squared modulus, always a nonneg rational.
    fn norm_sqr(&self) -> Rat;
    fn parse(s: &str) -> std::result::Result<Self, String>;

    fn from_int(k: i64) -> Self {
        Self::from_rat(rat_int(k))
    }
}

impl Scalar for Rat {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rat(r: Rat) -> Self {
        r
    }

    fn to_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }

    fn norm_sqr(&self) -> Rat {
        self * self
    }

    fn parse(s: &str) -> std::result::Result<Self, String> {
        Rat::from_str(s.trim()).map_err(|e| format!("bad rational `{s}`: {e}"))
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn from_parts(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> Self {
        GaussRat::new(rat(re_n, re_d), rat(im_n, im_d))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat::new(Rat::zero(), Rat::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Display for GaussRat {
    /// Canonical dual-part form `re+imi` / `re-imi`, e.g. `1/2+3/4i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, -&self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        GaussRat::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: GaussRat) -> GaussRat {
        let d = rhs.norm_sqr();
        assert!(!d.is_zero(), "division by zero GaussRat");
        GaussRat::new(
            (&self.re * &rhs.re + &self.im * &rhs.im) / &d,
            (&self.im * &rhs.re - &self.re * &rhs.im) / &d,
        )
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        GaussRat::new(Rat::zero(), Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        GaussRat::new(Rat::one(), Rat::zero())
    }
}

impl Scalar for GaussRat {
    fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -&self.im)
    }

    fn from_rat(r: Rat) -> Self {
        GaussRat::new(r, Rat::zero())
    }

    fn to_rat(&self) -> Option<Rat> {
        self.is_real().then(|| self.re.clone())
    }

    fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    fn parse(s: &str) -> std::result::Result<Self, String> {
        parse_gauss(s)
    }
}

/// Parses `re+imi`, `re-imi`, a bare rational, or a pure-imaginary `imi`.
fn parse_gauss(s: &str) -> std::result::Result<GaussRat, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty Gaussian rational".into());
    }
    if !t.ends_with('i') {
        return Ok(GaussRat::from_rat(<Rat as Scalar>::parse(t)?));
    }
    let body = &t[..t.len() - 1];
    // split point: last '+'/'-' that is not leading and not right after '/'
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let b = bytes[idx];
        if (b == b'+' || b == b'-') && bytes[idx - 1] != b'/' {
            split = Some(idx);
            break;
        }
    }
    match split {
        Some(idx) => {
            let re = <Rat as Scalar>::parse(&body[..idx])?;
            let sign = if bytes[idx] == b'-' { -1 } else { 1 };
            let im_str = &body[idx + 1..];
            let im = if im_str.is_empty() {
                Rat::one()
            } else {
                <Rat as Scalar>::parse(im_str)?
            };
            Ok(GaussRat::new(re, im * rat_int(sign)))
        }
        None => {
            let im = if body.is_empty() || body == "-" {
                if body == "-" {
                    -Rat::one()
                } else {
                    Rat::one()
                }
            } else {
                <Rat as Scalar>::parse(body)?
            };
            Ok(GaussRat::new(Rat::zero(), im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_is_canonical() {
        let a = rat(2, 4);
        assert_eq!(a, rat(1, 2));
        assert_eq!(a.denom(), &BigInt::from(2));
        let b = rat(3, -6);
        assert_eq!(b, rat(-1, 2));
        assert!(b.denom() > &BigInt::zero());
    }

    #[test]
    fn gauss_conj_involution() {
        let z = GaussRat::from_parts(1, 2, -3, 4);
        assert_eq!(z.conj().conj(), z);
        let r = GaussRat::from_rat(rat(5, 7));
        assert_eq!(r.conj(), r);
        assert!(!z.conj().eq(&z));
    }

    #[test]
    fn gauss_norm_nonneg() {
        let z = GaussRat::from_parts(-1, 2, 1, 3);
        assert_eq!(z.norm_sqr(), rat(1, 4) + rat(1, 9));
        assert!(!z.norm_sqr().is_negative());
    }

    #[test]
    fn gauss_mul_div_roundtrip() {
        let z = GaussRat::from_parts(1, 2, 3, 5);
        let w = GaussRat::from_parts(-2, 3, 1, 7);
        let q = z.clone() * w.clone() / w;
        assert_eq!(q, z);
    }

    #[test]
    fn gauss_display_parse_roundtrip() {
        for z in [
            GaussRat::from_parts(1, 2, 3, 4),
            GaussRat::from_parts(-1, 2, -3, 4),
            GaussRat::zero(),
            GaussRat::i(),
            GaussRat::from_rat(rat(-7, 3)),
        ] {
            let s = z.to_string();
            assert_eq!(GaussRat::parse(&s).unwrap(), z, "roundtrip of {s}");
        }
        // lenient inputs
        assert_eq!(GaussRat::parse("3/4").unwrap(), GaussRat::from_parts(3, 4, 0, 1));
        assert_eq!(GaussRat::parse("3/4i").unwrap(), GaussRat::from_parts(0, 1, 3, 4));
        assert_eq!(GaussRat::parse("i").unwrap(), GaussRat::i());
        assert_eq!(GaussRat::parse("-i").unwrap(), -GaussRat::i());
        assert_eq!(
            GaussRat::parse("-1/2-1/3i").unwrap(),
            GaussRat::from_parts(-1, 2, -1, 3)
        );
    }

    #[test]
    fn distributivity_exact() {
        let a = rat(3, 7);
        let b = rat(-5, 11);
        let c = rat(9, 4);
        assert_eq!((&a + &b) * &c, &a * &c + &b * &c);
    }
}
