//! Exact complex scalars over the Gaussian rationals.
//!
//! Every structure-theoretic verdict in this crate (radicals, ranks,
//! nilpotency degrees) is decided over `ℚ(i)` so that kernel and rank
//! computations are exact. Floating-point enters only through the
//! norm-analytics layer.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An element of `ℚ(i)`: exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    pub re: BigRational,
    pub im: BigRational,
}

impl ExactComplex {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Exact rational `p/q` as a real scalar. Panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `|z|²` as an exact rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sqr();
        assert!(!n.is_zero(), "division by zero in ExactComplex");
        Self::new(&self.re / &n, -(&self.im / &n))
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Parses a rational string such as `"3/2"`, `"-1"` or `"0"`.
    pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
        BigRational::from_str(s.trim())
            .map_err(|_| Error::Parse(format!("invalid rational literal `{s}`")))
    }

    /// Builds a scalar from rational strings for the real and imaginary parts.
    pub fn parse_parts(re: &str, im: &str) -> Result<Self, Error> {
        Ok(Self::new(Self::parse_rational(re)?, Self::parse_rational(im)?))
    }

    pub fn re_string(&self) -> String {
        self.re.to_string()
    }

    pub fn im_string(&self) -> String {
        self.im.to_string()
    }
}

impl fmt::Debug for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: ExactComplex) -> ExactComplex {
        ExactComplex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, rhs: &'a ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl AddAssign<&ExactComplex> for ExactComplex {
    fn add_assign(&mut self, rhs: &ExactComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: ExactComplex) -> ExactComplex {
        ExactComplex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a> Sub<&'a ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, rhs: &'a ExactComplex) -> ExactComplex {
        ExactComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl SubAssign<&ExactComplex> for ExactComplex {
    fn sub_assign(&mut self, rhs: &ExactComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: ExactComplex) -> ExactComplex {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, rhs: &'a ExactComplex) -> ExactComplex {
        ExactComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl MulAssign<&ExactComplex> for ExactComplex {
    fn mul_assign(&mut self, rhs: &ExactComplex) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for ExactComplex {
    type Output = ExactComplex;
    fn div(self, rhs: ExactComplex) -> ExactComplex {
        (&self).mul(&rhs.inv())
    }
}

impl<'a> Div<&'a ExactComplex> for &ExactComplex {
    type Output = ExactComplex;
    fn div(self, rhs: &'a ExactComplex) -> ExactComplex {
        self.mul(&rhs.inv())
    }
}

impl Neg for ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-self.re, -self.im)
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex::new(-self.re.clone(), -self.im.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic_is_exact() {
        let a = ExactComplex::from_ratio(1, 3);
        let b = ExactComplex::from_ratio(1, 6);
        let sum = (&a).add(&b);
        assert_eq!(sum, ExactComplex::from_ratio(1, 2));

        let i = ExactComplex::i();
        assert_eq!((&i).mul(&i), ExactComplex::from_int(-1));
    }

    #[test]
    fn inverse_and_division() {
        let z = ExactComplex::from_ints(3, 4);
        let w = (&z).mul(&z.inv());
        assert!(w.is_one());
        assert_eq!(z.norm_sqr(), BigRational::from_integer(BigInt::from(25)));
    }

    #[test]
    fn rational_string_round_trip() {
        let z = ExactComplex::parse_parts("-3/2", "7").unwrap();
        assert_eq!(z.re_string(), "-3/2");
        assert_eq!(z.im_string(), "7");
        assert!(ExactComplex::parse_parts("nope", "0").is_err());
    }
}
