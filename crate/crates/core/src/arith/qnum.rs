use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::Zero;

use super::monomial::{HalfExponent, Monomial};
use super::qprod::QProduct;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// The q-number argument `a + b·α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineInt {
    pub a: i64,
    pub b: i64,
}

impl AffineInt {
    pub fn new(a: i64, b: i64) -> Self {
        AffineInt { a, b }
    }

    /// `q^a p^b`.
    pub fn monomial(self) -> Monomial {
        Monomial::from_twice(2 * self.a, 2 * self.b, 0)
    }
}

impl Neg for AffineInt {
    type Output = Self;
    fn neg(self) -> Self {
        AffineInt::new(-self.a, -self.b)
    }
}

impl Add for AffineInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        AffineInt::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for AffineInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        AffineInt::new(self.a - o.a, self.b - o.b)
    }
}

/// `[a + bα]_q`.
pub fn qnum(x: AffineInt) -> RatFunc {
    QProduct::bracket(x.monomial()).to_ratfunc()
}

/// The exponent `a + b·α + c·α²` of a power of `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct QuadExponent {
    pub a: Rational64,
    pub b: Rational64,
    pub c: Rational64,
}

impl QuadExponent {
    pub fn new(a: Rational64, b: Rational64, c: Rational64) -> Self {
        QuadExponent { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn scale(&self, s: Rational64) -> Self {
        QuadExponent::new(self.a * s, self.b * s, self.c * s)
    }

    pub fn at(&self, alpha0: Rational64) -> Rational64 {
        self.a + self.b * alpha0 + self.c * alpha0 * alpha0
    }

    pub fn to_monomial(&self) -> Result<Monomial> {
        let conv = |r: Rational64| HalfExponent::from_rational(r).ok_or_else(|| Error::NonHalfIntegerExponent(self.to_string()));
        Ok(Monomial {
            eq: conv(self.a)?,
            ep: conv(self.b)?,
            ea: conv(self.c)?,
        })
    }
}

impl Add for QuadExponent {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QuadExponent::new(self.a + o.a, self.b + o.b, self.c + o.c)
    }
}

impl Sub for QuadExponent {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QuadExponent::new(self.a - o.a, self.b - o.b, self.c - o.c)
    }
}

impl Neg for QuadExponent {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExponent::new(-self.a, -self.b, -self.c)
    }
}

impl Mul<i64> for QuadExponent {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        self.scale(k.into())
    }
}

impl fmt::Display for QuadExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*al + {}*al^2", self.a, self.b, self.c)
    }
}

/// `q^{a + bα + cα²}` as the monomial `q^a p^b A^c`.
pub fn qpow(e: QuadExponent) -> Result<RatFunc> {
    Ok(RatFunc::from_monomial(e.to_monomial()?))
}
