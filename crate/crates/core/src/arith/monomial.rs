use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

/// An exponent on the lattice ½ℤ, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct HalfExponent(pub i64);

impl HalfExponent {
    pub const ZERO: HalfExponent = HalfExponent(0);

    pub fn from_int(v: i64) -> Self {
        HalfExponent(2 * v)
    }

    /// Twice the exponent.
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.0, 2)
    }

    /// Fails unless `2 * r` is an integer.
    pub fn from_rational(r: Rational64) -> Option<Self> {
        let d = r * 2;
        d.is_integer().then(|| HalfExponent(d.to_integer()))
    }
}

impl Add for HalfExponent {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        HalfExponent(self.0 + rhs.0)
    }
}

impl Sub for HalfExponent {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        HalfExponent(self.0 - rhs.0)
    }
}

impl Neg for HalfExponent {
    type Output = Self;
    fn neg(self) -> Self {
        HalfExponent(-self.0)
    }
}

impl fmt::Display for HalfExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `q^eq · p^ep · A^ea` where `p = q^α` and `A = q^{α²}`.
///
/// Ordered lexicographically on `(eq, ep, ea)`. The order is compatible with
/// multiplication, so the leading monomial of a product is the product of the
/// leading monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub eq: HalfExponent,
    pub ep: HalfExponent,
    pub ea: HalfExponent,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        eq: HalfExponent::ZERO,
        ep: HalfExponent::ZERO,
        ea: HalfExponent::ZERO,
    };

    /// Builds a monomial from doubled exponents.
    pub fn from_twice(eq2: i64, ep2: i64, ea2: i64) -> Self {
        Monomial {
            eq: HalfExponent(eq2),
            ep: HalfExponent(ep2),
            ea: HalfExponent(ea2),
        }
    }

    pub fn q(e: i64) -> Self {
        Self::from_twice(2 * e, 0, 0)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::ONE
    }

    pub fn inv(self) -> Self {
        Monomial {
            eq: -self.eq,
            ep: -self.ep,
            ea: -self.ea,
        }
    }

    pub fn pow(self, k: i64) -> Self {
        Self::from_twice(self.eq.0 * k, self.ep.0 * k, self.ea.0 * k)
    }

    pub fn twice(&self) -> (i64, i64, i64) {
        (self.eq.0, self.ep.0, self.ea.0)
    }
}

impl Mul for Monomial {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Monomial {
            eq: self.eq + rhs.eq,
            ep: self.ep + rhs.ep,
            ea: self.ea + rhs.ea,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in [("q", self.eq), ("p", self.ep), ("A", self.ea)] {
            if e.is_zero() {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{name}^{{{e}}}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_exponent_display() {
        assert_eq!(HalfExponent(3).to_string(), "3/2");
        assert_eq!(HalfExponent(-4).to_string(), "-2");
        assert_eq!(HalfExponent::from_rational(Rational64::new(1, 3)), None);
        assert_eq!(HalfExponent::from_rational(Rational64::new(-5, 2)), Some(HalfExponent(-5)));
    }

    #[test]
    fn monomial_order_is_lexicographic() {
        let a = Monomial::from_twice(0, 4, -2);
        let b = Monomial::from_twice(2, -10, 0);
        assert!(a < b);
        assert_eq!((a * b).twice(), (2, -6, -2));
        assert_eq!(Monomial::from_twice(1, 0, -2).to_string(), "q^{1/2}*A^{-1}");
    }
}
