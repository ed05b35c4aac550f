use std::collections::BTreeMap;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclo::{factor_one_plus, CycloFactor, Factorization};
use super::monomial::Monomial;
use super::ratfunc::RatFunc;

/// A product `c · M · Π Φ^e` with rational `c` and signed exponents `e`.
///
/// Products and quotients of q-numbers stay in this form, where cancellation
/// is exact bookkeeping on the exponent map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QProduct {
    coeff: BigRational,
    mono: Monomial,
    factors: BTreeMap<CycloFactor, i32>,
}

impl QProduct {
    pub fn one() -> Self {
        Self::scalar(BigRational::one())
    }

    pub fn zero() -> Self {
        Self::scalar(BigRational::zero())
    }

    pub fn scalar(c: BigRational) -> Self {
        QProduct {
            coeff: c,
            mono: Monomial::ONE,
            factors: BTreeMap::new(),
        }
    }

    pub fn integer(c: i64) -> Self {
        Self::scalar(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(m: Monomial) -> Self {
        QProduct {
            coeff: BigRational::one(),
            mono: m,
            factors: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// `1 + sign·Z` for a monomial `Z` without `A` dependence.
    pub fn one_plus(sign: i64, z: Monomial) -> Self {
        assert!(z.ea.is_zero(), "binomials in A are not factorable");
        match factor_one_plus(sign, z.eq.0, z.ep.0) {
            None => Self::integer(1 + sign),
            Some((unit, mono, fz)) => {
                let mut out = QProduct::monomial(mono);
                out.coeff = BigRational::from_integer(BigInt::from(unit));
                for (f, e) in fz.iter() {
                    *out.factors.entry(*f).or_insert(0) += *e as i32;
                }
                out
            }
        }
    }

    /// `Z + sign·Z⁻¹`.
    pub fn binomial(z: Monomial, sign: i64) -> Self {
        Self::monomial(z) * Self::one_plus(sign, z.pow(-2))
    }

    /// The q-number `[x]_q = (Z - Z⁻¹)/(q - q⁻¹)` with `Z = q^x`, where `x`
    /// is given as a monomial (`q^a p^b` encodes `x = a + bα`).
    pub fn bracket(z: Monomial) -> Self {
        if z.is_one() {
            return Self::zero();
        }
        Self::binomial(z, -1) / Self::binomial(Monomial::q(1), -1)
    }

    pub fn pow(&self, k: i32) -> Self {
        if k < 0 {
            assert!(!self.is_zero(), "negative power of zero");
            let inv = QProduct::one() / self.clone();
            return inv.pow(-k);
        }
        let mut coeff = BigRational::one();
        for _ in 0..k {
            coeff *= &self.coeff;
        }
        QProduct {
            coeff,
            mono: self.mono.pow(k as i64),
            factors: self
                .factors
                .iter()
                .map(|(f, e)| (*f, e * k))
                .filter(|(_, e)| *e != 0)
                .collect(),
        }
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn mono(&self) -> Monomial {
        self.mono
    }

    pub fn factors(&self) -> &BTreeMap<CycloFactor, i32> {
        &self.factors
    }

    /// Splits into numerator factors, denominator factors.
    pub fn split(&self) -> (Factorization, Factorization) {
        let mut num = Factorization::new();
        let mut den = Factorization::new();
        for (f, e) in &self.factors {
            if *e > 0 {
                num.push(*f, *e as u32);
            } else {
                den.push(*f, (-*e) as u32);
            }
        }
        (num, den)
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let (nf, df) = self.split();
        let num = nf.expand().mul_term(self.coeff.numer(), self.mono);
        let den = df.expand().scale(self.coeff.denom());
        RatFunc::from_factored(num, den, df)
    }
}

impl Mul for QProduct {
    type Output = QProduct;
    fn mul(mut self, rhs: QProduct) -> QProduct {
        if self.is_zero() || rhs.is_zero() {
            return QProduct::zero();
        }
        self.coeff *= rhs.coeff;
        self.mono = self.mono * rhs.mono;
        for (f, e) in rhs.factors {
            let slot = self.factors.entry(f).or_insert(0);
            *slot += e;
            if *slot == 0 {
                self.factors.remove(&f);
            }
        }
        self
    }
}

impl Div for QProduct {
    type Output = QProduct;
    fn div(self, rhs: QProduct) -> QProduct {
        assert!(!rhs.is_zero(), "QProduct division by zero");
        let inv = QProduct {
            coeff: BigRational::one() / rhs.coeff,
            mono: rhs.mono.inv(),
            factors: rhs.factors.into_iter().map(|(f, e)| (f, -e)).collect(),
        };
        self * inv
    }
}

impl std::iter::Product for QProduct {
    fn product<I: Iterator<Item = QProduct>>(iter: I) -> Self {
        iter.fold(QProduct::one(), |a, b| a * b)
    }
}

impl From<&QProduct> for RatFunc {
    fn from(p: &QProduct) -> Self {
        p.to_ratfunc()
    }
}

impl std::ops::Neg for QProduct {
    type Output = QProduct;

    fn neg(mut self) -> QProduct {
        self.coeff = -self.coeff;
        self
    }
}
