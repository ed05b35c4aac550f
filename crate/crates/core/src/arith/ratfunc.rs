use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cyclo::{factor_small, Factorization};
use super::monomial::Monomial;
use super::poly::{LaurentPoly, TermRecord};
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials in canonical form:
/// the denominator's trailing monomial is `1`, its leading coefficient is
/// positive and the joint integer content of numerator and denominator is 1.
///
/// When the denominator is known to be a single term times a product of
/// cyclotomic factors, that factorization rides along and sums use exact
/// least common multiples. Otherwise arithmetic falls back to plain
/// cross-multiplication. Equality is always decided by cross-multiplication.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
    den_factors: Option<Factorization>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RfOp {
    Add,
    Mul,
    Div,
    Neg,
}

/// JSON form: `{"num": [...], "den": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatFuncRecord {
    pub num: Vec<TermRecord>,
    pub den: Vec<TermRecord>,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
            den_factors: Some(Factorization::new()),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
            den_factors: Some(Factorization::new()),
        }
        .canonical()
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(BigInt::one(), m))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// Builds `num/den`, discovering a factorization of `den` when it is a
    /// single term or a simple binomial.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let den_factors = factor_small(&den).map(|(_, _, f)| f);
        Ok(RatFunc { num, den, den_factors }.canonical().reduced())
    }

    /// `den` must equal a single term times the expansion of `factors`.
    pub(crate) fn from_factored(num: LaurentPoly, den: LaurentPoly, factors: Factorization) -> Self {
        RatFunc {
            num,
            den,
            den_factors: Some(factors),
        }
        .canonical()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn den_factors(&self) -> Option<&Factorization> {
        self.den_factors.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The value as a single monomial, if it is one.
    pub fn as_monomial(&self) -> Option<Monomial> {
        let (cn, mn) = self.num.as_single_term()?;
        let (cd, md) = self.den.as_single_term()?;
        (cn == cd).then(|| *mn * md.inv())
    }

    fn canonical(mut self) -> Self {
        if self.num.is_zero() {
            return RatFunc::zero();
        }
        let shift = self.den.trailing().map(|(m, _)| m.inv()).unwrap();
        if !shift.is_one() {
            self.num = self.num.mul_monomial(shift);
            self.den = self.den.mul_monomial(shift);
        }
        let g = self.num.content().gcd(&self.den.content());
        let lead_neg = self.den.leading().map(|(_, c)| c.is_negative()).unwrap();
        let g = if lead_neg { -g } else { g };
        if !g.is_one() {
            self.num = self.num.div_exact_int(&g);
            self.den = self.den.div_exact_int(&g);
        }
        if self.num == self.den && !self.num.is_one() {
            self.num = LaurentPoly::one();
            self.den = LaurentPoly::one();
            self.den_factors = Some(Factorization::new());
        }
        self
    }

    /// Cancels every denominator factor that divides the numerator.
    pub fn reduced(mut self) -> Self {
        let Some(factors) = self.den_factors.clone() else {
            return self;
        };
        let mut changed = false;
        for (f, e) in factors.iter() {
            for _ in 0..*e {
                match f.divide(&self.num) {
                    Some(q) => {
                        self.num = q;
                        self.den = f.divide(&self.den).expect("tracked factor divides denominator");
                        self.den_factors.as_mut().unwrap().remove_one(f);
                        changed = true;
                    }
                    None => break,
                }
            }
        }
        if changed {
            self.canonical()
        } else {
            self
        }
    }

    /// Single-term cofactor `τ` with `den = τ · Π factors`.
    fn den_unit(&self, factors: &Factorization) -> (BigInt, Monomial) {
        let lead = factors
            .iter()
            .fold(Monomial::ONE, |acc, (f, e)| acc * f.base().pow(f.degree() as i64 * *e as i64));
        let (m, c) = self.den.leading().unwrap();
        (c.clone(), *m * lead.inv())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
            den_factors: self.den_factors.clone(),
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        match (&self.den_factors, &other.den_factors) {
            (Some(fa), Some(fb)) => {
                let l = fa.lcm(fb);
                let (ca, ma) = self.den_unit(fa);
                let (cb, mb) = other.den_unit(fb);
                let cof_a = l.quotient(fa).expand();
                let cof_b = l.quotient(fb).expand();
                let num = &(&self.num * &cof_a).mul_term(&cb, mb) + &(&other.num * &cof_b).mul_term(&ca, ma);
                let den = l.expand().mul_term(&(&ca * &cb), ma * mb);
                RatFunc {
                    num,
                    den,
                    den_factors: Some(l),
                }
                .canonical()
                .reduced()
            }
            _ => RatFunc {
                num: &(&self.num * &other.den) + &(&other.num * &self.den),
                den: &self.den * &other.den,
                den_factors: None,
            }
            .canonical(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let den_factors = match (&self.den_factors, &other.den_factors) {
            (Some(fa), Some(fb)) => Some(fa.merged(fb)),
            _ => None,
        };
        RatFunc {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
            den_factors,
        }
        .canonical()
        .reduced()
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(RatFunc::zero());
        }
        let den_factors = match (&self.den_factors, factor_small(&other.num)) {
            (Some(fa), Some((_, _, fb))) => Some(fa.merged(&fb)),
            _ => None,
        };
        Ok(RatFunc {
            num: &self.num * &other.den,
            den: &self.den * &other.num,
            den_factors,
        }
        .canonical()
        .reduced())
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::one().div(self)
    }

    pub fn pow(&self, k: i64) -> Result<RatFunc> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = RatFunc::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    pub fn mul_monomial(&self, m: Monomial) -> RatFunc {
        RatFunc {
            num: self.num.mul_monomial(m),
            den: self.den.clone(),
            den_factors: self.den_factors.clone(),
        }
        .canonical()
    }

    pub fn scale(&self, c: i64) -> RatFunc {
        if c == 0 {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(&BigInt::from(c)),
            den: self.den.clone(),
            den_factors: self.den_factors.clone(),
        }
        .canonical()
    }

    /// `a/b = c/d` decided by `a·d = c·b`; shared cyclotomic factors of the
    /// denominators are struck from both sides first.
    pub fn cross_eq(&self, other: &RatFunc) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        match (&self.den_factors, &other.den_factors) {
            (Some(fa), Some(fb)) => {
                let l = fa.lcm(fb);
                let (ca, ma) = self.den_unit(fa);
                let (cb, mb) = other.den_unit(fb);
                let lhs = (&self.num * &l.quotient(fa).expand()).mul_term(&cb, mb);
                let rhs = (&other.num * &l.quotient(fb).expand()).mul_term(&ca, ma);
                lhs == rhs
            }
            _ => &self.num * &other.den == &other.num * &self.den,
        }
    }

    /// Every monomial of numerator and denominator has zero `A` exponent.
    pub fn is_free_of_a(&self) -> bool {
        self.num.is_free_of_a() && self.den.is_free_of_a()
    }

    pub fn to_record(&self) -> RatFuncRecord {
        RatFuncRecord {
            num: self.num.to_records(),
            den: self.den.to_records(),
        }
    }

    pub fn from_record(r: &RatFuncRecord) -> Result<RatFunc> {
        let num = LaurentPoly::from_records(&r.num)?;
        let den = LaurentPoly::from_records(&r.den)?;
        if den.is_zero() {
            return Err(Error::SchemaError("zero denominator".into()));
        }
        RatFunc::new(num, den)
    }
}

/// The arithmetic front door: one function for all four field operations.
/// `y` is ignored for `Neg`.
pub fn rf_arith(x: &RatFunc, y: &RatFunc, op: RfOp) -> Result<RatFunc> {
    match op {
        RfOp::Add => Ok(x.add(y)),
        RfOp::Mul => Ok(x.mul(y)),
        RfOp::Div => x.div(y),
        RfOp::Neg => Ok(x.neg()),
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.cross_eq(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        RatFunc::add(&self, &rhs)
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |a, b| RatFunc::add(&a, &b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qnum::{qnum, AffineInt};

    fn q(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(BigInt::one(), Monomial::q(e))
    }

    #[test]
    fn inverse_of_q_minus_q_inverse() {
        let d = RatFunc::from_poly(&q(1) - &q(-1));
        let one_over = RatFunc::one().div(&d).unwrap();
        let r = one_over.mul(&d);
        assert!(r.is_one());
    }

    #[test]
    fn x_plus_neg_x_is_zero() {
        let x = qnum(AffineInt::new(3, 2));
        assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn ratio_of_doubled_qnumber() {
        let x = qnum(AffineInt::new(1, 1));
        let y = qnum(AffineInt::new(2, 2));
        let r = x.div(&y).unwrap();
        let z = Monomial::from_twice(2, 2, 0);
        let expect = RatFunc::new(
            LaurentPoly::one(),
            LaurentPoly::from_terms([(z, BigInt::one()), (z.inv(), BigInt::one())]),
        )
        .unwrap();
        assert_eq!(r, expect);
        assert!(r.num().is_one() || r.num().len() == 1);
    }

    #[test]
    fn division_by_zero_errors() {
        assert_eq!(RatFunc::one().div(&RatFunc::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_shape() {
        let r = RatFunc::new(q(3), &(&q(-2) * &LaurentPoly::constant(-4)) + &q(5).scale(&BigInt::from(-6))).unwrap();
        let (m, _) = r.den().trailing().unwrap();
        assert!(m.is_one());
        assert!(r.den().leading().unwrap().1.is_positive());
        assert!(r.num().content().gcd(&r.den().content()).is_one());
    }

    #[test]
    fn opaque_denominators_still_compare() {
        let general = &(&q(1) + &q(2)) + &q(5);
        let a = RatFunc::new(q(1), general.clone()).unwrap();
        let b = RatFunc::new(q(2), &general * &q(1)).unwrap();
        assert_eq!(a, b);
        let c = a.add(&b);
        assert_eq!(c, RatFunc::new(q(1).scale(&BigInt::from(2)), general).unwrap());
    }
}
