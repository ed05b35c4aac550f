use std::collections::BTreeMap;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// A real number carried at some binary precision together with the number
/// of decimal digits that are guaranteed.
#[derive(Debug, Clone)]
pub struct Real {
    value: BigFloat,
    digits: usize,
}

impl Real {
    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn value(&self) -> &BigFloat {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Scientific rendering with `self.digits` significant digits.
    pub fn to_scientific(&self) -> String {
        render(&self.value, self.digits)
    }

    pub fn to_f64(&self) -> f64 {
        render(&self.value, 20).parse().unwrap_or(f64::NAN)
    }

    /// `|self - other| <= 10^{-digits} · max(1, |self|, |other|)`.
    pub fn agrees_with(&self, other: &Real, digits: usize) -> bool {
        let p = working_bits(digits) + 64;
        let diff = self.value.sub(&other.value, p, RM).abs();
        let scale = [self.value.abs(), other.value.abs(), BigFloat::from_i32(1, p)]
            .into_iter()
            .fold(BigFloat::from_i32(0, p), |a, b| if b.cmp(&a) == Some(1) { b } else { a });
        let tol = ten_pow_neg(digits, p).mul(&scale, p, RM);
        diff.cmp(&tol).is_some_and(|c| c <= 0)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scientific())
    }
}

fn working_bits(digits: usize) -> usize {
    // log2(10) < 3.33
    ((digits as f64) * 3.33).ceil() as usize + 64
}

fn ten_pow_neg(digits: usize, p: usize) -> BigFloat {
    let ten = BigFloat::from_i32(10, p);
    BigFloat::from_i32(1, p).div(&ten.powi(digits, p, RM), p, RM)
}

fn int_to_float(x: &BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&x.to_string(), Radix::Dec, p, RM, cc)
}

fn rational_to_float(x: &BigRational, p: usize, cc: &mut Consts) -> BigFloat {
    int_to_float(x.numer(), p, cc).div(&int_to_float(x.denom(), p, cc), p, RM)
}

fn render(v: &BigFloat, digits: usize) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut cc = Consts::new().expect("constants cache");
    let s = v.format(Radix::Dec, RM, &mut cc).unwrap_or_default();
    let (sign, body) = s.strip_prefix('-').map_or(("", s.as_str()), |b| ("-", b));
    let (mant, exp) = body.split_once('e').unwrap_or((body, "+0"));
    let (int_part, frac) = mant.split_once('.').unwrap_or((mant, ""));
    let mut frac: String = frac.chars().take(digits.saturating_sub(1)).collect();
    while frac.ends_with('0') {
        frac.pop();
    }
    let exp: i64 = exp.parse().unwrap_or(0);
    let exp_part = if exp == 0 { String::new() } else { format!("e{exp}") };
    if frac.is_empty() {
        format!("{sign}{int_part}{exp_part}")
    } else {
        format!("{sign}{int_part}.{frac}{exp_part}")
    }
}

struct Evaluator {
    p: usize,
    ln_q: BigFloat,
    alpha: BigRational,
    cc: Consts,
}

impl Evaluator {
    fn new(q0: &BigRational, alpha0: &BigRational, p: usize) -> Self {
        let mut cc = Consts::new().expect("constants cache");
        let qf = rational_to_float(q0, p, &mut cc);
        let ln_q = qf.ln(p, RM, &mut cc);
        Evaluator {
            p,
            ln_q,
            alpha: alpha0.clone(),
            cc,
        }
    }

    /// Returns the value and the largest term magnitude.
    fn poly(&mut self, x: &LaurentPoly) -> (BigFloat, BigFloat) {
        let p = self.p;
        let mut sum = BigFloat::from_i32(0, p);
        let mut biggest = BigFloat::from_i32(0, p);
        for (m, c) in x.terms() {
            let e = BigRational::new(m.eq.0.into(), 2.into())
                + BigRational::new(m.ep.0.into(), 2.into()) * &self.alpha
                + BigRational::new(m.ea.0.into(), 2.into()) * &self.alpha * &self.alpha;
            let ef = rational_to_float(&e, p, &mut self.cc);
            let t = ef.mul(&self.ln_q, p, RM).exp(p, RM, &mut self.cc);
            let t = t.mul(&int_to_float(c, p, &mut self.cc), p, RM);
            if t.abs().cmp(&biggest) == Some(1) {
                biggest = t.abs();
            }
            sum = sum.add(&t, p, RM);
        }
        (sum, biggest)
    }
}

fn eval_at(x: &RatFunc, q0: &BigRational, alpha0: &BigRational, p: usize, digits: usize) -> Result<BigFloat> {
    let mut ev = Evaluator::new(q0, alpha0, p);
    let (n, _) = ev.poly(x.num());
    let (d, dmax) = ev.poly(x.den());
    let tol = ten_pow_neg(digits, p).mul(&dmax, p, RM);
    if d.abs().cmp(&tol).is_some_and(|c| c <= 0) {
        return Err(Error::PoleAtPoint);
    }
    Ok(n.div(&d, p, RM))
}

/// Numeric value at `q = q0`, `p = q0^α0`, `A = q0^{α0²}`.
///
/// The working precision is doubled until two successive evaluations agree
/// to `precision` digits.
pub fn rf_eval(x: &RatFunc, q0: &BigRational, alpha0: &BigRational, precision: usize) -> Result<Real> {
    if !q0.is_positive() || q0.is_one() {
        return Err(Error::InvalidPoint(format!("q0 = {q0} must be positive and different from 1")));
    }
    let mut bits = working_bits(precision);
    let mut prev = eval_at(x, q0, alpha0, bits, precision)?;
    for _ in 0..8 {
        bits *= 2;
        let next = eval_at(x, q0, alpha0, bits, precision)?;
        let a = Real {
            value: prev,
            digits: precision,
        };
        let b = Real {
            value: next.clone(),
            digits: precision,
        };
        if a.agrees_with(&b, precision + 2) {
            return Ok(b);
        }
        prev = next;
    }
    Err(Error::InvalidPoint("evaluation does not stabilise".into()))
}

/// Univariate integer Laurent polynomial in an auxiliary variable `t`.
type TPoly = BTreeMap<i64, BigInt>;

fn substitute(x: &LaurentPoly, alpha0: Rational64, scale: i64) -> TPoly {
    let mut out = TPoly::new();
    for (m, c) in x.terms() {
        let e = Rational64::new(m.eq.0, 2) + Rational64::new(m.ep.0, 2) * alpha0 + Rational64::new(m.ea.0, 2) * alpha0 * alpha0;
        let e = (e * scale).to_integer();
        let slot = out.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Dense coefficients, lowest degree first, after clearing negative powers.
fn dense(p: &TPoly) -> Vec<BigInt> {
    let lo = *p.keys().next().unwrap();
    let hi = *p.keys().next_back().unwrap();
    let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in p {
        v[(e - lo) as usize] = c.clone();
    }
    v
}

/// Synthetic division by `t - 1`, assuming the value at 1 vanishes.
fn deflate(v: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); v.len() - 1];
    let mut acc = BigInt::zero();
    for i in (1..v.len()).rev() {
        acc += &v[i];
        out[i - 1] = acc.clone();
    }
    out
}

fn at_one(v: &[BigInt]) -> BigInt {
    v.iter().sum()
}

/// The exact classical limit `q → 1` at `α = alpha0`.
///
/// With `alpha0 = r/s`, every exponent times `2s²` is an integer, so the
/// substitution `q = t^{2s²}` turns numerator and denominator into integer
/// polynomials in `t`. Common roots at `t = 1` are divided out.
pub fn rf_limit_q1(x: &RatFunc, alpha0: Rational64) -> Result<BigRational> {
    if x.is_zero() {
        return Ok(BigRational::zero());
    }
    let s = *alpha0.denom();
    let scale = 2 * s * s;
    let n = substitute(x.num(), alpha0, scale);
    let d = substitute(x.den(), alpha0, scale);
    if d.is_empty() {
        return Err(Error::LimitDiverges(format!("denominator vanishes identically at alpha = {alpha0}")));
    }
    if n.is_empty() {
        return Ok(BigRational::zero());
    }
    let mut nv = dense(&n);
    let mut dv = dense(&d);
    loop {
        let dn = at_one(&nv);
        let dd = at_one(&dv);
        match (dn.is_zero(), dd.is_zero()) {
            (_, false) => return Ok(BigRational::new(dn, dd)),
            (false, true) => return Err(Error::LimitDiverges(format!("pole of the classical limit at alpha = {alpha0}"))),
            (true, true) => {
                nv = deflate(&nv);
                dv = deflate(&dv);
            }
        }
    }
}

/// Integer value of a classical limit, if it is one.
pub fn as_integer(r: &BigRational) -> Option<i64> {
    r.is_integer().then(|| r.to_integer().to_i64()).flatten()
}

/// `n/d` as a big rational.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qnum::{qnum, qpow, AffineInt, QuadExponent};

    fn close(x: &Real, v: f64) -> bool {
        (x.to_f64() - v).abs() < 1e-12 * v.abs().max(1.0)
    }

    #[test]
    fn evaluates_simple_values() {
        let two = rational(2, 1);
        let x = rf_eval(&qnum(AffineInt::new(2, 0)), &two, &rational(0, 1), 30).unwrap();
        assert!(close(&x, 2.5));
        let y = rf_eval(&qnum(AffineInt::new(0, 1)), &two, &rational(1, 1), 30).unwrap();
        assert!(close(&y, 1.0));
        let z = rf_eval(&qpow(QuadExponent::from_ints(0, 1, 1)).unwrap(), &two, &rational(3, 1), 30).unwrap();
        assert_eq!(z.to_scientific(), "4.096e3");
    }

    #[test]
    fn pole_is_reported() {
        let x = RatFunc::one().div(&qnum(AffineInt::new(-1, 1))).unwrap();
        assert!(matches!(rf_eval(&x, &rational(3, 2), &rational(1, 1), 20), Err(Error::PoleAtPoint)));
    }

    #[test]
    fn rejects_q_equal_one() {
        assert!(matches!(
            rf_eval(&RatFunc::one(), &rational(1, 1), &rational(0, 1), 10),
            Err(Error::InvalidPoint(_))
        ));
    }

    #[test]
    fn classical_limits() {
        let three = rf_limit_q1(&qnum(AffineInt::new(3, 0)), Rational64::from(0)).unwrap();
        assert_eq!(three, rational(3, 1));
        let two_sq = qnum(AffineInt::new(2, 0)).pow(2).unwrap();
        assert_eq!(rf_limit_q1(&two_sq, Rational64::from(0)).unwrap(), rational(4, 1));
        assert_eq!(rf_limit_q1(&qnum(AffineInt::new(0, 1)), Rational64::from(5)).unwrap(), rational(5, 1));
        let half = qnum(AffineInt::new(0, 1));
        assert_eq!(rf_limit_q1(&half, Rational64::new(7, 2)).unwrap(), rational(7, 2));
    }

    #[test]
    fn divergent_limit() {
        let x = RatFunc::one().div(&qnum(AffineInt::new(0, 1))).unwrap();
        assert!(matches!(rf_limit_q1(&x, Rational64::from(0)), Err(Error::LimitDiverges(_))));
    }
}
