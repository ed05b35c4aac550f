use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::One;
use rayon::prelude::*;

use crate::arith::cyclo::Factorization;
use crate::arith::{LaurentPoly, Monomial, QProduct, QuadExponent, RatFunc};
use crate::decomp::DecompTable;
use crate::error::{Error, Result};

/// The k-independent weight of a summand of `ξ_k`:
/// `(χ_Λ(Γ₀)/χ_ν(Γ₀)) · (D⁰_q(ν)/D⁰_q(Λ))`.
///
/// Only the odd-root numerators enter the `Γ₀` ratio; the normalising
/// brackets are common to both eigenvalues.
pub fn term_weight(t: &DecompTable, index: usize) -> Result<QProduct> {
    let rs = &t.rs;
    let lam = &t.lam_alpha;
    let nu = &t.terms[index].nu;
    let g_lam = rs.gamma0_numerator(lam)?;
    let g_nu = rs.gamma0_numerator(nu)?;
    if g_lam.is_zero() || g_nu.is_zero() {
        return Err(Error::InvariantViolation {
            index,
            reason: "atypical weight in the decomposition".into(),
        });
    }
    Ok(g_lam / g_nu * rs.q_dimension_product(nu)? / rs.q_dimension_product(lam)?)
}

/// `½C(ν) − C(Λ)` for every term.
pub fn eigen_shifts(t: &DecompTable) -> Result<Vec<QuadExponent>> {
    let c_lam = t.rs.casimir(&t.lam_alpha)?;
    t.terms
        .iter()
        .map(|term| Ok(t.rs.casimir(&term.nu)?.scale(Rational64::new(1, 2)) - c_lam))
        .collect()
}

struct TermData {
    shift: Monomial,
    sign: i64,
    m_plus: i64,
    m_minus: i64,
    /// The weight times the common denominator.
    poly: LaurentPoly,
}

/// The eigenvalues `ξ_k` of one decomposition table, with every summand
/// brought over a single factored denominator once, and a cache keyed by `k`.
pub struct XiSeries {
    table: DecompTable,
    terms: Vec<TermData>,
    den: LaurentPoly,
    den_factors: Factorization,
    cache: Mutex<HashMap<i64, RatFunc>>,
}

impl XiSeries {
    pub fn new(table: &DecompTable) -> Result<Self> {
        let weights: Vec<QProduct> = (0..table.terms.len())
            .into_par_iter()
            .map(|i| term_weight(table, i))
            .collect::<Result<_>>()?;
        let shifts = eigen_shifts(table)?;

        let mut common = Factorization::new();
        let mut scale = BigInt::one();
        for w in &weights {
            common = common.lcm(&w.split().1);
            scale = scale.lcm(w.coeff().denom());
        }
        let polys: Vec<LaurentPoly> = weights
            .par_iter()
            .map(|w| {
                let (num, den) = w.split();
                let c = w.coeff() * scale.clone();
                debug_assert!(c.is_integer());
                (&num.expand() * &common.quotient(&den).expand()).mul_term(&c.to_integer(), w.mono())
            })
            .collect();

        let mut terms = Vec::with_capacity(polys.len());
        for ((poly, shift), term) in polys.into_iter().zip(shifts).zip(&table.terms) {
            terms.push(TermData {
                shift: shift.to_monomial()?,
                sign: term.sign(),
                m_plus: term.m_plus as i64,
                m_minus: term.m_minus as i64,
                poly,
            });
        }
        Ok(XiSeries {
            table: table.clone(),
            terms,
            den: common.expand().scale(&scale),
            den_factors: common,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn table(&self) -> &DecompTable {
        &self.table
    }

    /// `C(Λ_α)`.
    pub fn casimir(&self) -> QuadExponent {
        self.table.rs.casimir(&self.table.lam_alpha).expect("table weights share the algebra")
    }

    /// `ξ_k` without consulting the cache.
    pub fn compute(&self, k: i64) -> RatFunc {
        let parity = if k % 2 == 0 { 1 } else { -1 };
        let mut num = LaurentPoly::zero();
        for t in &self.terms {
            let mult = t.m_plus + parity * t.m_minus;
            if mult == 0 {
                continue;
            }
            let c = BigInt::from(t.sign * mult);
            num = &num + &t.poly.mul_term(&c, t.shift.pow(k));
        }
        RatFunc::from_factored(num, self.den.clone(), self.den_factors.clone()).reduced()
    }

    pub fn xi(&self, k: i64) -> RatFunc {
        if let Some(v) = self.cache.lock().unwrap().get(&k) {
            return v.clone();
        }
        let v = self.compute(k);
        self.cache.lock().unwrap().entry(k).or_insert(v).clone()
    }

    /// `q^{−C(Λ)} ξ_k`, the factor each braid generator power contributes.
    pub fn normalized(&self, k: i64) -> Result<RatFunc> {
        let m = self.casimir().scale((-k).into()).to_monomial()?;
        Ok(self.xi(k).mul_monomial(m))
    }

    pub fn cached_keys(&self) -> Vec<i64> {
        let mut keys: Vec<i64> = self.cache.lock().unwrap().keys().copied().collect();
        keys.sort_unstable();
        keys
    }
}

/// `ξ_k` of a table.
pub fn xi_k(t: &DecompTable, k: i64) -> Result<RatFunc> {
    Ok(XiSeries::new(t)?.compute(k))
}

/// The braid `σ_{i₁}^{k₁} ⋯ σ_{i_{M−1}}^{k_{M−1}}` on `M` strands, each
/// generator used once; only the multiset of exponents matters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidSpec {
    pub exponents: Vec<i64>,
}

impl BraidSpec {
    pub fn new(exponents: Vec<i64>) -> Self {
        BraidSpec { exponents }
    }

    pub fn strands(&self) -> usize {
        self.exponents.len() + 1
    }

    /// `e(θ) = Σ k_i`.
    pub fn exponent_sum(&self) -> i64 {
        self.exponents.iter().sum()
    }
}

/// `L(θ̂) = q^{−C(Λ)·Σk_i} · Π ξ_{k_i}`.
pub fn link_polynomial_with(series: &XiSeries, b: &BraidSpec) -> Result<RatFunc> {
    let mut out = RatFunc::one();
    for &k in &b.exponents {
        out = out.mul(&series.normalized(k)?);
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

pub fn link_polynomial(t: &DecompTable, b: &BraidSpec) -> Result<RatFunc> {
    link_polynomial_with(&XiSeries::new(t)?, b)
}

/// The A-exponent of `q^{½C(ν) − C(Λ)}` is the same for every term.
pub fn a_exponent_uniform(t: &DecompTable) -> Result<bool> {
    let shifts = eigen_shifts(t)?;
    Ok(shifts.windows(2).all(|w| w[0].c == w[1].c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qpow;
    use crate::decomp::{gl21_adjoint_table, gl_family_table, osp_family_table};

    #[test]
    fn markov_values_small_tables() {
        for t in [gl_family_table(1, 1).unwrap(), gl_family_table(2, 1).unwrap(), osp_family_table(1).unwrap(), gl21_adjoint_table()] {
            let s = XiSeries::new(&t).unwrap();
            let c = s.casimir();
            assert!(s.xi(0).is_zero());
            assert_eq!(s.xi(1), qpow(c).unwrap());
            assert_eq!(s.xi(-1), qpow(-c).unwrap());
        }
    }

    #[test]
    fn cache_agrees_with_recomputation() {
        let s = XiSeries::new(&gl_family_table(2, 1).unwrap()).unwrap();
        for k in [3, -2, 3] {
            assert_eq!(s.xi(k), s.compute(k));
        }
        assert_eq!(s.cached_keys(), vec![-2, 3]);
    }

    #[test]
    fn unknot_and_split_link() {
        let t = gl_family_table(2, 1).unwrap();
        let s = XiSeries::new(&t).unwrap();
        assert!(link_polynomial_with(&s, &BraidSpec::new(vec![1])).unwrap().is_one());
        assert!(link_polynomial_with(&s, &BraidSpec::new(vec![-1])).unwrap().is_one());
        assert!(link_polynomial_with(&s, &BraidSpec::new(vec![3, 0])).unwrap().is_zero());
        let hopf = link_polynomial_with(&s, &BraidSpec::new(vec![2])).unwrap();
        assert!(hopf.is_free_of_a());
    }

    #[test]
    fn a_shift_is_uniform() {
        for t in [gl_family_table(2, 2).unwrap(), osp_family_table(2).unwrap(), gl21_adjoint_table()] {
            assert!(a_exponent_uniform(&t).unwrap());
        }
    }
}
