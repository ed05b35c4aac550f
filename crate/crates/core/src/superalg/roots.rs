use num_rational::Rational64;
use num_traits::{Signed, Zero};

use super::weight::{AlgebraKind, AlphaAffine, Weight};
use crate::arith::{rf_limit_q1, Monomial, QProduct, QuadExponent, RatFunc};
use crate::error::{Error, Result};

/// Positive roots, `ρ` and the diagonal invariant form of a type-I
/// superalgebra in its distinguished basis.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSystem {
    pub kind: AlgebraKind,
    pub even_pos: Vec<Weight>,
    pub odd_pos: Vec<Weight>,
    pub rho: Weight,
    pub metric: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unitarity {
    Type1,
    Type2,
    NonUnitary,
}

fn root(kind: AlgebraKind, plus: &[usize], minus: &[usize]) -> Weight {
    let mut w = Weight::zero(kind);
    for &i in plus {
        w.coords[i] = w.coords[i] + AlphaAffine::int(1);
    }
    for &i in minus {
        w.coords[i] = w.coords[i] - AlphaAffine::int(1);
    }
    w
}

pub fn make_algebra(kind: AlgebraKind) -> Result<RootSystem> {
    kind.validate()?;
    let mut even_pos = Vec::new();
    let mut odd_pos = Vec::new();
    let (rho, metric) = match kind {
        AlgebraKind::Gl { m, n } => {
            let eps = |i: usize| i;
            let del = |j: usize| m + j;
            for i in 0..m {
                for j in i + 1..m {
                    even_pos.push(root(kind, &[eps(i)], &[eps(j)]));
                }
            }
            for i in 0..n {
                for j in i + 1..n {
                    even_pos.push(root(kind, &[del(i)], &[del(j)]));
                }
            }
            for i in 0..m {
                for j in 0..n {
                    odd_pos.push(root(kind, &[eps(i)], &[del(j)]));
                }
            }
            let (mi, ni) = (m as i64, n as i64);
            let mut coords = Vec::with_capacity(m + n);
            for i in 1..=mi {
                coords.push(AlphaAffine::new(Rational64::new(mi - ni - 2 * i + 1, 2), Rational64::zero()));
            }
            for j in 1..=ni {
                coords.push(AlphaAffine::new(Rational64::new(mi + ni - 2 * j + 1, 2), Rational64::zero()));
            }
            let metric = std::iter::repeat_n(1, m).chain(std::iter::repeat_n(-1, n)).collect();
            (Weight::new(kind, coords)?, metric)
        }
        AlgebraKind::Osp { n } => {
            for i in 1..=n {
                for j in i + 1..=n {
                    even_pos.push(root(kind, &[i], &[j]));
                    even_pos.push(root(kind, &[i, j], &[]));
                }
                even_pos.push(root(kind, &[i, i], &[]));
            }
            for i in 1..=n {
                odd_pos.push(root(kind, &[0], &[i]));
                odd_pos.push(root(kind, &[0, i], &[]));
            }
            let ni = n as i64;
            let mut coords = vec![AlphaAffine::int(-ni)];
            for i in 1..=ni {
                coords.push(AlphaAffine::int(ni - i + 1));
            }
            let metric = std::iter::once(-1).chain(std::iter::repeat_n(1, n)).collect();
            (Weight::new(kind, coords)?, metric)
        }
    };
    Ok(RootSystem {
        kind,
        even_pos,
        odd_pos,
        rho,
        metric,
    })
}

impl RootSystem {
    fn check(&self, w: &Weight) -> Result<()> {
        if w.kind == self.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch)
        }
    }

    /// `(x, y)` for the invariant form.
    pub fn bilinear(&self, x: &Weight, y: &Weight) -> Result<QuadExponent> {
        self.check(x)?;
        self.check(y)?;
        Ok(x
            .coords
            .iter()
            .zip(&y.coords)
            .zip(&self.metric)
            .fold(QuadExponent::zero(), |acc, ((a, b), g)| acc + a.times(b) * *g))
    }

    /// `(x, β)` for an α-free `β`; the result stays affine in `α`.
    pub fn pair(&self, x: &Weight, beta: &Weight) -> AlphaAffine {
        x.coords
            .iter()
            .zip(&beta.coords)
            .zip(&self.metric)
            .fold(AlphaAffine::default(), |acc, ((a, b), g)| acc + *a * (b.c * *g))
    }

    pub fn two_rho(&self) -> Weight {
        self.rho.scale(2.into())
    }

    /// `C(Λ) = (Λ, Λ + 2ρ)`.
    pub fn casimir(&self, lam: &Weight) -> Result<QuadExponent> {
        self.check(lam)?;
        self.bilinear(lam, &(lam + &self.two_rho()))
    }

    /// Odd positive roots with `(Λ + ρ, β)` identically zero in `α`.
    pub fn atypical_roots(&self, lam: &Weight) -> Vec<usize> {
        let shifted = lam + &self.rho;
        (0..self.odd_pos.len())
            .filter(|&i| self.pair(&shifted, &self.odd_pos[i]).is_zero())
            .collect()
    }

    pub fn atypicality_index(&self, lam: &Weight) -> usize {
        self.atypical_roots(lam).len()
    }

    pub fn is_typical(&self, lam: &Weight) -> bool {
        self.atypicality_index(lam) == 0
    }

    pub fn unitarity_class(&self, lam: &Weight, alpha0: Rational64) -> Unitarity {
        let shifted = lam + &self.rho;
        let val = |w: &Weight, plus: usize, minus: usize| self.pair(w, &root(self.kind, &[plus], &[minus])).at(alpha0);
        match self.kind {
            AlgebraKind::Gl { m, n } => {
                let eps = |i: usize| i - 1;
                let del = |j: usize| m + j - 1;
                let type1 = val(&shifted, eps(m), del(n)).is_positive()
                    || (1..=n).any(|w| val(&shifted, eps(m), del(w)).is_zero() && val(lam, del(w), del(n)).is_zero());
                let type2 = val(&shifted, eps(1), del(1)).is_negative()
                    || (1..=m).any(|k| val(&shifted, eps(k), del(1)).is_zero() && val(lam, eps(1), eps(k)).is_zero());
                if type1 {
                    Unitarity::Type1
                } else if type2 {
                    Unitarity::Type2
                } else {
                    Unitarity::NonUnitary
                }
            }
            AlgebraKind::Osp { n } => {
                let plus = |w: &Weight, k: usize| self.pair(w, &root(self.kind, &[0, k], &[])).at(alpha0);
                let type1 = !val(lam, 0, 1).is_negative();
                let type2 = plus(&shifted, 1).is_negative()
                    || (1..=n).any(|k| plus(&shifted, k).is_zero() && val(lam, 1, k).is_zero())
                    || lam.at(alpha0).iter().all(Zero::is_zero);
                if type1 {
                    Unitarity::Type1
                } else if type2 {
                    Unitarity::Type2
                } else {
                    Unitarity::NonUnitary
                }
            }
        }
    }

    /// `Π [(Λ+ρ, β)]_q / [(ρ, β)]_q` over the even positive roots, in
    /// factored form.
    pub fn q_dimension_product(&self, lam: &Weight) -> Result<QProduct> {
        self.check(lam)?;
        let shifted = lam + &self.rho;
        let mut out = QProduct::one();
        for beta in &self.even_pos {
            let num = bracket(self.pair(&shifted, beta))?;
            let den = bracket(self.pair(&self.rho, beta))?;
            out = out * num / den;
        }
        Ok(out)
    }

    pub fn q_dimension(&self, lam: &Weight) -> Result<RatFunc> {
        Ok(self.q_dimension_product(lam)?.to_ratfunc())
    }

    /// `Π [(Λ+ρ, β)]_q` over the odd positive roots.
    pub fn gamma0_numerator(&self, lam: &Weight) -> Result<QProduct> {
        self.check(lam)?;
        let shifted = lam + &self.rho;
        self.odd_pos
            .iter()
            .map(|beta| bracket(self.pair(&shifted, beta)))
            .product()
    }

    /// Eigenvalue of `Γ₀`: the odd-root bracket product divided by the
    /// brackets `[(ρ, β)]_q` that do not vanish.
    pub fn gamma0_eigenvalue(&self, lam: &Weight) -> Result<RatFunc> {
        let mut out = self.gamma0_numerator(lam)?;
        for beta in &self.odd_pos {
            let v = self.pair(&self.rho, beta);
            if !v.is_zero() {
                out = out / bracket(v)?;
            }
        }
        Ok(out.to_ratfunc())
    }

    /// Classical dimension of the even-subalgebra module, at `α = alpha0`.
    pub fn classical_dim0(&self, lam: &Weight, alpha0: Rational64) -> Result<u64> {
        let qd = self.q_dimension(lam)?;
        let v = rf_limit_q1(&qd, alpha0).map_err(|e| Error::NonIntegralDimension(format!("{lam} at alpha = {alpha0}: {e}")))?;
        if v.is_integer() && v.numer() > &0.into() {
            Ok(v.to_integer().try_into().map_err(|_| Error::NonIntegralDimension(v.to_string()))?)
        } else {
            Err(Error::NonIntegralDimension(format!("{v} for {lam} at alpha = {alpha0}")))
        }
    }
}

/// `[x]_q` for `x = c + aα` with `c ∈ ½ℤ`, `a ∈ ℤ`.
pub fn bracket(x: AlphaAffine) -> Result<QProduct> {
    let c2 = x.c * 2;
    if !c2.is_integer() || !x.a.is_integer() {
        return Err(Error::NonRepresentableBracketArgument(x.to_string()));
    }
    Ok(QProduct::bracket(Monomial::from_twice(c2.to_integer(), 2 * x.a.to_integer(), 0)))
}

pub fn bilinear(rs: &RootSystem, x: &Weight, y: &Weight) -> Result<QuadExponent> {
    rs.bilinear(x, y)
}

pub fn casimir(rs: &RootSystem, lam: &Weight) -> Result<QuadExponent> {
    rs.casimir(lam)
}

pub fn atypicality_index(rs: &RootSystem, lam: &Weight) -> usize {
    rs.atypicality_index(lam)
}

pub fn unitarity_class(rs: &RootSystem, lam: &Weight, alpha0: Rational64) -> Unitarity {
    rs.unitarity_class(lam, alpha0)
}

pub fn q_dimension(rs: &RootSystem, lam: &Weight) -> Result<RatFunc> {
    rs.q_dimension(lam)
}

pub fn gamma0_eigenvalue(rs: &RootSystem, lam: &Weight) -> Result<RatFunc> {
    rs.gamma0_eigenvalue(lam)
}

pub fn classical_dim0(rs: &RootSystem, lam: &Weight, alpha0: Rational64) -> Result<u64> {
    rs.classical_dim0(lam, alpha0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{qnum, AffineInt};

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn alpha_delta(kind: AlgebraKind) -> Weight {
        Weight::family_direction(kind).times_alpha()
    }

    #[test]
    fn rho_values() {
        let g21 = make_algebra(AlgebraKind::gl(2, 1)).unwrap();
        assert_eq!(g21.rho, Weight::from_ints(g21.kind, &[0, -1, 1]).unwrap());
        let g22 = make_algebra(AlgebraKind::gl(2, 2)).unwrap();
        assert_eq!(g22.odd_pos.len(), 4);
        assert_eq!(g22.two_rho(), Weight::from_ints(g22.kind, &[-1, -3, 3, 1]).unwrap());
        assert_eq!(make_algebra(AlgebraKind::osp(2)).unwrap().odd_pos.len(), 4);
        assert!(matches!(make_algebra(AlgebraKind::gl(0, 2)), Err(Error::InvalidRank { .. })));
    }

    #[test]
    fn casimir_values() {
        let k = AlgebraKind::gl(2, 2);
        let rs = make_algebra(k).unwrap();
        let d = Weight::family_direction(k);
        assert_eq!(rs.bilinear(&d, &d).unwrap(), QuadExponent::from_ints(-2, 0, 0));
        assert_eq!(rs.casimir(&alpha_delta(k)).unwrap(), QuadExponent::from_ints(0, -4, -2));
        let w = Weight::parse(k, "(0,-1|2*al+1,2*al)").unwrap();
        assert_eq!(rs.casimir(&w).unwrap(), QuadExponent::from_ints(0, -12, -8));
        assert!(rs.casimir(&Weight::zero(k)).unwrap().is_zero());

        let o = AlgebraKind::osp(3);
        let rs = make_algebra(o).unwrap();
        assert_eq!(rs.casimir(&alpha_delta(o)).unwrap(), QuadExponent::from_ints(0, 6, -1));
    }

    #[test]
    fn atypicality() {
        let k = AlgebraKind::gl(2, 1);
        let rs = make_algebra(k).unwrap();
        assert_eq!(rs.atypicality_index(&alpha_delta(k)), 0);
        assert_eq!(rs.atypicality_index(&Weight::zero(k)), 1);
    }

    #[test]
    fn unitarity_ranges() {
        let k = AlgebraKind::gl(2, 2);
        let rs = make_algebra(k).unwrap();
        let w = alpha_delta(k);
        assert_eq!(rs.unitarity_class(&w, 2.into()), Unitarity::Type1);
        assert_eq!(rs.unitarity_class(&w, (-2).into()), Unitarity::Type2);
        assert_eq!(rs.unitarity_class(&w, r(1, 2)), Unitarity::NonUnitary);
        let o = AlgebraKind::osp(2);
        let rs = make_algebra(o).unwrap();
        let w = alpha_delta(o);
        assert_eq!(rs.unitarity_class(&w, (-1).into()), Unitarity::Type1);
        assert_eq!(rs.unitarity_class(&w, 5.into()), Unitarity::Type2);
        assert_eq!(rs.unitarity_class(&w, 3.into()), Unitarity::Type2);
        assert_eq!(rs.unitarity_class(&w, r(7, 2)), Unitarity::NonUnitary);
    }

    #[test]
    fn q_dimensions() {
        let k = AlgebraKind::gl(2, 2);
        let rs = make_algebra(k).unwrap();
        let w = Weight::parse(k, "(0,-1|2*al+1,2*al)").unwrap();
        let two = qnum(AffineInt::new(2, 0));
        assert_eq!(rs.q_dimension(&w).unwrap(), two.mul(&two));
        let vertical = Weight::parse(k, "(-1,-1|2*al+2,2*al)").unwrap();
        assert_eq!(rs.q_dimension(&vertical).unwrap(), qnum(AffineInt::new(3, 0)));
        assert!(rs.q_dimension(&Weight::zero(k)).unwrap().is_one());
        assert_eq!(rs.classical_dim0(&w, r(1, 3)).unwrap(), 4);
        assert_eq!(rs.classical_dim0(&Weight::zero(k), 0.into()).unwrap(), 1);
    }

    #[test]
    fn gamma0_adjoint_shape() {
        let k = AlgebraKind::gl(2, 1);
        let rs = make_algebra(k).unwrap();
        let w = Weight::from_ints(k, &[3, 1, -1]).unwrap();
        let expect = qnum(AffineInt::new(3, 0)).mul(&qnum(AffineInt::new(0, 0)));
        assert_eq!(rs.gamma0_eigenvalue(&w).unwrap(), expect);
        let w = Weight::from_ints(k, &[4, 1, 1]).unwrap();
        let expect = qnum(AffineInt::new(6, 0)).mul(&qnum(AffineInt::new(2, 0)));
        assert_eq!(rs.gamma0_eigenvalue(&w).unwrap(), expect);
    }
}
