//! Cyclotomic factors `Φ_d(Y)` of a primitive monomial direction `Y`.
//!
//! Every denominator the engine produces is a product of binomials
//! `Z ± Z⁻¹` with `Z` a monomial in `q^{1/2}` and `p^{1/2}`. Writing `Z = Y^N`
//! for a primitive `Y`, each binomial splits into cyclotomic polynomials in `Y`,
//! which are irreducible. Denominators are tracked as multisets of these
//! factors so that sums can use exact least common multiples instead of
//! multiplying denominators together.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::monomial::Monomial;
use super::poly::LaurentPoly;

/// Coefficients of the `d`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic(d: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&d) {
        return c.clone();
    }
    assert!(d >= 1, "cyclotomic order must be positive");
    // x^d - 1 divided by every Φ_e with e | d, e < d
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            num = div_monic(&num, &cyclotomic(e)).expect("cyclotomic divisibility");
        }
    }
    cache.lock().unwrap().insert(d, num.clone());
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dn = den.len() - 1;
    if num.len() <= dn {
        return None;
    }
    let mut rem = num.to_vec();
    let mut quo = vec![0i64; num.len() - dn];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        if c != 0 {
            for (j, dc) in den.iter().enumerate() {
                rem[i + j] -= c * dc;
            }
        }
    }
    rem.iter().all(|&c| c == 0).then_some(quo)
}

fn euler_phi(d: u32) -> u32 {
    (1..=d).filter(|k| k.gcd(&d) == 1).count() as u32
}

/// Extended Euclid: returns `(g, x, y)` with `a·x + b·y = g`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// `Φ_order(Y)` with `Y = q^{u/2} p^{v/2}`; `(u, v)` primitive and normalized
/// so that its first non-zero entry is positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycloFactor {
    pub u: i64,
    pub v: i64,
    pub order: u32,
}

impl CycloFactor {
    pub fn base(&self) -> Monomial {
        Monomial::from_twice(self.u, self.v, 0)
    }

    pub fn degree(&self) -> u32 {
        euler_phi(self.order)
    }

    pub fn expand(&self) -> LaurentPoly {
        let b = self.base();
        LaurentPoly::from_terms(
            cyclotomic(self.order)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (b.pow(i as i64), BigInt::from(c))),
        )
    }

    /// Value at `q = 1` along a direction that does not degenerate:
    /// `Φ_d(1)`, which is `p` for prime powers `d = p^k` and `1` otherwise.
    /// `Φ_1(1) = 0` is handled by the caller.
    pub fn value_at_one(&self) -> i64 {
        cyclotomic(self.order).iter().sum()
    }

    /// Exact division of `poly` by this factor, `None` if it does not divide.
    pub fn divide(&self, poly: &LaurentPoly) -> Option<LaurentPoly> {
        if poly.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let (u, v) = (self.u, self.v);
        let (g, x, y) = ext_gcd(u, v);
        debug_assert_eq!(g, 1);
        // complement direction (u', v') with u·v' - v·u' = 1
        let (up, vp) = (-y, x);
        let coeffs = cyclotomic(self.order);
        let deg = coeffs.len() - 1;

        let mut groups: BTreeMap<(i64, i64), BTreeMap<i64, BigInt>> = BTreeMap::new();
        for (m, c) in poly.terms() {
            let (eq, ep, ea) = m.twice();
            let s = eq * vp - ep * up;
            let t = u * ep - v * eq;
            groups.entry((t, ea)).or_default().insert(s, c.clone());
        }

        let mut out = LaurentPoly::zero();
        for ((t, ea), slice) in groups {
            let lo = *slice.keys().next().unwrap();
            let hi = *slice.keys().next_back().unwrap();
            let len = (hi - lo + 1) as usize;
            if len <= deg {
                return None;
            }
            let mut rem = vec![BigInt::zero(); len];
            for (s, c) in slice {
                rem[(s - lo) as usize] = c;
            }
            let mut quo = vec![BigInt::zero(); len - deg];
            for i in (0..quo.len()).rev() {
                let c = std::mem::take(&mut rem[i + deg]);
                if c.is_zero() {
                    continue;
                }
                for (j, dc) in coeffs.iter().enumerate().take(deg) {
                    if *dc != 0 {
                        rem[i + j] -= &c * *dc;
                    }
                }
                quo[i] = c;
            }
            if rem.iter().any(|c| !c.is_zero()) {
                return None;
            }
            for (i, c) in quo.into_iter().enumerate() {
                let s = lo + i as i64;
                let m = Monomial::from_twice(s * u + t * up, s * v + t * vp, ea);
                out.add_term(m, c);
            }
        }
        Some(out)
    }
}

/// Multiset of cyclotomic factors.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Factorization(pub BTreeMap<CycloFactor, u32>);

impl Factorization {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, f: CycloFactor, e: u32) {
        if e > 0 {
            *self.0.entry(f).or_insert(0) += e;
        }
    }

    pub fn merged(&self, other: &Factorization) -> Factorization {
        let mut out = self.clone();
        for (f, e) in &other.0 {
            out.push(*f, *e);
        }
        out
    }

    pub fn lcm(&self, other: &Factorization) -> Factorization {
        let mut out = self.clone();
        for (f, e) in &other.0 {
            let slot = out.0.entry(*f).or_insert(0);
            *slot = (*slot).max(*e);
        }
        out
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn quotient(&self, other: &Factorization) -> Factorization {
        let mut out = Factorization::new();
        for (f, e) in &self.0 {
            let o = other.0.get(f).copied().unwrap_or(0);
            debug_assert!(o <= *e);
            out.push(*f, e - o);
        }
        out
    }

    pub fn remove_one(&mut self, f: &CycloFactor) {
        if let Some(e) = self.0.get_mut(f) {
            *e -= 1;
            if *e == 0 {
                self.0.remove(f);
            }
        }
    }

    pub fn expand(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (f, e) in &self.0 {
            acc = &acc * &f.expand().pow(*e);
        }
        acc
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycloFactor, &u32)> {
        self.0.iter()
    }
}

/// Factors `Y^N` for a doubled exponent vector `(x, y)`: returns the
/// normalized primitive direction and the signed power `N`.
fn primitive_power(x: i64, y: i64) -> (i64, i64, i64) {
    let g = x.gcd(&y);
    let (mut u, mut v, mut n) = (x / g, y / g, g);
    if u < 0 || (u == 0 && v < 0) {
        u = -u;
        v = -v;
        n = -n;
    }
    (u, v, n)
}

/// Factors `1 + sign·Z` for `Z = q^{x/2} p^{y/2}` as `unit · monomial · Π Φ`.
/// Returns `None` for `Z = 1`.
pub fn factor_one_plus(sign: i64, x: i64, y: i64) -> Option<(i64, Monomial, Factorization)> {
    if x == 0 && y == 0 {
        return None;
    }
    let (u, v, n) = primitive_power(x, y);
    let big_n = n.unsigned_abs() as u32;
    let mut fz = Factorization::new();
    let divisors: Vec<u32> = if sign < 0 {
        (1..=big_n).filter(|d| big_n.is_multiple_of(*d)).collect()
    } else {
        (1..=2 * big_n).filter(|d| (2 * big_n).is_multiple_of(*d) && !big_n.is_multiple_of(*d)).collect()
    };
    for d in divisors {
        fz.push(CycloFactor { u, v, order: d }, 1);
    }
    let base = Monomial::from_twice(u, v, 0);
    let (unit, mono) = match (n > 0, sign < 0) {
        // 1 - Y^N = -(Y^N - 1)
        (true, true) => (-1, Monomial::ONE),
        (true, false) => (1, Monomial::ONE),
        // 1 ± Y^{-|N|} = Y^{-|N|} (Y^{|N|} ± 1)
        (false, _) => (1, base.pow(n)),
    };
    Some((unit, mono, fz))
}

/// Attempts to write a polynomial as `c · M · Π Φ`: succeeds for single
/// terms and for binomials `c·M₁ ± c·M₂` whose ratio carries no `A` power.
pub fn factor_small(poly: &LaurentPoly) -> Option<(BigInt, Monomial, Factorization)> {
    if let Some((c, m)) = poly.as_single_term() {
        return Some((c.clone(), *m, Factorization::new()));
    }
    if poly.len() != 2 {
        return None;
    }
    let mut it = poly.terms();
    let (m1, c1) = it.next().unwrap();
    let (m2, c2) = it.next().unwrap();
    let sign = if c1 == c2 {
        1
    } else if *c1 == -c2 {
        -1
    } else {
        return None;
    };
    let ratio = *m2 * m1.inv();
    if !ratio.ea.is_zero() {
        return None;
    }
    let (unit, mono, fz) = factor_one_plus(sign, ratio.eq.0, ratio.ep.0)?;
    Some((c1 * BigInt::from(unit), *m1 * mono, fz))
}
