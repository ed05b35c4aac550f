use crate::arith::{Monomial, QProduct, RatFunc};
use crate::decomp::YoungDiagram;
use crate::error::{Error, Result};

/// `[a + bα]_q`.
pub(crate) fn br(a: i64, b: i64) -> QProduct {
    QProduct::bracket(Monomial::from_twice(2 * a, 2 * b, 0))
}

/// `q^{a + bα + cα²}`.
pub(crate) fn qe(a: i64, b: i64, c: i64) -> Monomial {
    Monomial::from_twice(2 * a, 2 * b, 2 * c)
}

/// `(−1)^{(k−1)·level}`.
pub(crate) fn level_sign(k: i64, level: usize) -> i64 {
    if (k - 1).rem_euclid(2) == 1 && level % 2 == 1 {
        -1
    } else {
        1
    }
}

pub(crate) fn signed(sign: i64, p: QProduct) -> QProduct {
    if sign < 0 {
        -p
    } else {
        p
    }
}

pub(crate) fn sum(terms: impl IntoIterator<Item = QProduct>) -> RatFunc {
    terms.into_iter().map(|t| t.to_ratfunc()).sum()
}

/// How the inner `Π_l` of the displayed `χ_α([λ])` nests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LNesting {
    /// `Π_i ( Π_j [..]/[..] ) · Π_l [..]/[..]`.
    InsideRowsOnly,
    /// `Π_i Π_j ( [..]/[..] · Π_l [..]/[..] )`.
    InsideRowsAndColumns,
}

/// The interpretation fixed by [`resolve_l_nesting`].
pub const ACCEPTED_NESTING: LNesting = LNesting::InsideRowsOnly;

/// Which `γ_α[λ]` to use for `gl(m|n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaForm {
    /// `Σ λ_i(λ_i + 1 − 2α − 2i) − nα²`.
    Corrected,
    /// `2Σ λ_i(λ_i + 1 − 2α − 2i) − αn(3α + m)`, as displayed.
    Displayed,
}

/// `γ_α[λ]` as `(a, b, c)` in `a + bα + cα²`.
pub fn gamma_gl(m: usize, n: usize, d: &YoungDiagram, form: GammaForm) -> (i64, i64, i64) {
    let (m, n) = (m as i64, n as i64);
    let mut a = 0;
    let mut b = 0;
    for (idx, &l) in d.rows.iter().enumerate() {
        let (i, l) = (idx as i64 + 1, l as i64);
        a += l * (l + 1 - 2 * i);
        b -= 2 * l;
    }
    match form {
        GammaForm::Corrected => (a, b, -n),
        GammaForm::Displayed => (2 * a, 2 * b - n * m, -3 * n),
    }
}

/// `χ_α([λ]) = χ_{αδ}(Γ₀)/χ_{Λ_[λ]+2αδ}(Γ₀)` as displayed, with `λ_i = 0`
/// past the last row.
pub fn chi_gl(m: usize, n: usize, d: &YoungDiagram, nesting: LNesting) -> QProduct {
    let t = d.len();
    let mut out = QProduct::one();
    for i in 1..=m {
        let li = d.row(i) as i64;
        let ii = i as i64;
        let mut l_part = QProduct::one();
        for l in 1..=t {
            let ll = d.row(l) as i64;
            let lv = l as i64;
            l_part = l_part * br(ll + li - ii + 1 - lv, -2) / br(li - ii + 1 - lv, -2);
        }
        for j in 1..=n {
            let jj = j as i64;
            out = out * br(ii - jj, 1) / br(ii - jj - li, 2);
            if nesting == LNesting::InsideRowsAndColumns {
                out = out * l_part.clone();
            }
        }
        if nesting == LNesting::InsideRowsOnly {
            out = out * l_part;
        }
    }
    out
}

/// `D⁰_q(Λ_[λ])`: the `gl(m)` q-dimension of `λ` times the `gl(n)`
/// q-dimension of its conjugate.
pub fn dim0_gl(m: usize, n: usize, d: &YoungDiagram) -> QProduct {
    let weyl = |parts: &YoungDiagram, rank: usize| {
        let mut out = QProduct::one();
        for i in 1..=rank {
            for j in i + 1..=rank {
                let diff = parts.row(i) as i64 - parts.row(j) as i64;
                out = out * br(diff + (j - i) as i64, 0) / br((j - i) as i64, 0);
            }
        }
        out
    };
    weyl(d, m) * weyl(&d.conjugate(), n)
}

/// `Σ_[λ] (−1)^{(k−1)N_λ} q^{kγ_α[λ]} χ_α([λ]) D⁰_q(Λ_[λ])`.
pub fn xi_explicit_glmn_with(m: usize, n: usize, k: i64, nesting: LNesting, gamma: GammaForm) -> RatFunc {
    sum(crate::decomp::enumerate_allowable(m, n).iter().map(|d| {
        let (a, b, c) = gamma_gl(m, n, d, gamma);
        let term = QProduct::monomial(qe(a, b, c).pow(k)) * chi_gl(m, n, d, nesting) * dim0_gl(m, n, d);
        signed(level_sign(k, d.size()), term)
    }))
}

/// The explicit `gl(m|n)` formula with the accepted nesting and corrected
/// `γ`. Stated for `m ≥ n`.
pub fn xi_explicit_glmn(m: usize, n: usize, k: i64) -> Result<RatFunc> {
    if m < n || n == 0 {
        return Err(Error::InvalidRank { m: m as i64, n: n as i64 });
    }
    let nesting = resolve_l_nesting()?;
    Ok(xi_explicit_glmn_with(m, n, k, nesting, GammaForm::Corrected))
}

/// The three displayed `gl(2|2)` values of `χ_α`, keyed by diagram rows.
fn gl22_chi_values() -> Vec<(Vec<usize>, QProduct)> {
    let top = br(0, 1).pow(2) * br(-1, 1) * br(1, 1);
    let a = top.clone() / (br(0, 2).pow(2) * br(-1, 2) * br(1, 2));
    let b = top.clone() / (br(0, 2).pow(2) * br(-2, 2) * br(2, 2));
    let c = top / (br(1, 2) * br(-1, 2) * br(-2, 2) * br(2, 2));
    vec![
        (vec![], a.clone()),
        (vec![1], b.clone()),
        (vec![2], c.clone()),
        (vec![1, 1], c),
        (vec![2, 1], b),
        (vec![2, 2], a),
    ]
}

/// `χ_α([1^t])` for `gl(m|1)` as in the column-diagram reduction.
fn glm1_chi(m: usize, t: usize) -> QProduct {
    let mut out = QProduct::one();
    for i in 1..=m as i64 {
        let li = if i <= t as i64 { 1 } else { 0 };
        out = out * br(i - 1, 1) / br(i + t as i64 - 1 - li, 2);
    }
    out
}

fn nesting_matches(nesting: LNesting) -> bool {
    let gl22 = gl22_chi_values()
        .into_iter()
        .all(|(rows, want)| chi_gl(2, 2, &YoungDiagram { rows }, nesting).to_ratfunc() == want.to_ratfunc());
    let reduction = (1..=4).all(|m| {
        (0..=m).all(|t| chi_gl(m, 1, &YoungDiagram { rows: vec![1; t] }, nesting).to_ratfunc() == glm1_chi(m, t).to_ratfunc())
    });
    gl22 && reduction
}

/// Tries both readings of the `Π_l` nesting against the displayed `gl(2|2)`
/// `χ_α` values and the `gl(m|1)` reduction; exactly one must survive.
pub fn resolve_l_nesting() -> Result<LNesting> {
    let ok: Vec<LNesting> = [LNesting::InsideRowsOnly, LNesting::InsideRowsAndColumns]
        .into_iter()
        .filter(|n| nesting_matches(*n))
        .collect();
    match ok.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::IndexNestingUnresolved("no reading reproduces the reference values".into())),
        _ => Err(Error::IndexNestingUnresolved("both readings reproduce the reference values".into())),
    }
}

/// The `gl(m|1)` closed form summed over column diagrams `[1^t]`.
pub fn xi_explicit_glm1(m: usize, k: i64) -> RatFunc {
    let mi = m as i64;
    sum((0..=m).map(|t| {
        let ti = t as i64;
        let mut p = QProduct::monomial(qe(-ti * (ti - 1), -2 * ti, -1).pow(k));
        for i in 1..=ti {
            p = p * br(mi + 1 - i, 0) * br(i - 1, 1) / (br(ti + 1 - i, 0) * br(i + ti - 2, 2));
        }
        for i in ti + 1..=mi {
            p = p * br(i - 1, 1) / br(i + ti - 1, 2);
        }
        signed(level_sign(k, t), p)
    }))
}

/// `q^z + q^{−z}` for `z = a + bα`.
fn plus(a: i64, b: i64) -> QProduct {
    QProduct::binomial(Monomial::from_twice(2 * a, 2 * b, 0), 1)
}

/// `q^z − q^{−z}` for `z = a + bα`.
fn minus(a: i64, b: i64) -> QProduct {
    QProduct::binomial(Monomial::from_twice(2 * a, 2 * b, 0), -1)
}

/// The three-line closed form of `ξ_k` for `gl(2|2)`. With `printed` set,
/// the third line is transcribed exactly as displayed (prefactor
/// `q^{−2k(α²+α+1)}(q^{2kα}+q^{−2kα})` and `(q^α+q^{−α})²`); otherwise it
/// reads `q^{−2kα(α+2)}(q^{2k}+q^{−2k})` and `(q^α−q^{−α})²`.
pub fn gl22_closed_form(k: i64, printed: bool) -> RatFunc {
    let pre = QProduct::monomial(qe(0, -4, -2).pow(k));
    let line1 = pre.clone() * plus(0, 4 * k) * br(1, 1) * br(-1, 1) / (plus(0, 1).pow(2) * br(1, 2) * br(-1, 2));
    let line2 = pre.clone() * plus(0, 2 * k) * br(2, 0).pow(2) / (plus(0, 1).pow(2) * plus(-1, 1) * plus(1, 1));
    let line2 = if k.rem_euclid(2) == 0 { -line2 } else { line2 };
    let den3 = minus(-1, 2) * minus(1, 2) * plus(-1, 1) * plus(1, 1);
    let line3 = if printed {
        QProduct::monomial(qe(-2, -2, -2).pow(k)) * plus(0, 2 * k) * br(3, 0) * plus(0, 1).pow(2) / den3
    } else {
        pre * plus(2 * k, 0) * br(3, 0) * minus(0, 1).pow(2) / den3
    };
    sum([line1, line2, line3])
}

/// The six-term `ξ_k` of the `gl(2|1)` adjoint family. With `printed` set,
/// the `V(2,0|2α−2)` term carries the displayed exponent `−kα(α+2)`;
/// otherwise `−kα(α−2)`.
pub fn xi_explicit_gl21_adjoint(k: i64, printed: bool) -> RatFunc {
    let e = |a: i64, b: i64, c: i64| QProduct::monomial(qe(a, b, c).pow(k));
    let pm = if k.rem_euclid(2) == 0 { 1 } else { -1 };
    let top = br(1, 1) * br(-1, 1);
    let first_exp = if printed { e(0, -2, -1) } else { e(0, 2, -1) };
    let t1 = first_exp * top.clone() * br(3, 0) / (br(1, 2) * br(-2, 2) * br(2, 0));
    let t2 = e(0, -2, -1) * top.clone() * br(3, 0) / (br(2, 2) * br(-1, 2) * br(2, 0));
    let t3 = signed(pm, e(-2, -2, -1) * top.clone() / (br(1, 2) * br(0, 2) * br(2, 0)));
    let t4 = signed(pm, e(-2, 2, -1) * top.clone() / (br(0, 2) * br(-1, 2) * br(2, 0)));
    let t5 = signed(-pm, e(2, 0, -1) * top.clone() * br(4, 0) / (br(2, 2) * br(-2, 2) * br(2, 0)));
    let t6 = (e(-1, 0, -1) * top / (br(1, 2) * br(-1, 2))) * QProduct::integer(-(1 + pm));
    sum([t1, t2, t3, t4, t5, t6])
}

/// Which transcription of the `osp(2|2n)` products to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OspForm {
    /// As displayed: `∓δ_{i≤c}` in `χ_α(c,d)` and only the `i, j ≤ c` and
    /// `l ≤ c` factors in `D⁰_q(λ_c)`.
    Printed,
    /// Signs of `δ_{i≤c}` exchanged and the factors
    /// `[j−i+1][2n+3−i−j]/([j−i][2n+2−i−j])`, `i ≤ c < j`, included.
    Corrected,
}

pub fn chi_osp(n: usize, c: usize, d: usize, form: OspForm) -> QProduct {
    let (ni, ci, di) = (n as i64, c as i64, d as i64);
    let mut out = QProduct::one();
    for i in 1..=ni {
        let delta = if i <= ci { 1 } else { 0 };
        let s = if form == OspForm::Printed { -delta } else { delta };
        out = out * br(2 * ni + 1 - i, -1) * br(i - 1, -1)
            / (br(ci + 2 * di + 2 * ni + 1 - i + s, -2) * br(ci + 2 * di + i - 1 - s, -2));
    }
    out
}

pub fn dim0_osp(n: usize, c: usize, form: OspForm) -> QProduct {
    let (ni, ci) = (n as i64, c as i64);
    let mut out = QProduct::one();
    for i in 1..=ci {
        for j in i + 1..=ci {
            out = out * br(2 * (ni + 2) - i - j, 0) / br(2 * (ni + 1) - i - j, 0);
        }
    }
    for l in 1..=ci {
        out = out * br(2 * (ni + 2 - l), 0) / br(2 * (ni + 1 - l), 0);
    }
    if form == OspForm::Corrected {
        for i in 1..=ci {
            for j in ci + 1..=ni {
                out = out * br(j - i + 1, 0) * br(2 * ni + 3 - i - j, 0) / (br(j - i, 0) * br(2 * ni + 2 - i - j, 0));
            }
        }
    }
    out
}

/// `γ_α = ½C(Λ_{c,d}) − C(αε₀)` from the closed Casimir values.
pub fn gamma_osp(n: usize, c: usize, d: usize) -> (i64, i64, i64) {
    let (n, c, d) = (n as i64, c as i64, d as i64);
    (-2 * d * (n + c + d) - c * (c - 1), 2 * (c + 2 * d), -1)
}

pub fn xi_explicit_osp_with(n: usize, k: i64, form: OspForm) -> RatFunc {
    let mut terms = Vec::new();
    for c in 0..=n {
        for d in 0..=n - c {
            let (a, b, cc) = gamma_osp(n, c, d);
            let p = QProduct::monomial(qe(a, b, cc).pow(k)) * chi_osp(n, c, d, form) * dim0_osp(n, c, form);
            terms.push(signed(level_sign(k, c + 2 * d), p));
        }
    }
    sum(terms)
}

/// The explicit `osp(2|2n)` double sum, corrected transcription.
pub fn xi_explicit_osp(n: usize, k: i64) -> RatFunc {
    xi_explicit_osp_with(n, k, OspForm::Corrected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qpow;
    use crate::arith::QuadExponent;

    #[test]
    fn nesting_is_resolved_uniquely() {
        assert_eq!(resolve_l_nesting().unwrap(), ACCEPTED_NESTING);
        assert!(!nesting_matches(LNesting::InsideRowsAndColumns));
    }

    #[test]
    fn gl22_gamma_values() {
        let g = |rows: Vec<usize>| gamma_gl(2, 2, &YoungDiagram { rows }, GammaForm::Corrected);
        assert_eq!(g(vec![]), (0, 0, -2));
        assert_eq!(g(vec![1]), (0, -2, -2));
        assert_eq!(g(vec![2]), (2, -4, -2));
        assert_eq!(g(vec![1, 1]), (-2, -4, -2));
        assert_eq!(g(vec![2, 1]), (0, -6, -2));
        assert_eq!(g(vec![2, 2]), (0, -8, -2));
        assert_ne!(gamma_gl(2, 2, &YoungDiagram::empty(), GammaForm::Displayed), (0, 0, -2));
    }

    #[test]
    fn gl22_dimensions() {
        let d = |rows: Vec<usize>| dim0_gl(2, 2, &YoungDiagram { rows }).to_ratfunc();
        assert_eq!(d(vec![1]), br(2, 0).pow(2).to_ratfunc());
        assert_eq!(d(vec![2]), br(3, 0).to_ratfunc());
        assert_eq!(d(vec![1, 1]), br(3, 0).to_ratfunc());
        assert!(d(vec![2, 2]).is_one());
    }

    #[test]
    fn glm1_agrees_with_general_formula() {
        for m in 1..=3 {
            for k in -2..=2 {
                assert_eq!(xi_explicit_glmn(m, 1, k).unwrap(), xi_explicit_glm1(m, k));
            }
        }
    }

    #[test]
    fn oracle_markov_values() {
        // C(αδ) = −αn(α+m), C(αε₀) = α(2n−α)
        assert_eq!(xi_explicit_glm1(2, 1), qpow(QuadExponent::from_ints(0, -2, -1)).unwrap());
        assert_eq!(xi_explicit_osp(1, 1), qpow(QuadExponent::from_ints(0, 2, -1)).unwrap());
        assert!(xi_explicit_osp(2, 0).is_zero());
        assert!(xi_explicit_glm1(3, 0).is_zero());
        assert!(xi_explicit_gl21_adjoint(0, false).is_zero());
        assert_eq!(xi_explicit_gl21_adjoint(1, false), qpow(QuadExponent::from_ints(2, 0, -1)).unwrap());
    }

    #[test]
    fn printed_and_corrected_gl22_closed_forms_differ() {
        assert_ne!(gl22_closed_form(1, true), gl22_closed_form(1, false));
        assert_eq!(gl22_closed_form(2, false), xi_explicit_glmn(2, 2, 2).unwrap());
    }
}
