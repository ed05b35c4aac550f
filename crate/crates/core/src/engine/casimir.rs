use crate::arith::{LaurentPoly, Monomial, QProduct, RatFunc};
use crate::decomp::DecompTable;
use crate::error::Result;
use crate::superalg::{RootSystem, Weight};

use super::xi::term_weight;

/// `χ_ν(c) = (1 − q^{C(μ)+C(Λ)−C(ν)}) / (q − q⁻¹)`.
pub fn chi_nu_c(rs: &RootSystem, mu: &Weight, lam: &Weight, nu: &Weight) -> Result<RatFunc> {
    let e = rs.casimir(mu)? + rs.casimir(lam)? - rs.casimir(nu)?;
    let m = e.to_monomial()?;
    if m.is_one() {
        return Ok(RatFunc::zero());
    }
    let num = &LaurentPoly::one() - &LaurentPoly::monomial(1.into(), m);
    Ok(RatFunc::from_poly(num).mul(&q_minus_q_inv_inverse()))
}

fn q_minus_q_inv_inverse() -> RatFunc {
    QProduct::binomial(Monomial::q(1), -1).pow(-1).to_ratfunc()
}

/// `Σ_ν (−1)^{[ν]} m_ν χ_ν(c)^k · (χ_Λ(Γ₀)/χ_ν(Γ₀)) · (D⁰_q(ν)/D⁰_q(Λ))`
/// with `μ = Λ` the table's highest weight.
pub fn casimir_eigenvalues_typical(t: &DecompTable, k: u32) -> Result<RatFunc> {
    let lam = &t.lam_alpha;
    let mut acc = RatFunc::zero();
    for (i, term) in t.terms.iter().enumerate() {
        let chi = chi_nu_c(&t.rs, lam, lam, &term.nu)?.pow(k as i64)?;
        let w = term_weight(t, i)?.to_ratfunc();
        let s = term.sign() * term.multiplicity() as i64;
        acc = acc.add(&chi.mul(&w).scale(s));
    }
    Ok(acc)
}

/// A branching term left out because its atypicality differs from `μ`'s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedTerm {
    pub index: usize,
    pub a_nu: usize,
    pub a_mu: usize,
}

/// Product of `[(λ+ρ, β)]_q` over the odd positive roots with
/// `(λ+ρ, β) ≠ 0`.
fn reduced_gamma(rs: &RootSystem, lam: &Weight) -> Result<QProduct> {
    let shifted = lam + &rs.rho;
    let mut out = QProduct::one();
    for beta in &rs.odd_pos {
        let v = rs.pair(&shifted, beta);
        if !v.is_zero() {
            out = out * crate::superalg::bracket(v)?;
        }
    }
    Ok(out)
}

/// Casimir eigenvalue on a unitary module `V(μ)`, summing over the
/// branching terms `V₀(ν) ⊂ V₀(μ) ⊗ V(Λ)` whose atypicality equals that of
/// `μ`. `branching.lam_alpha` plays the role of `Λ`.
pub fn casimir_eigenvalues_unitary(
    rs: &RootSystem,
    mu: &Weight,
    branching: &DecompTable,
    k: u32,
) -> Result<(RatFunc, Vec<SkippedTerm>)> {
    let a_mu = rs.atypicality_index(mu);
    let g_mu = reduced_gamma(rs, mu)?;
    let d_mu = rs.q_dimension_product(mu)?;
    let mut acc = RatFunc::zero();
    let mut skipped = Vec::new();
    for (index, term) in branching.terms.iter().enumerate() {
        let a_nu = rs.atypicality_index(&term.nu);
        if a_nu != a_mu {
            skipped.push(SkippedTerm { index, a_nu, a_mu });
            continue;
        }
        let w = g_mu.clone() / reduced_gamma(rs, &term.nu)? * rs.q_dimension_product(&term.nu)? / d_mu.clone();
        let chi = chi_nu_c(rs, mu, &branching.lam_alpha, &term.nu)?.pow(k as i64)?;
        let s = term.sign() * term.multiplicity() as i64;
        acc = acc.add(&chi.mul(&w.to_ratfunc()).scale(s));
    }
    Ok((acc, skipped))
}
