//! The invariant suites behind `check`.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::qpow;
use crate::decomp::{builtin_table, diagram_weight, enumerate_allowable, gl21_adjoint_table, DecompTable};
use crate::engine::{link_polynomial_with, spectral_recurrence_with, BraidSpec, XiSeries};
use crate::error::Result;
use crate::oracle::{builtin_cases, discrepancy_report, run_cases, CheckEntry, Discrepancy};
use crate::superalg::{make_algebra, AlgebraKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Markov,
    Recurrence,
    Oracle,
    Dimension,
    All,
}

impl Suite {
    pub fn includes(&self, other: Suite) -> bool {
        *self == Suite::All || *self == other
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "markov" => Ok(Suite::Markov),
            "recurrence" => Ok(Suite::Recurrence),
            "oracle" => Ok(Suite::Oracle),
            "dimension" => Ok(Suite::Dimension),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteEntry {
    pub case: String,
    pub pass: bool,
    pub detail: String,
}

/// Every built-in table: `gl(m|n)` vector families for `m, n ≤ 3`, the
/// `osp(2|2n)` families for `n ≤ 3` and the `gl(2|1)` adjoint family.
pub fn builtin_tables() -> Result<Vec<(String, DecompTable)>> {
    let mut out = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            out.push((format!("gl:{m},{n}/vector"), builtin_table(AlgebraKind::gl(m, n), "vector")?));
        }
    }
    for n in 1..=3 {
        out.push((format!("osp:{n}/vector"), builtin_table(AlgebraKind::osp(n), "vector")?));
    }
    out.push(("gl:2,1/adjoint".into(), gl21_adjoint_table()));
    Ok(out)
}

fn entry(case: &str, pass: bool, detail: impl Into<String>) -> SuiteEntry {
    SuiteEntry {
        case: case.to_string(),
        pass,
        detail: detail.into(),
    }
}

/// `ξ₀ = 0`, `ξ_{±1} = q^{±C(Λ)}` and the unknot value `1`.
pub fn markov_suite() -> Result<Vec<SuiteEntry>> {
    builtin_tables()?
        .par_iter()
        .map(|(name, t)| {
            let s = XiSeries::new(t)?;
            let c = s.casimir();
            let zero = s.xi(0).is_zero();
            let plus = s.xi(1) == qpow(c)?;
            let minus = s.xi(-1) == qpow(-c)?;
            let unknot = link_polynomial_with(&s, &BraidSpec::new(vec![1]))?.is_one();
            let pass = zero && plus && minus && unknot;
            Ok(entry(name, pass, format!("xi0=0:{zero} xi1:{plus} xi-1:{minus} unknot:{unknot}")))
        })
        .collect()
}

/// The tables the recurrence suite runs on.
pub fn recurrence_tables() -> Result<Vec<(String, DecompTable)>> {
    Ok(builtin_tables()?
        .into_iter()
        .filter(|(n, _)| ["gl:1,1/vector", "gl:2,1/vector", "gl:2,2/vector", "osp:1/vector", "osp:2/vector"].contains(&n.as_str()))
        .collect())
}

/// Spectral recurrence with `kmax = 2·#terms + 2`.
pub fn recurrence_suite() -> Result<Vec<SuiteEntry>> {
    recurrence_tables()?
        .par_iter()
        .map(|(name, t)| {
            let kmax = 2 * t.terms.len() as i64 + 2;
            let r = spectral_recurrence_with(&XiSeries::new(t)?, kmax)?;
            Ok(entry(
                name,
                r.passed,
                format!("kmax={kmax} degree={} windows={} first_failure={:?}", r.degree, r.windows_checked, r.first_failure),
            ))
        })
        .collect()
}

/// `Σ_λ dim V₀(Λ_[λ]) = 2^{mn}` over the allowable diagrams.
pub fn dimension_suite() -> Result<Vec<SuiteEntry>> {
    let mut out = Vec::new();
    for m in 1..=3 {
        for n in 1..=3 {
            let rs = make_algebra(AlgebraKind::gl(m, n))?;
            let mut total = 0u64;
            for d in enumerate_allowable(m, n) {
                total += rs.classical_dim0(&diagram_weight(m, n, &d)?, 0.into())?;
            }
            let want = 1u64 << (m * n);
            out.push(entry(&format!("gl:{m},{n}"), total == want, format!("sum={total} expected={want}")));
        }
    }
    Ok(out)
}

pub fn oracle_suite() -> Vec<CheckEntry> {
    run_cases(&builtin_cases())
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub markov: Option<Vec<SuiteEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recurrence: Option<Vec<SuiteEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<Vec<SuiteEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<CheckEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancies: Option<Vec<Discrepancy>>,
}

impl Report {
    pub fn passed(&self) -> bool {
        let ok = |v: &Option<Vec<SuiteEntry>>| v.iter().flatten().all(|e| e.pass);
        ok(&self.markov)
            && ok(&self.recurrence)
            && ok(&self.dimension)
            && self.oracle.iter().flatten().all(|e| e.pass)
            && self.discrepancies.iter().flatten().all(|d| d.resolved())
    }

    /// Zeroes wall times so that the rendering is reproducible.
    pub fn without_timings(mut self) -> Self {
        for e in self.oracle.iter_mut().flatten() {
            e.millis = 0;
        }
        self
    }
}

/// Runs the requested suites; each list is in a fixed order.
pub fn run_suite(suite: Suite) -> Result<Report> {
    let mut r = Report::default();
    if suite.includes(Suite::Markov) {
        r.markov = Some(markov_suite()?);
    }
    if suite.includes(Suite::Recurrence) {
        r.recurrence = Some(recurrence_suite()?);
    }
    if suite.includes(Suite::Dimension) {
        r.dimension = Some(dimension_suite()?);
    }
    if suite.includes(Suite::Oracle) {
        r.oracle = Some(oracle_suite());
        r.discrepancies = Some(discrepancy_report()?);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_suite_passes() {
        let d = dimension_suite().unwrap();
        assert_eq!(d.len(), 9);
        assert!(d.iter().all(|e| e.pass), "{d:?}");
        assert_eq!(d[4].detail, "sum=16 expected=16");
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("fast".parse::<Suite>().is_err());
        assert!(Suite::All.includes(Suite::Oracle));
        assert!(!Suite::Markov.includes(Suite::Oracle));
    }
}
