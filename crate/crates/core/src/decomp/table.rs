use std::fmt;
use std::path::Path;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::young::{diagram_weight, enumerate_allowable, YoungDiagram};
use crate::error::{Error, Result};
use crate::superalg::{make_algebra, AlgebraKind, AlphaAffine, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableFamily {
    GlVector,
    Osp,
    Gl21Adjoint,
    UserSupplied,
}

impl TableFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            TableFamily::GlVector | TableFamily::Osp => "vector",
            TableFamily::Gl21Adjoint => "adjoint",
            TableFamily::UserSupplied => "user",
        }
    }
}

impl fmt::Display for TableFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One summand `V(ν)` of `V(Λ)⊗V(Λ)` with its multiplicities in the two
/// eigenspaces `W₊`, `W₋` and its parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompTerm {
    pub nu: Weight,
    pub m_plus: u32,
    pub m_minus: u32,
    pub parity: u8,
}

impl DecompTerm {
    pub fn multiplicity(&self) -> u32 {
        self.m_plus + self.m_minus
    }

    /// `(−1)^{[ν]}`.
    pub fn sign(&self) -> i64 {
        if self.parity == 0 {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone)]
pub struct DecompTable {
    pub rs: RootSystem,
    pub lam_alpha: Weight,
    pub terms: Vec<DecompTerm>,
    pub family: TableFamily,
}

impl PartialEq for DecompTable {
    fn eq(&self, o: &Self) -> bool {
        self.rs.kind == o.rs.kind && self.lam_alpha == o.lam_alpha && self.terms == o.terms && self.family == o.family
    }
}

fn level_term(nu: Weight, level: usize) -> DecompTerm {
    let odd = level % 2 == 1;
    DecompTerm {
        nu,
        m_plus: u32::from(!odd),
        m_minus: u32::from(odd),
        parity: u8::from(odd),
    }
}

/// `V(αδ)⊗V(αδ)` for `gl(m|n)`: one term `Λ_[λ] + 2αδ` per allowable
/// diagram, assigned to `W₊` or `W₋` by the parity of its size.
pub fn gl_family_table(m: usize, n: usize) -> Result<DecompTable> {
    let kind = AlgebraKind::gl(m, n);
    let rs = make_algebra(kind)?;
    let delta = Weight::family_direction(kind).times_alpha();
    let two_delta = delta.scale(2.into());
    let terms = enumerate_allowable(m, n)
        .iter()
        .map(|d| Ok(level_term(&diagram_weight(m, n, d)? + &two_delta, d.size())))
        .collect::<Result<_>>()?;
    Ok(DecompTable {
        rs,
        lam_alpha: delta,
        terms,
        family: TableFamily::GlVector,
    })
}

/// The diagrams of [`gl_family_table`], in term order.
pub fn gl_family_diagrams(m: usize, n: usize) -> Vec<YoungDiagram> {
    enumerate_allowable(m, n)
}

/// `(c, d)` labels of [`osp_family_table`], in term order.
pub fn osp_family_labels(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for c in 0..=n {
        for d in 0..=n - c {
            out.push((c, d));
        }
    }
    out
}

/// `Λ_{c,d} = (2α − c − 2d)ε₀ + ε₁ + … + ε_c`.
pub fn osp_weight(n: usize, c: usize, d: usize) -> Weight {
    let kind = AlgebraKind::osp(n);
    let mut w = Weight::zero(kind);
    w.coords[0] = AlphaAffine::new(Rational64::from(-((c + 2 * d) as i64)), 2.into());
    for i in 1..=c {
        w.coords[i] = AlphaAffine::int(1);
    }
    w
}

/// `V(αε₀)⊗V(αε₀)` for `osp(2|2n)`, with level `c + 2d`.
pub fn osp_family_table(n: usize) -> Result<DecompTable> {
    let kind = AlgebraKind::osp(n);
    let rs = make_algebra(kind)?;
    let terms = osp_family_labels(n)
        .into_iter()
        .map(|(c, d)| level_term(osp_weight(n, c, d), c + 2 * d))
        .collect();
    Ok(DecompTable {
        rs,
        lam_alpha: Weight::family_direction(kind).times_alpha(),
        terms,
        family: TableFamily::Osp,
    })
}

/// The adjoint module `ψ = (1,0|−1)` of `gl(2|1)` shifted by `αδ`.
pub fn gl21_adjoint_table() -> DecompTable {
    let kind = AlgebraKind::gl(2, 1);
    let rs = make_algebra(kind).expect("gl(2|1) is valid");
    let two_delta = Weight::family_direction(kind).times_alpha().scale(2.into());
    let psi = Weight::from_ints(kind, &[1, 0, -1]).unwrap();
    let rows: [([i64; 3], u32, u32, u8); 6] = [
        ([2, 0, -2], 1, 0, 0),
        ([1, 1, -2], 0, 1, 0),
        ([2, -1, -1], 0, 1, 1),
        ([1, 0, -1], 1, 1, 1),
        ([1, -1, 0], 1, 0, 0),
        ([0, 0, 0], 0, 1, 0),
    ];
    let terms = rows
        .iter()
        .map(|(nu, m_plus, m_minus, parity)| DecompTerm {
            nu: &Weight::from_ints(kind, nu).unwrap() + &two_delta,
            m_plus: *m_plus,
            m_minus: *m_minus,
            parity: *parity,
        })
        .collect();
    DecompTable {
        rs,
        lam_alpha: &psi + &Weight::family_direction(kind).times_alpha(),
        terms,
        family: TableFamily::Gl21Adjoint,
    }
}

/// Builds a table by algebra and family name (`vector` or `adjoint`).
pub fn builtin_table(kind: AlgebraKind, family: &str) -> Result<DecompTable> {
    match (kind, family) {
        (AlgebraKind::Gl { m, n }, "vector") => gl_family_table(m, n),
        (AlgebraKind::Osp { n }, "vector") => osp_family_table(n),
        (AlgebraKind::Gl { m: 2, n: 1 }, "adjoint") => Ok(gl21_adjoint_table()),
        _ => Err(Error::SchemaError(format!("no built-in {family:?} table for {kind}"))),
    }
}

impl DecompTable {
    pub fn kind(&self) -> AlgebraKind {
        self.rs.kind
    }

    /// `2^d` with `d` the number of odd positive roots.
    pub fn odd_factor(&self) -> u64 {
        1u64 << self.rs.odd_pos.len()
    }

    /// Checks multiplicities, parities, typicality and the classical
    /// dimension balance `Σ m_ν dim V(ν) = (dim V(Λ))²` at `α = alpha0`.
    pub fn validate(&self, alpha0: Rational64) -> Result<()> {
        if !self.rs.is_typical(&self.lam_alpha) {
            return Err(Error::InvariantViolation {
                index: self.terms.len(),
                reason: format!("highest weight {} is atypical", self.lam_alpha),
            });
        }
        for (index, t) in self.terms.iter().enumerate() {
            let fail = |reason: String| Error::InvariantViolation { index, reason };
            if t.nu.kind != self.kind() {
                return Err(fail("weight belongs to another algebra".into()));
            }
            if t.multiplicity() == 0 {
                return Err(fail("m_plus + m_minus must be at least 1".into()));
            }
            if t.parity > 1 {
                return Err(fail(format!("parity {} is not 0 or 1", t.parity)));
            }
            if !self.rs.is_typical(&t.nu) {
                return Err(fail(format!("{} is atypical", t.nu)));
            }
        }
        let lhs = self.dimension_sum(alpha0)?;
        let top = self.odd_factor() * self.rs.classical_dim0(&self.lam_alpha, alpha0)?;
        if lhs != top * top {
            return Err(Error::InvariantViolation {
                index: self.terms.len(),
                reason: format!("dimension balance fails: {lhs} != {top}^2"),
            });
        }
        Ok(())
    }

    /// `Σ m_ν · 2^d · dim V₀(ν)` at `α = alpha0`.
    pub fn dimension_sum(&self, alpha0: Rational64) -> Result<u64> {
        let mut total = 0;
        for t in &self.terms {
            total += t.multiplicity() as u64 * self.odd_factor() * self.rs.classical_dim0(&t.nu, alpha0)?;
        }
        Ok(total)
    }

    pub fn to_json(&self) -> TableJson {
        let (kind, m, n) = match self.kind() {
            AlgebraKind::Gl { m, n } => ("gl", m, n),
            AlgebraKind::Osp { n } => ("osp", 2, n),
        };
        TableJson {
            algebra: AlgebraJson {
                kind: kind.to_string(),
                m: Some(m),
                n,
            },
            family: self.family.as_str().to_string(),
            highest_weight: self.lam_alpha.to_string(),
            terms: self
                .terms
                .iter()
                .map(|t| TermJson {
                    nu: t.nu.to_string(),
                    m_plus: t.m_plus,
                    m_minus: t.m_minus,
                    parity: t.parity,
                })
                .collect(),
        }
    }

    /// Parses and validates a table. Validation uses a fixed generic `α`.
    pub fn from_json(j: &TableJson) -> Result<DecompTable> {
        let kind = match (j.algebra.kind.as_str(), j.algebra.m) {
            ("gl", Some(m)) => AlgebraKind::gl(m, j.algebra.n),
            ("gl", None) => return Err(Error::SchemaError("gl algebra needs m".into())),
            ("osp", None | Some(2)) => AlgebraKind::osp(j.algebra.n),
            ("osp", Some(m)) => return Err(Error::SchemaError(format!("osp(2|2n) has m = 2, got {m}"))),
            (other, _) => return Err(Error::SchemaError(format!("unknown algebra kind {other:?}"))),
        };
        let rs = make_algebra(kind)?;
        let family = match (j.family.as_str(), kind) {
            ("vector", AlgebraKind::Gl { .. }) => TableFamily::GlVector,
            ("vector", AlgebraKind::Osp { .. }) => TableFamily::Osp,
            ("adjoint", _) => TableFamily::Gl21Adjoint,
            _ => TableFamily::UserSupplied,
        };
        let lam_alpha = Weight::parse(kind, &j.highest_weight)?;
        let terms = j
            .terms
            .iter()
            .enumerate()
            .map(|(index, t)| {
                let nu = Weight::parse(kind, &t.nu).map_err(|e| Error::InvariantViolation {
                    index,
                    reason: e.to_string(),
                })?;
                Ok(DecompTerm {
                    nu,
                    m_plus: t.m_plus,
                    m_minus: t.m_minus,
                    parity: t.parity,
                })
            })
            .collect::<Result<_>>()?;
        let table = DecompTable {
            rs,
            lam_alpha,
            terms,
            family,
        };
        table.validate(Rational64::new(1, 7))?;
        Ok(table)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub nu: String,
    pub m_plus: u32,
    pub m_minus: u32,
    pub parity: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub algebra: AlgebraJson,
    pub family: String,
    pub highest_weight: String,
    pub terms: Vec<TermJson>,
}

pub fn table_from_str(s: &str) -> Result<DecompTable> {
    let j: TableJson = serde_json::from_str(s).map_err(|e| Error::SchemaError(e.to_string()))?;
    DecompTable::from_json(&j)
}

pub fn table_to_string(t: &DecompTable) -> String {
    serde_json::to_string_pretty(&t.to_json()).expect("table serialises")
}

pub fn load_table(path: &Path) -> Result<DecompTable> {
    let s = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    table_from_str(&s)
}

pub fn save_table(t: &DecompTable, path: &Path) -> Result<()> {
    std::fs::write(path, table_to_string(t) + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}
