use std::fmt;

use crate::error::{Error, Result};
use crate::superalg::{AlgebraKind, AlphaAffine, Weight};

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ λ_t > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    pub rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::NotAllowable(format!("{rows:?}"), 0, 0));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row length with the convention `λ_i = 0` past the last row (1-based).
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based).
    pub fn column(&self, j: usize) -> usize {
        self.rows.iter().filter(|&&r| r >= j).count()
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.row(1);
        YoungDiagram {
            rows: (1..=width).map(|j| self.column(j)).collect(),
        }
    }

    /// At most `m` rows and `n` columns.
    pub fn fits(&self, m: usize, n: usize) -> bool {
        self.len() <= m && self.row(1) <= n
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn partitions_into(total: usize, max_part: usize, max_len: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
    if total == 0 {
        out.push(YoungDiagram { rows: prefix.clone() });
        return;
    }
    if max_len == 0 {
        return;
    }
    for part in (1..=max_part.min(total)).rev() {
        prefix.push(part);
        partitions_into(total - part, part, max_len - 1, prefix, out);
        prefix.pop();
    }
}

/// All diagrams with at most `m` rows and `n` columns, ordered by size and
/// then reverse-lexicographically on the rows (`[2]` before `[1,1]`).
pub fn enumerate_allowable(m: usize, n: usize) -> Vec<YoungDiagram> {
    let mut out = Vec::new();
    for total in 0..=m * n {
        partitions_into(total, n, m, &mut Vec::new(), &mut out);
    }
    out
}

/// `(0,…,0, −λ_t, …, −λ₁ | λ'₁, …, λ'_n)` where `λ'` is the conjugate
/// partition.
pub fn diagram_weight(m: usize, n: usize, d: &YoungDiagram) -> Result<Weight> {
    if !d.fits(m, n) {
        return Err(Error::NotAllowable(d.to_string(), m, n));
    }
    let kind = AlgebraKind::gl(m, n);
    let mut coords = Vec::with_capacity(m + n);
    for i in (1..=m).rev() {
        coords.push(AlphaAffine::int(-(d.row(i) as i64)));
    }
    for j in 1..=n {
        coords.push(AlphaAffine::int(d.column(j) as i64));
    }
    Weight::new(kind, coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(a: usize, b: usize) -> usize {
        (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
    }

    #[test]
    fn gl22_diagrams_in_order() {
        let shown: Vec<String> = enumerate_allowable(2, 2).iter().map(|d| d.to_string()).collect();
        assert_eq!(shown, ["[]", "[1]", "[2]", "[1,1]", "[2,1]", "[2,2]"]);
        let cols: Vec<usize> = enumerate_allowable(3, 1).iter().map(|d| d.len()).collect();
        assert_eq!(cols, [0, 1, 2, 3]);
        assert_eq!(enumerate_allowable(1, 1).len(), 2);
    }

    #[test]
    fn counts_are_binomial() {
        for m in 1..=5 {
            for n in 1..=5 {
                assert_eq!(enumerate_allowable(m, n).len(), binomial(m + n, m), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn weights_of_diagrams() {
        let k = AlgebraKind::gl(2, 2);
        let one = YoungDiagram::new(vec![1]).unwrap();
        assert_eq!(diagram_weight(2, 2, &one).unwrap(), Weight::from_ints(k, &[0, -1, 1, 0]).unwrap());
        let full = YoungDiagram::new(vec![2, 2]).unwrap();
        assert_eq!(diagram_weight(2, 2, &full).unwrap(), Weight::from_ints(k, &[-2, -2, 2, 2]).unwrap());
        assert_eq!(diagram_weight(2, 2, &YoungDiagram::empty()).unwrap(), Weight::zero(k));
        let too_wide = YoungDiagram::new(vec![3]).unwrap();
        assert!(matches!(diagram_weight(2, 2, &too_wide), Err(Error::NotAllowable(..))));
    }

    #[test]
    fn conjugation() {
        let d = YoungDiagram::new(vec![3, 1]).unwrap();
        assert_eq!(d.conjugate().rows, vec![2, 1, 1]);
        assert_eq!(d.conjugate().conjugate(), d);
    }
}
