use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::arith::QuadExponent;
use crate::error::{Error, Result};

/// `gl(m|n)` or `osp(2|2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    Gl { m: usize, n: usize },
    Osp { n: usize },
}

impl AlgebraKind {
    pub fn gl(m: usize, n: usize) -> Self {
        AlgebraKind::Gl { m, n }
    }

    pub fn osp(n: usize) -> Self {
        AlgebraKind::Osp { n }
    }

    /// Number of basis vectors of `H*`.
    pub fn basis_len(&self) -> usize {
        match *self {
            AlgebraKind::Gl { m, n } => m + n,
            AlgebraKind::Osp { n } => 1 + n,
        }
    }

    /// Number of odd positive roots.
    pub fn odd_root_count(&self) -> usize {
        match *self {
            AlgebraKind::Gl { m, n } => m * n,
            AlgebraKind::Osp { n } => 2 * n,
        }
    }

    /// Coordinates before the `|` separator of a weight literal.
    fn left_len(&self) -> usize {
        match *self {
            AlgebraKind::Gl { m, .. } => m,
            AlgebraKind::Osp { .. } => 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            AlgebraKind::Gl { m, n } if m >= 1 && n >= 1 => Ok(()),
            AlgebraKind::Gl { m, n } => Err(Error::InvalidRank { m: m as i64, n: n as i64 }),
            AlgebraKind::Osp { n } if n >= 1 => Ok(()),
            AlgebraKind::Osp { n } => Err(Error::InvalidRank { m: 2, n: n as i64 }),
        }
    }
}

/// `gl:m,n` or `osp:n`.
impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Gl { m, n } => write!(f, "gl:{m},{n}"),
            AlgebraKind::Osp { n } => write!(f, "osp:{n}"),
        }
    }
}

impl FromStr for AlgebraKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::SchemaError(format!("algebra {s:?}: expected gl:M,N or osp:N"));
        let (tag, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = rest
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let kind = match (tag.trim(), nums.as_slice()) {
            ("gl", [m, n]) => AlgebraKind::gl(*m, *n),
            ("osp", [n]) => AlgebraKind::osp(*n),
            _ => return Err(bad()),
        };
        kind.validate()?;
        Ok(kind)
    }
}

/// `c + a·α` with rational `c`, `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AlphaAffine {
    pub c: Rational64,
    pub a: Rational64,
}

impl AlphaAffine {
    pub fn new(c: Rational64, a: Rational64) -> Self {
        AlphaAffine { c, a }
    }

    pub fn int(c: i64) -> Self {
        Self::new(c.into(), Rational64::zero())
    }

    pub fn alpha(a: i64) -> Self {
        Self::new(Rational64::zero(), a.into())
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero() && self.a.is_zero()
    }

    pub fn at(&self, alpha0: Rational64) -> Rational64 {
        self.c + self.a * alpha0
    }

    /// Product of two affine values as a quadratic exponent.
    pub fn times(&self, o: &AlphaAffine) -> QuadExponent {
        QuadExponent::new(self.c * o.c, self.c * o.a + self.a * o.c, self.a * o.a)
    }
}

impl Add for AlphaAffine {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        AlphaAffine::new(self.c + o.c, self.a + o.a)
    }
}

impl Sub for AlphaAffine {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        AlphaAffine::new(self.c - o.c, self.a - o.a)
    }
}

impl Neg for AlphaAffine {
    type Output = Self;
    fn neg(self) -> Self {
        AlphaAffine::new(-self.c, -self.a)
    }
}

impl Mul<Rational64> for AlphaAffine {
    type Output = Self;
    fn mul(self, s: Rational64) -> Self {
        AlphaAffine::new(self.c * s, self.a * s)
    }
}

impl fmt::Display for AlphaAffine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alpha_part = |a: Rational64| {
            if a.is_one() {
                "al".to_string()
            } else if a == -Rational64::one() {
                "-al".to_string()
            } else {
                format!("{a}*al")
            }
        };
        match (self.c.is_zero(), self.a.is_zero()) {
            (_, true) => write!(f, "{}", self.c),
            (true, false) => write!(f, "{}", alpha_part(self.a)),
            (false, false) => {
                let tail = alpha_part(self.a.abs());
                let sign = if self.a.is_negative() { '-' } else { '+' };
                write!(f, "{}{sign}{tail}", self.c)
            }
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational64> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().ok()?;
            let d: i64 = d.trim().parse().ok()?;
            (d != 0).then(|| Rational64::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational64::from),
    }
}

impl FromStr for AlphaAffine {
    type Err = Error;

    /// Accepts `r`, `r+s*al`, `r-al`, `s*al`, `al` and similar sums.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::WeightLiteral(format!("cannot read coordinate {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('*') {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);
        let mut out = AlphaAffine::default();
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(b) => (-Rational64::one(), b),
                None => (Rational64::one(), piece.strip_prefix('+').unwrap_or(piece)),
            };
            if let Some(coef) = body.strip_suffix("al") {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let v = if coef.is_empty() { Rational64::one() } else { parse_rational(coef).ok_or_else(bad)? };
                out.a += sign * v;
            } else {
                out.c += sign * parse_rational(body).ok_or_else(bad)?;
            }
        }
        Ok(out)
    }
}

/// A weight in `H*`, in coordinates `ε₁…ε_m | δ₁…δ_n` for `gl(m|n)` and
/// `ε₀ | ε₁…ε_n` for `osp(2|2n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub kind: AlgebraKind,
    pub coords: Vec<AlphaAffine>,
}

impl Weight {
    pub fn new(kind: AlgebraKind, coords: Vec<AlphaAffine>) -> Result<Self> {
        if coords.len() != kind.basis_len() {
            return Err(Error::WeightLiteral(format!(
                "{} coordinates given, {} expected for {kind}",
                coords.len(),
                kind.basis_len()
            )));
        }
        Ok(Weight { kind, coords })
    }

    pub fn zero(kind: AlgebraKind) -> Self {
        Weight {
            kind,
            coords: vec![AlphaAffine::default(); kind.basis_len()],
        }
    }

    pub fn from_ints(kind: AlgebraKind, v: &[i64]) -> Result<Self> {
        Self::new(kind, v.iter().map(|x| AlphaAffine::int(*x)).collect())
    }

    /// The basis vector with index `i`.
    pub fn unit(kind: AlgebraKind, i: usize) -> Self {
        let mut w = Self::zero(kind);
        w.coords[i] = AlphaAffine::int(1);
        w
    }

    /// `δ = Σ δ_j` for `gl(m|n)`, `ε₀` for `osp(2|2n)`: the direction of the
    /// one-parameter family `Λ + αδ`.
    pub fn family_direction(kind: AlgebraKind) -> Self {
        let mut w = Self::zero(kind);
        match kind {
            AlgebraKind::Gl { m, .. } => {
                for c in &mut w.coords[m..] {
                    *c = AlphaAffine::int(1);
                }
            }
            AlgebraKind::Osp { .. } => w.coords[0] = AlphaAffine::int(1),
        }
        w
    }

    pub fn scale(&self, s: Rational64) -> Self {
        Weight {
            kind: self.kind,
            coords: self.coords.iter().map(|c| *c * s).collect(),
        }
    }

    /// Multiplies every coordinate by the symbol `α` (coordinates must be
    /// free of `α`).
    pub fn times_alpha(&self) -> Self {
        Weight {
            kind: self.kind,
            coords: self
                .coords
                .iter()
                .map(|c| {
                    debug_assert!(c.a.is_zero());
                    AlphaAffine::new(Rational64::zero(), c.c)
                })
                .collect(),
        }
    }

    pub fn at(&self, alpha0: Rational64) -> Vec<Rational64> {
        self.coords.iter().map(|c| c.at(alpha0)).collect()
    }

    pub fn is_free_of_alpha(&self) -> bool {
        self.coords.iter().all(|c| c.a.is_zero())
    }

    pub fn parse(kind: AlgebraKind, s: &str) -> Result<Self> {
        let bad = |why: &str| Error::WeightLiteral(format!("{s:?}: {why}"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| bad("expected parentheses"))?;
        let (left, right) = inner.split_once('|').ok_or_else(|| bad("expected '|'"))?;
        let read = |part: &str| -> Result<Vec<AlphaAffine>> {
            if part.trim().is_empty() {
                return Ok(Vec::new());
            }
            part.split(',').map(str::parse).collect()
        };
        let l = read(left)?;
        let r = read(right)?;
        if l.len() != kind.left_len() {
            return Err(bad("wrong number of coordinates before '|'"));
        }
        Weight::new(kind, [l, r].concat())
    }

    fn check_kind(&self, other: &Weight) -> Result<()> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch)
        }
    }

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        self.check_kind(other)?;
        Ok(self + other)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        assert_eq!(self.kind, o.kind, "weights of different algebras");
        Weight {
            kind: self.kind,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        assert_eq!(self.kind, o.kind, "weights of different algebras");
        Weight {
            kind: self.kind,
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-Rational64::one())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.kind.left_len();
        let join = |xs: &[AlphaAffine]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.coords[..k]), join(&self.coords[k..]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn affine_literals() {
        let x: AlphaAffine = "1/2+3*al".parse().unwrap();
        assert_eq!(x, AlphaAffine::new(Rational64::new(1, 2), 3.into()));
        let y: AlphaAffine = " -al - 2 ".parse().unwrap();
        assert_eq!(y, AlphaAffine::new((-2).into(), (-1).into()));
        let z: AlphaAffine = "-2/3*al".parse().unwrap();
        assert_eq!(z, AlphaAffine::new(0.into(), Rational64::new(-2, 3)));
        assert!("1+x".parse::<AlphaAffine>().is_err());
        for v in [x, y, z, AlphaAffine::int(-4), AlphaAffine::alpha(1)] {
            assert_eq!(v.to_string().parse::<AlphaAffine>().unwrap(), v);
        }
    }

    #[test]
    fn weight_literals_round_trip() {
        let k = AlgebraKind::gl(2, 2);
        let w = Weight::parse(k, "(0,-1 | 2*al+1, 2*al)").unwrap();
        assert_eq!(w.to_string(), "(0,-1|1+2*al,2*al)");
        assert_eq!(Weight::parse(k, &w.to_string()).unwrap(), w);
        let o = Weight::parse(AlgebraKind::osp(2), "(2*al-3|1,0)").unwrap();
        assert_eq!(o.coords[0], AlphaAffine::new((-3).into(), 2.into()));
        assert!(Weight::parse(k, "(0|1,2,3)").is_err());
    }

    #[test]
    fn algebra_tags() {
        assert_eq!("gl:2,1".parse::<AlgebraKind>().unwrap(), AlgebraKind::gl(2, 1));
        assert_eq!("osp:3".parse::<AlgebraKind>().unwrap().to_string(), "osp:3");
        assert!(matches!("gl:0,1".parse::<AlgebraKind>(), Err(Error::InvalidRank { .. })));
    }
}
