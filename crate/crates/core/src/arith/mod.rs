//! Exact arithmetic in the formal variables `q`, `p = q^α` and `A = q^{α²}`.

pub mod cyclo;
pub mod eval;
pub mod monomial;
pub mod poly;
pub mod qnum;
pub mod qprod;
pub mod ratfunc;

pub use eval::{rf_eval, rf_limit_q1, Real};
pub use monomial::{HalfExponent, Monomial};
pub use poly::{LaurentPoly, TermRecord};
pub use qnum::{qnum, qpow, AffineInt, QuadExponent};
pub use qprod::QProduct;
pub use ratfunc::{rf_arith, RatFunc, RatFuncRecord, RfOp};

/// `x + y`.
pub fn lp_add(x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
    x + y
}

/// `x · y`.
pub fn lp_mul(x: &LaurentPoly, y: &LaurentPoly) -> LaurentPoly {
    x * y
}

/// `-x`.
pub fn lp_neg(x: &LaurentPoly) -> LaurentPoly {
    -x
}
