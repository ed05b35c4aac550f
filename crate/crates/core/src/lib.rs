//! Two-variable link polynomials from type-I quantum superalgebras
//! `U_q[gl(m|n)]` and `U_q[osp(2|2n)]`, computed exactly from Casimir
//! eigenvalues and tensor product decompositions.

pub mod arith;
pub mod decomp;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod suites;
pub mod superalg;

pub use error::{Error, Result};
