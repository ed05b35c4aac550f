//! Root data, invariant form and weight-level quantities for `gl(m|n)` and
//! `osp(2|2n)`.

pub mod roots;
pub mod weight;

pub use roots::{
    atypicality_index, bilinear, bracket, casimir, classical_dim0, gamma0_eigenvalue, make_algebra, q_dimension,
    unitarity_class, RootSystem, Unitarity,
};
pub use weight::{AlgebraKind, AlphaAffine, Weight};
