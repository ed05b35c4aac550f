//! `ξ_k` eigenvalues, Casimir eigenvalues and link polynomials.

pub mod casimir;
pub mod spectral;
pub mod xi;

pub use casimir::{casimir_eigenvalues_typical, casimir_eigenvalues_unitary, chi_nu_c, SkippedTerm};
pub use spectral::{spectral_recurrence_check, spectral_recurrence_with, SpectralReport};
pub use xi::{a_exponent_uniform, eigen_shifts, link_polynomial, link_polynomial_with, term_weight, xi_k, BraidSpec, XiSeries};
