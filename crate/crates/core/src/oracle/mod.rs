//! Closed-form transcriptions of `ξ_k` for the built-in families, computed
//! without the root-system machinery, and the plumbing that compares them
//! with the engine.

mod check;
mod formulas;

pub use check::*;
pub use formulas::*;
