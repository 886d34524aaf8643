//! Cohomology jump loci of the parafree groups `G(m,n)` and `H(m,n)` in
//! `GL(2,C)`, computed numerically, together with the invariants that tell
//! the groups apart.

pub mod cli;
pub mod distinguish;
pub mod error;
pub mod fox;
pub mod gfamily;
pub mod hfamily;
pub mod numerics;
pub mod sampling;

pub use error::{Error, Result};

/// Largest accepted relation residual `‖ρ(lhs) − ρ(rhs)‖_F` at a constructed point.
pub const RESIDUAL_TOL: f64 = 1e-9;
