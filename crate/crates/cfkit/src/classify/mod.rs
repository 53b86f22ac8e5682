//! Convergence and divergence analysis.

pub mod limits;
