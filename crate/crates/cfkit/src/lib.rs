//! # cfkit
//!
//! Evaluation, transformation and convergence classification of generalized
//! continued fractions
//! `b_0 + a_1/(b_1 + a_2/(b_2 + ...))`
//! over two scalar backends: exact Gaussian rationals and arbitrary-precision
//! complex binary floats.
//!
//! Functionality map:
//!
//! - [`numerics`] — scalar backends, the Riemann sphere, the chordal metric;
//! - [`cf`] — coefficient sources and the three-term convergent engine
//!   (classical and modified approximants, denominator-ratio diagnostics);
//! - [`transforms`] — equivalence rewrites, unit-numerator/unit-denominator
//!   normal forms, odd/even contraction through the prescribed-approximant
//!   construction;
//! - [`qcf`] — polynomial q-continued-fraction families over Z[q][x]:
//!   grammar, parser, instantiation, degree-law validation, built-in
//!   registry;
//! - [`classify`] — subsequence limit estimation, the vanishing-sum
//!   divergence test, the bounded-denominator/bounded-ratio divergence
//!   certificate, the degree trichotomy for general families, tail-growth
//!   monitoring and general-convergence probing;
//! - [`batch`] — data-parallel sweeps over grids of evaluation points.

#![forbid(unsafe_code)]

pub mod batch;
pub mod cf;
pub mod classify;
mod error;
pub mod numerics;
pub mod qcf;
pub mod transforms;

pub use error::Error;
