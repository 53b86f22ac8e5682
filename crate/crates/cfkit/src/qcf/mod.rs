//! Polynomial q-continued-fraction families over Z[q][x].
//!
//! A family of period `k` consists of polynomials `f_1..f_k` (and, in
//! general form, `g_0..g_{k-1}`) in Z[q][x]; the fraction's coefficients
//! arise by substituting `x = q^n` cyclically. This module provides the
//! polynomial type and text grammar, family documents and instantiation,
//! degree-law validation, and the registry of built-in fractions.

mod degree;
mod family;
mod parse;
mod poly;
pub mod registry;

pub use degree::{degree_profile, dominance_tail, envelope, DegreeProfile, DegreeViolation, SeqKind};
pub use family::{FamilyForm, QFamily};
pub use parse::parse_polynomial;
pub use poly::{QPolynomial, UniPoly};

#[cfg(test)]
mod tests;
