//! Exponent-pair calculus and zeta-function numerics for hybrid fourth-moment
//! experiments.
//!
//! The crate has two halves. [`exponent_calculus`] works entirely in exact
//! rational arithmetic: exponent pairs, the van der Corput A and B processes,
//! linear-fractional objectives and the σ-threshold formulas for mean values of
//! `|ζ(1/2+it)|⁴|ζ(σ+it)|^{2j}`. The numeric half ([`zeta_engine`],
//! [`dirichlet_sums`], [`moment_lab`]) evaluates ζ, χ, the approximate
//! functional equations, divisor-weighted Dirichlet sums and the moment
//! integrals themselves at desk scale.
//!
//! Data-parallel loops (panel quadrature, grid scans, pair enumeration) run
//! through [`exec::Execution`], which falls back to serial evaluation when the
//! `parallel` feature is disabled. Reductions always happen in a fixed order,
//! so serial and parallel runs are bit-identical.

// `!(x > 0.0)` style guards are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod dirichlet_sums;
pub mod exec;
pub mod exponent_calculus;
pub mod format;
pub mod moment_lab;
pub mod quadrature;
pub mod report;
pub mod summation;
pub mod zeta_engine;

pub use exec::Execution;
pub use exponent_calculus::{ExponentPair, FractionalObjective, PairSet, Rational};
pub use num_complex::Complex64 as ComplexValue;
