//! Computational core for the type `A_n` hypergeometric system.
//!
//! The crate is `no_std` (it only needs `alloc`) and is organised bottom-up:
//!
//! - [`root_system`]: exact rational geometry of `A_n` (roots, `rho`, Weyl action, dominance).
//! - [`diagrams`]: triangular diagrams, their bijection with the symmetric group, lengths,
//!   reduced words, generating functions and Gelfand-Zetlin patterns.
//! - [`harish_chandra`]: asymptotic series solutions and symbols of commuting operators.
//! - [`cycles`]: the tower-of-loops cycles, the multivalued integrand and its quadrature.
//! - [`closed_forms`]: Gamma-product evaluators for leading coefficients and limit values.
//!
//! Floating point only appears in [`cycles`], [`closed_forms`], [`special`] and in series
//! evaluation; everything combinatorial or algebraic is exact.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod closed_forms;
pub mod cycles;
pub mod diagrams;
pub mod error;
pub mod harish_chandra;
pub mod poly;
pub mod rational;
pub mod root_system;
pub mod special;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use rational::Rational;
