//! Numerical companion to the upper bound `lambda_c(d) <= (2 - gamma_d) / (2 d gamma_d)`
//! for the basic contact process on `Z^d`, `d >= 3`.
//!
//! The crate is organised around the objects the bound is built from:
//!
//! - [`lattice`]: periodic tori for simulation and displacement boxes for the
//!   pair-correlation equations.
//! - [`random_walk`]: the simple random walk return probability `gamma_d`, its
//!   Green function and the hitting function `H(x)`.
//! - [`bounds`]: closed-form critical-value bounds and the `(a, b)` optimizer.
//! - [`ips_sim`]: the contact process and the weighted linear system driven by
//!   one graphical-representation event stream, plus Monte Carlo estimators.
//! - [`moment_ode`]: the pair-correlation operator `G_lambda`, its integration,
//!   and the explicit null vector `K = H + c`.

// range checks are written `!(x > 0.0)` so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod ips_sim;
pub mod lattice;
pub mod moment_ode;
pub mod random_walk;
pub mod rng;
pub mod stats;

pub use error::{Error, Result};
