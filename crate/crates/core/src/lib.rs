//! Unoriented Schur and Bogomolov multipliers of finite groups.
//!
//! The library computes M(G;Z2) = H^2(G;F2) by two independent routes
//! (normalized 2-cocycles and the square-cover Hopf formula), the
//! unoriented Bogomolov multiplier B0(G;Z2) by two more (surface-class
//! functionals and restriction kernels), verifies the universal relation
//! calculus for the free group on commutator/unoriented-commutator/square
//! symbols, and decides whether a free action on a closed unoriented
//! surface extends over a compact 3-manifold.

pub mod error;

pub mod cob;
pub mod cohom;
pub mod extensions;
pub mod f2la;
pub mod grp;
pub mod hopf;
pub mod mult;
pub mod relcalc;

pub use error::{Error, Result};
