//! Fuzzy two-point boundary value problems solved with the fuzzy Laplace
//! transform.
//!
//! The crate is `no_std` (it needs `alloc`) and contains no IO. It is split
//! into four layers:
//!
//! * [`fuzzy`]: parametric fuzzy numbers with affine α-cut branches, their
//!   arithmetic, the Hukuhara difference and the Hausdorff distance.
//! * [`laplace`]: real polynomials, strictly proper rational functions in the
//!   transform variable `p`, closed-form roots, partial fractions and a
//!   table-driven forward/inverse Laplace transform over the basis
//!   `{e^{kx}, cos kx, sin kx, cosh kx, sinh kx}`.
//! * [`solver`]: transforms a constant-coefficient problem
//!   `a·y'' + b·y' + c·y = 0`, `y(0) = A`, `y(L) = B` with fuzzy `A`, `B`
//!   branch by branch, eliminates the unknown initial slopes with the far
//!   boundary condition and returns closed-form lower/upper envelopes for
//!   each differentiability case.
//! * [`validate`]: level-set checks, ODE and boundary residuals and an
//!   independent finite-difference oracle.
//!
//! ```
//! use fbvp_core::fuzzy::FuzzyNumber;
//! use fbvp_core::solver::{solve, DiffCase, FuzzyBvp, Ode};
//!
//! let problem = FuzzyBvp::new(
//!     Ode::new(1.0, -3.0, 2.0),
//!     1.0,
//!     FuzzyNumber::affine(-0.5, 0.5, 1.0, -1.0).unwrap(),
//!     FuzzyNumber::affine(-1.0, 1.0, 1.0, -1.0).unwrap(),
//!     DiffCase::Case11,
//! )
//! .unwrap();
//! let sol = solve(&problem).unwrap();
//! assert!((sol.lower().eval(0.0, 0.0) + 0.5).abs() < 1e-12);
//! ```
#![cfg_attr(not(test), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

mod error;
pub mod fuzzy;
pub mod laplace;
pub(crate) mod math;
pub mod solver;
pub mod validate;

pub use error::Error;

/// Absolute slack used by the fuzzy-number invariant checks.
pub const FUZZY_TOL: f64 = 1e-12;
