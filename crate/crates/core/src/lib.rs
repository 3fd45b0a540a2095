//! Exact intersection theory on the symmetric powers `C_d` of a smooth
//! projective curve `C` of genus `g`.
//!
//! Everything lives in the `(θ, x)` subring of the cohomology of `C_d`:
//! `x` is the class of `C_{d-1} + p` and `θ` is the pullback of a theta
//! divisor under the Abel map. Top-degree products are evaluated with the
//! Poincaré formula `x^k θ^(d-k) = g!/(g-d+k)!`.
//!
//! The crate is `no_std` and only needs `alloc`. All arithmetic is exact
//! (arbitrary-precision rationals); nothing in here ever touches a float.
//!
//! * [`exact_arith`]: rationals, factorials, generalized binomials and small
//!   truncated power series used for coefficient extraction.
//! * [`ns_ring`]: formal classes `Σ c_k x^k θ^(c-k)` and their top-degree
//!   evaluation.
//! * [`class_catalog`]: named cycle classes (subordinate loci, diagonals,
//!   the ramification divisor `D_d`, `E_(k)`, `C^1_d` on hyperelliptic
//!   curves) with independent oracles where one exists.
//! * [`residuation`]: the linear action of residuation on `N^1`.
//! * [`cone_volume`]: effective/nef cone data and the known volume formulas.
//! * [`identity_suite`]: sweeps that re-derive every identity and report
//!   pass/fail per check.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod class_catalog;
pub mod cone_volume;
pub mod exact_arith;
pub mod identity_suite;
pub mod ns_ring;
pub mod residuation;

pub use error::Error;
pub use exact_arith::{Integer, Rational};

pub type Result<T, E = Error> = core::result::Result<T, E>;
