//! Postulation of fat point schemes in projective space.
//!
//! A fat point `mP` imposes `binom(n+m-1, n)` linear conditions on the degree-d
//! forms of `P^n`; a general union of fat points has *good postulation* when
//! those conditions are independent, i.e. when the Hermite interpolation matrix
//! at the points has maximal rank. This crate decides that question by exact
//! rank computation over a prime field (default GF(31991)), cross-checks small
//! instances against an exact-rational oracle, and mechanically verifies the
//! ledger of a Horace-differential induction for unions of 4-, 3- and 2-points
//! of `P^3` in degree `d >= 41`.
//!
//! The main entry points are [`interp::check_postulation`] for a single
//! verdict, [`sweep`] for batch evaluation of the boundary window, and
//! [`horace::run_induction`] for an induction trace.

pub mod binom;
pub mod error;
pub mod field;
pub mod horace;
pub mod interp;
pub mod matrix;
pub mod rational;
pub mod scheme;
pub mod seed;
pub mod sweep;
pub mod tables;

pub use error::Error;
pub use field::PrimeField;
pub use interp::{check_postulation, oracle_check, CheckConfig, PostulationReport, Verdict};
pub use matrix::DenseMatrix;
pub use scheme::{FatPointComponent, FatPointScheme, Support};

/// The characteristic used for all published computations.
pub const DEFAULT_PRIME: u32 = 31991;

/// Result alias for this crate.
pub type Result<T> = std::result::Result<T, Error>;
