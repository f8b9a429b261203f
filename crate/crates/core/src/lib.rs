//! Exact arithmetic for Dehn filling on manifolds with torus boundary.
//!
//! The crate is organised by subsystem:
//!
//! - [`lattice`]: peripheral classes, slopes, distance and filling homology orders.
//! - [`seminorm`]: seminorms built from integer ideal-point functionals, their
//!   minimal value and fundamental ball.
//! - [`bounds`]: finite/cyclic filling bounds and torus-knot surgery classification.
//! - [`charvar`]: numeric PSL(2,C) representations of free products of two cyclic groups.
//! - [`seifert`]: 2-orbifolds, Seifert fibered spaces, presentations and first homology.
//! - [`cable`]: solid-torus fillings of cable spaces.
//! - [`pretzel`]: Farey edge-path twist numbers and boundary slopes.
//! - [`cli`]: the `dehn` command-line front end.

pub mod bounds;
pub mod cable;
pub mod charvar;
pub mod cli;
mod error;
pub mod lattice;
pub mod pretzel;
pub mod seifert;
pub mod seminorm;
mod serde_int;
pub mod word;

pub use error::{Error, Result};

/// Arbitrary precision integer used throughout the exact modules.
pub type Int = num_bigint::BigInt;
/// Exact rational over [`Int`].
pub type Rational = num_rational::BigRational;
