//! Exact-arithmetic kernel for the ring of integer-valued polynomials.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; there is no floating point and no precision parameter outside
//! the explicitly truncated p-adic and power-series types. The crate is
//! `no_std` (with `alloc`); IO, JSON formats, and the CLI live in the
//! companion `plethys` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod biring;
pub mod ivpoly;
pub mod lambda;
pub mod lattice;
pub mod modint;
pub mod multipoly;
pub mod plethory;
pub mod ratpoly;
pub mod report;
pub mod rng;
pub mod witt;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use num_traits;

/// Shorthand used throughout the crate.
pub type Rat = BigRational;
