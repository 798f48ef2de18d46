//! Exact structure constants for Jordan pairs, graded Lie algebras and the
//! generalized projective geometries attached to them.
//!
//! Everything works over ℚ or a prime field F_p with p ≥ 5. The crate is
//! `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod error;
pub mod flags;
pub mod geom;
pub mod jordan;
pub mod kernel;
pub mod liealg;
pub mod report;
pub mod states;

pub use error::{Error, Result};
pub use kernel::{Matrix, MultilinearMap, Ring, Scalar, Subspace};

/// Default cap on the size of any exhaustive enumeration.
pub const DEFAULT_MAX_ENUM: u64 = 10_000_000;
