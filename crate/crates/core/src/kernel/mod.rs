//! Exact scalars, dense matrices, subspaces and the multilinear engine.

pub mod identity;
pub mod matrix;
pub mod sample;
pub mod scalar;
pub mod subspace;
pub mod tensor;
pub mod vector;

pub use identity::{check_identity, Identity, Method, Variable, Verdict, Witness};
pub use matrix::{CanonicalMode, Matrix};
pub use scalar::{Ring, Scalar};
pub use subspace::Subspace;
pub use tensor::MultilinearMap;
