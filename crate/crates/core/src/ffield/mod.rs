//! Exact arithmetic over GF(p) and the dense matrix kernels everything else
//! is built on.

pub mod echelon;
mod field;
mod matrix;
pub mod poly;
pub mod serial;
pub mod subspace;

pub use field::{is_prime, FieldElement, Fp, MAX_MODULUS};
pub use matrix::{Matrix, Rref};
