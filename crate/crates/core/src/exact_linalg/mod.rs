//! Exact scalar arithmetic, dense matrices and canonical subspaces.
//!
//! Everything above this layer reduces to row reduction over GF(p) or Q.
//! Pivoting always takes the first nonzero entry, so every basis produced
//! here is reproducible bit for bit.

mod field;
mod matrix;
mod subspace;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{kernel_of_rows, rref_rows, Matrix};
pub use subspace::{induced_map_on_quotients, QuotientSpace, Subspace};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("characteristic {0} is neither 0 nor a prime below 2^31")]
    BadCharacteristic(u64),
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("second space is not contained in the first")]
    NotSubspace,
    #[error("map does not respect the given cycle/boundary spaces")]
    MapNotFiltered,
}
